// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "radar/errors.hpp"

namespace radar::agg {

struct MeanResult {
    double value = 0.0;
    std::size_t n = 0;
};

/// Arithmetic mean over the given losses.
inline MeanResult mean_loss(std::span<const double> losses) {
    if (losses.empty()) throw Error(errc::empty_input, "mean_loss: no losses");
    double sum = 0.0;
    for (double v : losses) sum += v;
    return {sum / static_cast<double>(losses.size()), losses.size()};
}

/// Mean of the floor(alpha*n) largest losses. When the tail is the whole
/// set this reduces to mean_loss (same accumulation, so the identity is
/// exact).
inline MeanResult expected_shortfall(std::span<const double> losses, double alpha) {
    if (losses.empty()) throw Error(errc::empty_input, "expected_shortfall: no losses");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw Error(errc::invalid_argument, "expected_shortfall: alpha must be in (0,1]");
    const auto k = static_cast<std::size_t>(
        std::floor(alpha * static_cast<double>(losses.size())));
    if (k < 1)
        throw Error(errc::alpha_too_small,
                    "expected_shortfall: floor(alpha*n) = 0 for n = " + std::to_string(losses.size()));
    if (k >= losses.size()) return mean_loss(losses);
    std::vector<double> sorted(losses.begin(), losses.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) sum += sorted[i];
    return {sum / static_cast<double>(k), k};
}

struct WinDrawLoss {
    double win = 0.0;
    double draw = 0.0;
    double loss = 0.0;
    std::size_t n = 0;
};

/// Pairwise comparison over aligned per-series losses. Two losses are a
/// draw when their symmetric percentage difference
///   d = 200 * |a - b| / (a + b)        (d = 0 when both are 0)
/// is within the rope threshold; otherwise the lower loss wins. The
/// symmetric form makes the outcome independent of argument order.
inline WinDrawLoss win_draw_loss(std::span<const double> losses_a, std::span<const double> losses_b,
                                 double rope) {
    if (losses_a.size() != losses_b.size())
        throw Error(errc::series_set_mismatch, "win_draw_loss: loss vectors differ in length");
    if (losses_a.empty()) throw Error(errc::empty_input, "win_draw_loss: no losses");
    if (rope < 0.0) throw Error(errc::invalid_argument, "win_draw_loss: rope must be >= 0");
    std::size_t wins = 0, draws = 0;
    for (std::size_t i = 0; i < losses_a.size(); ++i) {
        const double a = losses_a[i];
        const double b = losses_b[i];
        const double d = (a == 0.0 && b == 0.0) ? 0.0 : 200.0 * std::abs(a - b) / (a + b);
        if (d <= rope)
            ++draws;
        else if (a < b)
            ++wins;
    }
    WinDrawLoss out;
    out.n = losses_a.size();
    const auto n = static_cast<double>(out.n);
    out.win = static_cast<double>(wins) / n;
    out.draw = static_cast<double>(draws) / n;
    out.loss = 1.0 - out.win - out.draw;
    return out;
}

namespace detail {
inline MeanResult masked_mean(std::span<const double> values, const std::vector<bool>& mask,
                              const char* who) {
    if (values.size() != mask.size())
        throw Error(errc::length_mismatch, std::string(who) + ": loss/mask length mismatch");
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!mask[i]) continue;
        sum += values[i];
        ++n;
    }
    if (n == 0) throw Error(errc::empty_condition, std::string(who) + ": empty condition");
    return {sum / static_cast<double>(n), n};
}
}  // namespace detail

/// Mean over the masked subset of per-series losses.
inline MeanResult conditional_mean_series(std::span<const double> losses,
                                          const std::vector<bool>& mask) {
    return detail::masked_mean(losses, mask, "conditional_mean_series");
}

/// Mean over masked point losses pooled across all series (a flat double
/// sum, not a per-series average of averages).
inline MeanResult conditional_mean_obs(std::span<const double> point_losses,
                                       const std::vector<bool>& mask) {
    return detail::masked_mean(point_losses, mask, "conditional_mean_obs");
}

}  // namespace radar::agg
