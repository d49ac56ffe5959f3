// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "radar/errors.hpp"

namespace radar::aspects {

/// Centered moving-average trend of window m; the 2xm average for even m.
/// Returns one entry per input index, NaN where the window does not fit.
inline std::vector<double> centered_moving_average(std::span<const double> values, int m) {
    const auto n = static_cast<std::ptrdiff_t>(values.size());
    std::vector<double> trend(values.size(), std::numeric_limits<double>::quiet_NaN());
    const int half = m / 2;
    for (std::ptrdiff_t i = half; i + half < n; ++i) {
        double sum = 0.0;
        if (m % 2 == 1) {
            for (int j = -half; j <= half; ++j) sum += values[static_cast<std::size_t>(i + j)];
        } else {
            sum = 0.5 * values[static_cast<std::size_t>(i - half)] +
                  0.5 * values[static_cast<std::size_t>(i + half)];
            for (int j = -half + 1; j <= half - 1; ++j) sum += values[static_cast<std::size_t>(i + j)];
        }
        trend[static_cast<std::size_t>(i)] = sum / static_cast<double>(m);
    }
    return trend;
}

/// Seasonal strength in [0,1] from the classical additive decomposition:
/// detrend with the centered moving average, estimate per-season means
/// (re-centered to sum zero), and compare remainder variance with the
/// detrended variance: strength = max(0, 1 - Var(R)/Var(S+R)). Constant and
/// variance-free detrended series score 0.
inline double seasonal_strength(std::span<const double> values, int m) {
    if (m < 2) throw Error(errc::invalid_argument, "seasonal_strength: m must be >= 2");
    const std::size_t n = values.size();
    if (n < 2 * static_cast<std::size_t>(m))
        throw Error(errc::series_too_short,
                    "seasonal_strength: need at least 2m=" + std::to_string(2 * m) + " points");

    const auto trend = centered_moving_average(values, m);
    std::vector<double> detrended(n, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isnan(trend[i])) detrended[i] = values[i] - trend[i];

    std::vector<double> season_sum(static_cast<std::size_t>(m), 0.0);
    std::vector<int> season_count(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::isnan(detrended[i])) continue;
        season_sum[i % static_cast<std::size_t>(m)] += detrended[i];
        ++season_count[i % static_cast<std::size_t>(m)];
    }
    std::vector<double> season_mean(static_cast<std::size_t>(m), 0.0);
    double grand = 0.0;
    for (int s = 0; s < m; ++s) {
        // n >= 2m guarantees every season has at least one detrended sample
        season_mean[static_cast<std::size_t>(s)] =
            season_sum[static_cast<std::size_t>(s)] / static_cast<double>(season_count[static_cast<std::size_t>(s)]);
        grand += season_mean[static_cast<std::size_t>(s)];
    }
    grand /= static_cast<double>(m);
    for (int s = 0; s < m; ++s) season_mean[static_cast<std::size_t>(s)] -= grand;

    // Var(R) vs Var(S+R) = Var(detrended), over indices with a defined trend
    double sum_d = 0.0, sum_r = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::isnan(detrended[i])) continue;
        sum_d += detrended[i];
        sum_r += detrended[i] - season_mean[i % static_cast<std::size_t>(m)];
        ++count;
    }
    const double mean_d = sum_d / static_cast<double>(count);
    const double mean_r = sum_r / static_cast<double>(count);
    double var_d = 0.0, var_r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::isnan(detrended[i])) continue;
        const double d = detrended[i] - mean_d;
        const double r = (detrended[i] - season_mean[i % static_cast<std::size_t>(m)]) - mean_r;
        var_d += d * d;
        var_r += r * r;
    }
    if (var_d == 0.0) return 0.0;
    return std::clamp(1.0 - var_r / var_d, 0.0, 1.0);
}

/// Threshold test, inclusive at the boundary.
inline bool is_seasonal(double strength, double threshold = 0.6) {
    if (!(strength >= 0.0 && strength <= 1.0))
        throw Error(errc::invalid_argument, "is_seasonal: strength must lie in [0,1]");
    return strength >= threshold;
}

}  // namespace radar::aspects
