// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "radar/errors.hpp"

namespace radar::metrics {

/// One SMAPE term on the 0..200 percent scale:
///   100 * |f - a| / ((|f| + |a|) / 2)
/// The 0/0 case (a == f == 0) is defined as 0, so a perfect forecast always
/// scores zero.
inline double smape_term(double actual, double forecast) noexcept {
    const double denom = (std::abs(forecast) + std::abs(actual)) / 2.0;
    if (denom == 0.0) return 0.0;
    return 100.0 * std::abs(forecast - actual) / denom;
}

inline std::vector<double> smape_points(std::span<const double> actuals,
                                        std::span<const double> forecasts) {
    if (actuals.size() != forecasts.size())
        throw Error(errc::length_mismatch, "smape_points: " + std::to_string(actuals.size()) +
                                               " actuals vs " + std::to_string(forecasts.size()) +
                                               " forecasts");
    if (actuals.empty()) throw Error(errc::empty_input, "smape_points: empty sequences");
    std::vector<double> terms(actuals.size());
    for (std::size_t i = 0; i < actuals.size(); ++i) terms[i] = smape_term(actuals[i], forecasts[i]);
    return terms;
}

inline double smape(std::span<const double> actuals, std::span<const double> forecasts) {
    const auto terms = smape_points(actuals, forecasts);
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum / static_cast<double>(terms.size());
}

}  // namespace radar::metrics
