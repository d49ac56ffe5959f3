// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <span>
#include <string>

#include "radar/errors.hpp"

namespace radar::metrics {

/// Seasonal-naive scaling denominator:
///   (1 / (n - m)) * sum_{i=m..n-1} |y_i - y_{i-m}|   (0-based)
/// Throws ZeroDenominator for seasonally constant in-sample data; callers
/// are expected to exclude such series from aggregates rather than abort.
inline double mase_scaling(std::span<const double> insample, int m) {
    if (m < 1) throw Error(errc::invalid_argument, "mase: seasonal period must be >= 1");
    const std::size_t n = insample.size();
    if (n <= static_cast<std::size_t>(m))
        throw Error(errc::insample_too_short,
                    "mase: insample length " + std::to_string(n) + " <= m " + std::to_string(m));
    double sum = 0.0;
    for (std::size_t i = static_cast<std::size_t>(m); i < n; ++i)
        sum += std::abs(insample[i] - insample[i - static_cast<std::size_t>(m)]);
    const double denom = sum / static_cast<double>(n - static_cast<std::size_t>(m));
    if (denom == 0.0)
        throw Error(errc::zero_denominator, "mase: seasonally constant insample window");
    return denom;
}

/// Mean absolute scaled error: test MAE over the seasonal-naive in-sample MAE.
inline double mase(std::span<const double> test_actuals, std::span<const double> forecasts,
                   std::span<const double> insample, int m) {
    if (test_actuals.size() != forecasts.size())
        throw Error(errc::length_mismatch, "mase: actual/forecast length mismatch");
    if (test_actuals.empty()) throw Error(errc::empty_input, "mase: empty test window");
    const double denom = mase_scaling(insample, m);
    double abs_err = 0.0;
    for (std::size_t i = 0; i < test_actuals.size(); ++i)
        abs_err += std::abs(test_actuals[i] - forecasts[i]);
    const double numerator = abs_err / static_cast<double>(test_actuals.size());
    return numerator / denom;
}

}  // namespace radar::metrics
