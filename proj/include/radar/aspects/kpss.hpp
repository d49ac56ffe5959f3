// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <span>
#include <string>

#include "radar/errors.hpp"

namespace radar::aspects {

/// Bartlett lag truncation used for the long-run variance,
/// l = floor(4 * (n/100)^(1/4)).
inline int kpss_lags(std::size_t n) noexcept {
    return static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

/// Level-stationarity KPSS statistic. Residuals are demeaned values; the
/// statistic is (1/n^2) * sum_i S_i^2 over the Bartlett-kernel long-run
/// variance. A constant series is defined to score 0 (stationary).
inline double kpss_statistic(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 8) throw Error(errc::series_too_short, "kpss_statistic: need at least 8 points");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);

    double ss = 0.0;       // sum of squared residuals
    double eta = 0.0;      // sum of squared partial sums
    double partial = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = values[i] - mean;
        ss += e * e;
        partial += e;
        eta += partial * partial;
    }
    if (ss == 0.0) return 0.0;

    const int lags = kpss_lags(n);
    double s_hat = ss;
    for (int lag = 1; lag <= lags; ++lag) {
        double cross = 0.0;
        for (std::size_t i = static_cast<std::size_t>(lag); i < n; ++i)
            cross += (values[i] - mean) * (values[i - static_cast<std::size_t>(lag)] - mean);
        s_hat += 2.0 * (1.0 - static_cast<double>(lag) / (lags + 1.0)) * cross;
    }
    const double long_run_var = s_hat / static_cast<double>(n);
    if (long_run_var <= 0.0)
        throw Error(errc::zero_variance, "kpss_statistic: non-positive long-run variance estimate");
    return eta / (static_cast<double>(n) * static_cast<double>(n)) / long_run_var;
}

/// Tabulated critical values for the level-stationarity test.
inline double kpss_critical_value(double significance) {
    struct Entry {
        double sig;
        double value;
    };
    static constexpr Entry table[] = {{0.10, 0.347}, {0.05, 0.463}, {0.025, 0.574}, {0.01, 0.739}};
    for (const auto& e : table)
        if (std::abs(significance - e.sig) < 1e-9) return e.value;
    throw Error(errc::unsupported_significance,
                "kpss: significance must be one of 0.10, 0.05, 0.025, 0.01");
}

/// True when the null of level stationarity is not rejected, i.e. the
/// statistic does not exceed the critical value.
inline bool kpss_is_stationary(std::span<const double> values, double significance = 0.05) {
    const double critical = kpss_critical_value(significance);
    return kpss_statistic(values) <= critical;
}

}  // namespace radar::aspects
