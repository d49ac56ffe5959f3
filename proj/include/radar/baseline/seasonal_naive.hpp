// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "radar/errors.hpp"
#include "radar/metrics/smape.hpp"

namespace radar::baseline {

/// Repeats the last known value from the same seasonal position:
/// forecast for step h = insample[n - m + ((h-1) mod m)].
inline std::vector<double> seasonal_naive_forecast(std::span<const double> insample, int m, int h) {
    if (m < 1 || h < 1) throw Error(errc::invalid_argument, "seasonal_naive_forecast: m and H must be >= 1");
    const std::size_t n = insample.size();
    if (n < static_cast<std::size_t>(m))
        throw Error(errc::insample_too_short,
                    "seasonal_naive_forecast: need at least m=" + std::to_string(m) + " points");
    std::vector<double> forecast(static_cast<std::size_t>(h));
    for (int step = 1; step <= h; ++step)
        forecast[static_cast<std::size_t>(step - 1)] =
            insample[n - static_cast<std::size_t>(m) + static_cast<std::size_t>((step - 1) % m)];
    return forecast;
}

/// Residual scale of the in-sample seasonal-naive fit, sigma^2 =
/// sum(e_i^2) / (k - 1) over the k = n - m one-step residuals
/// e_i = y_i - y_{i-m} (no mean subtraction, the usual forecasting-library
/// convention).
inline double seasonal_naive_sigma(std::span<const double> insample, int m) {
    const std::size_t n = insample.size();
    if (n < static_cast<std::size_t>(m) + 2)
        throw Error(errc::insample_too_short, "seasonal_naive_sigma: need at least two residuals");
    double ss = 0.0;
    for (std::size_t i = static_cast<std::size_t>(m); i < n; ++i) {
        const double e = insample[i] - insample[i - static_cast<std::size_t>(m)];
        ss += e * e;
    }
    const std::size_t k = n - static_cast<std::size_t>(m);
    return std::sqrt(ss / static_cast<double>(k - 1));
}

struct IntervalBounds {
    std::vector<double> lower;
    std::vector<double> upper;
    double sigma = 0.0;
    bool degenerate_sigma = false;  // sigma == 0: zero-width interval
};

/// Gaussian prediction interval around the seasonal-naive forecast with the
/// standard multi-step widening sigma_h = sigma * sqrt(k+1),
/// k = floor((h-1)/m): the band grows at each full seasonal cycle.
inline IntervalBounds seasonal_naive_interval(std::span<const double> insample, int m, int h,
                                              double level) {
    if (!(level > 0.0 && level < 1.0))
        throw Error(errc::invalid_argument, "seasonal_naive_interval: level must be in (0,1)");
    if (insample.size() < 2 * static_cast<std::size_t>(m))
        throw Error(errc::insample_too_short,
                    "seasonal_naive_interval: need at least 2m=" + std::to_string(2 * m) + " points");
    const auto forecast = seasonal_naive_forecast(insample, m, h);
    IntervalBounds bounds;
    bounds.sigma = seasonal_naive_sigma(insample, m);
    bounds.degenerate_sigma = bounds.sigma == 0.0;
    const boost::math::normal_distribution<double> normal;
    const double z = boost::math::quantile(normal, 0.5 + level / 2.0);
    bounds.lower.resize(forecast.size());
    bounds.upper.resize(forecast.size());
    for (int step = 1; step <= h; ++step) {
        const int cycles = (step - 1) / m;
        const double half_width = z * bounds.sigma * std::sqrt(static_cast<double>(cycles + 1));
        bounds.lower[static_cast<std::size_t>(step - 1)] = forecast[static_cast<std::size_t>(step - 1)] - half_width;
        bounds.upper[static_cast<std::size_t>(step - 1)] = forecast[static_cast<std::size_t>(step - 1)] + half_width;
    }
    return bounds;
}

/// Strictly outside the band counts as anomalous; on-the-bound does not.
inline std::vector<bool> flag_anomalies(std::span<const double> actuals, const IntervalBounds& bounds) {
    if (actuals.size() != bounds.lower.size() || actuals.size() != bounds.upper.size())
        throw Error(errc::length_mismatch, "flag_anomalies: actual/bound length mismatch");
    std::vector<bool> flags(actuals.size());
    for (std::size_t i = 0; i < actuals.size(); ++i)
        flags[i] = actuals[i] < bounds.lower[i] || actuals[i] > bounds.upper[i];
    return flags;
}

/// Everything the condition annotators need from the baseline forecaster.
struct BaselineProfile {
    std::vector<double> forecast;  // length H
    IntervalBounds bounds;
    double smape = 0.0;  // baseline SMAPE on the holdout window
    std::vector<bool> anomaly;
};

inline BaselineProfile build_baseline_profile(std::span<const double> insample,
                                              std::span<const double> holdout, int m, double level) {
    BaselineProfile profile;
    const int h = static_cast<int>(holdout.size());
    profile.forecast = seasonal_naive_forecast(insample, m, h);
    profile.bounds = seasonal_naive_interval(insample, m, h, level);
    profile.smape = metrics::smape(holdout, profile.forecast);
    profile.anomaly = flag_anomalies(holdout, profile.bounds);
    return profile;
}

struct HardnessScore {
    double score = 0.0;  // baseline SMAPE
    bool is_hard = false;
};

/// Nearest-rank percentile of the baseline scores; a series is hard iff its
/// score strictly exceeds that percentile.
inline std::map<std::string, HardnessScore> hardness_scores(
    const std::map<std::string, double>& baseline_smapes, double percentile = 0.90) {
    if (baseline_smapes.empty()) throw Error(errc::empty_input, "hardness_scores: no baseline scores");
    if (!(percentile > 0.0 && percentile < 1.0))
        throw Error(errc::invalid_argument, "hardness_scores: percentile must be in (0,1)");
    std::vector<double> sorted;
    sorted.reserve(baseline_smapes.size());
    for (const auto& [id, s] : baseline_smapes) sorted.push_back(s);
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(percentile * n));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    const double threshold = sorted[rank - 1];

    std::map<std::string, HardnessScore> out;
    for (const auto& [id, s] : baseline_smapes) out[id] = {s, s > threshold};
    return out;
}

}  // namespace radar::baseline
