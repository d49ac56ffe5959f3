// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radar/baseline/seasonal_naive.hpp"
#include "radar/aspects/kpss.hpp"
#include "radar/aspects/seasonal_strength.hpp"
#include "radar/csv.hpp"
#include "radar/parallel.hpp"
#include "radar/series.hpp"

namespace radar::aspects {

struct AspectConfig {
    double seasonality_threshold = 0.6;
    double kpss_significance = 0.05;
    double anomaly_level = 0.99;
    double hardness_percentile = 0.90;
    int threads = 1;
};

enum class HorizonClass { first, middle, last };

inline std::string to_string(HorizonClass c) {
    switch (c) {
        case HorizonClass::first: return "first";
        case HorizonClass::middle: return "middle";
        case HorizonClass::last: return "last";
    }
    return "?";
}

struct SeriesAnnotation {
    std::optional<double> kpss_stat;         // empty when the test was not computable
    std::optional<bool> is_stationary;
    std::optional<double> seasonal_strength;
    std::optional<bool> is_seasonal;
    Frequency frequency = Frequency::monthly;
    double baseline_smape = 0.0;
    bool is_hard = false;
};

struct ObservationAnnotation {
    int step = 0;  // 1..H
    HorizonClass horizon_class = HorizonClass::middle;
    std::optional<bool> is_anomaly;
};

/// Per-series and per-observation condition flags. Undefined entries are
/// excluded from the corresponding slice only, never fatal.
struct ConditionAnnotations {
    std::map<std::string, SeriesAnnotation> series;
    std::map<std::pair<std::string, int>, ObservationAnnotation> observations;  // (id, step)

    std::size_t count_series(bool (*pred)(const SeriesAnnotation&)) const {
        std::size_t n = 0;
        for (const auto& [id, a] : series)
            if (pred(a)) ++n;
        return n;
    }
};

/// Computes every condition flag for a collection: stationarity and seasonal
/// strength over the training window, anomaly flags over the holdout via the
/// baseline profiles, hardness from the baseline score distribution, and
/// horizon classes. Per-series annotator failures become warnings.
inline ConditionAnnotations annotate(const SeriesCollection& collection,
                                     const std::map<std::string, baseline::BaselineProfile>& profiles,
                                     const AspectConfig& config, Diagnostics& diag) {
    kpss_critical_value(config.kpss_significance);  // validate up-front
    auto [train, test] = split_holdout(collection);

    std::vector<std::string> ids;
    ids.reserve(collection.size());
    for (const auto& [id, s] : collection.series) ids.push_back(id);

    std::vector<SeriesAnnotation> computed(ids.size());
    std::vector<std::string> problems(ids.size());
    parallel_for(ids.size(), config.threads, [&](std::size_t i) {
        const TimeSeries& tr = train.at(ids[i]);
        SeriesAnnotation& a = computed[i];
        a.frequency = tr.frequency;
        try {
            a.kpss_stat = kpss_statistic(tr.values);
            a.is_stationary = *a.kpss_stat <= kpss_critical_value(config.kpss_significance);
        } catch (const Error& e) {
            problems[i] += std::string("stationarity undefined (") + e.what() + "); ";
        }
        try {
            a.seasonal_strength = seasonal_strength(tr.values, seasonal_period(tr.frequency));
            a.is_seasonal = is_seasonal(*a.seasonal_strength, config.seasonality_threshold);
        } catch (const Error& e) {
            problems[i] += std::string("seasonality undefined (") + e.what() + "); ";
        }
    });

    ConditionAnnotations out;
    std::map<std::string, double> baseline_smapes;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!problems[i].empty()) diag.warn("annotate: series '" + ids[i] + "': " + problems[i]);
        out.series.emplace(ids[i], std::move(computed[i]));
        auto it = profiles.find(ids[i]);
        if (it != profiles.end()) baseline_smapes[ids[i]] = it->second.smape;
    }

    if (!baseline_smapes.empty()) {
        const auto hardness = baseline::hardness_scores(baseline_smapes, config.hardness_percentile);
        for (auto& [id, a] : out.series) {
            auto it = hardness.find(id);
            if (it != hardness.end()) {
                a.baseline_smape = it->second.score;
                a.is_hard = it->second.is_hard;
            }
        }
    }

    for (const auto& [id, ts] : test.series) {
        const int h = horizon(ts.frequency);
        auto profile_it = profiles.find(id);
        if (profile_it == profiles.end())
            diag.warn("annotate: series '" + id + "': no baseline profile, anomaly flags undefined");
        for (int step = 1; step <= h; ++step) {
            ObservationAnnotation obs;
            obs.step = step;
            obs.horizon_class = step == 1 ? HorizonClass::first
                                          : (step == h ? HorizonClass::last : HorizonClass::middle);
            if (profile_it != profiles.end())
                obs.is_anomaly = profile_it->second.anomaly[static_cast<std::size_t>(step - 1)];
            out.observations.emplace(std::make_pair(id, step), obs);
        }
    }
    return out;
}

inline std::string render_series_annotations_csv(const ConditionAnnotations& annotations) {
    auto opt_bool = [](const std::optional<bool>& b) {
        return b ? (*b ? std::string("true") : std::string("false")) : std::string();
    };
    std::string out = "unique_id,is_stationary,kpss_stat,seasonal_strength,is_seasonal,frequency,is_hard\n";
    for (const auto& [id, a] : annotations.series) {
        out += csv::quote_field(id);
        out += ',' + opt_bool(a.is_stationary);
        out += ',' + (a.kpss_stat ? csv::format_double(*a.kpss_stat) : std::string());
        out += ',' + (a.seasonal_strength ? csv::format_double(*a.seasonal_strength) : std::string());
        out += ',' + opt_bool(a.is_seasonal);
        out += ',' + to_string(a.frequency);
        out += ',' + std::string(a.is_hard ? "true" : "false");
        out += '\n';
    }
    return out;
}

inline std::string render_observation_annotations_csv(const ConditionAnnotations& annotations) {
    std::string out = "unique_id,horizon,is_anomaly,horizon_class\n";
    for (const auto& [key, obs] : annotations.observations) {
        out += csv::quote_field(key.first);
        out += ',' + std::to_string(key.second);
        out += ',' + (obs.is_anomaly ? std::string(*obs.is_anomaly ? "true" : "false") : std::string());
        out += ',' + to_string(obs.horizon_class);
        out += '\n';
    }
    return out;
}

}  // namespace radar::aspects
