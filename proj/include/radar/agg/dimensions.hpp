// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radar/agg/aggregate.hpp"
#include "radar/aspects/annotate.hpp"
#include "radar/metrics/loss_table.hpp"

namespace radar::agg {

/// Evaluation dimensions. Series-level conditions slice per-series losses,
/// observation-level conditions slice pooled point losses.
enum class Dimension {
    overall,
    expected_shortfall,
    stationary,
    non_stationary,
    seasonal,
    non_seasonal,
    anomalies,
    hard,
    horizon_first,
    horizon_last,
    freq_monthly,
    freq_quarterly,
};

inline const std::vector<Dimension>& all_dimensions() {
    static const std::vector<Dimension> dims = {
        Dimension::overall,       Dimension::expected_shortfall,
        Dimension::stationary,    Dimension::non_stationary,
        Dimension::seasonal,      Dimension::non_seasonal,
        Dimension::anomalies,     Dimension::hard,
        Dimension::horizon_first, Dimension::horizon_last,
        Dimension::freq_monthly,  Dimension::freq_quarterly,
    };
    return dims;
}

inline std::string to_string(Dimension d) {
    switch (d) {
        case Dimension::overall: return "overall";
        case Dimension::expected_shortfall: return "expected_shortfall";
        case Dimension::stationary: return "stationary";
        case Dimension::non_stationary: return "non_stationary";
        case Dimension::seasonal: return "seasonal";
        case Dimension::non_seasonal: return "non_seasonal";
        case Dimension::anomalies: return "anomalies";
        case Dimension::hard: return "hard";
        case Dimension::horizon_first: return "horizon_first";
        case Dimension::horizon_last: return "horizon_last";
        case Dimension::freq_monthly: return "freq_monthly";
        case Dimension::freq_quarterly: return "freq_quarterly";
    }
    return "?";
}

inline Dimension parse_dimension(const std::string& text) {
    for (Dimension d : all_dimensions())
        if (to_string(d) == text) return d;
    throw Error(errc::invalid_config, "unknown dimension '" + text + "'");
}

/// Axis label for charts and the markdown report.
inline std::string dimension_label(Dimension d) {
    switch (d) {
        case Dimension::overall: return "Overall";
        case Dimension::expected_shortfall: return "Expected shortfall";
        case Dimension::stationary: return "Stationary";
        case Dimension::non_stationary: return "Non-stationary";
        case Dimension::seasonal: return "Seasonal";
        case Dimension::non_seasonal: return "Non-seasonal";
        case Dimension::anomalies: return "Anomalies";
        case Dimension::hard: return "Hard";
        case Dimension::horizon_first: return "First horizon";
        case Dimension::horizon_last: return "Last horizon";
        case Dimension::freq_monthly: return "Monthly";
        case Dimension::freq_quarterly: return "Quarterly";
    }
    return "?";
}

struct DimensionScore {
    Dimension dimension;
    std::string model;
    double value = 0.0;
    std::size_t n = 0;
};

struct AggConfig {
    double alpha = 0.10;  // expected-shortfall tail fraction
};

/// Computes every dimension for every model. A dimension whose condition is
/// empty (no anomalies, single-frequency data, ...) is dropped for all
/// models with one warning. Scores come out ordered by (dimension, model).
inline std::vector<DimensionScore> build_dimension_scores(
    const metrics::LossTable& table, const aspects::ConditionAnnotations& annotations,
    const AggConfig& config, Diagnostics& diag) {
    if (table.series_ids.empty()) throw Error(errc::empty_input, "build_dimension_scores: empty loss table");

    // Aligned per-series losses per model, in table.series_ids order.
    std::map<std::string, std::vector<double>> series_losses;
    for (const auto& model : table.models) {
        auto& v = series_losses[model];
        v.reserve(table.series_ids.size());
        for (const auto& id : table.series_ids) v.push_back(table.series_losses.at({model, id}));
    }

    // Pooled point losses per model in (series, step) order; all models share
    // the same key sequence by the frame's coverage invariant.
    std::vector<std::pair<std::string, int>> obs_keys;
    {
        const auto& first_model = table.models.front();
        for (const auto& id : table.series_ids) {
            auto it = table.point_losses.lower_bound({first_model, id, 0});
            for (; it != table.point_losses.end() && std::get<0>(it->first) == first_model &&
                   std::get<1>(it->first) == id;
                 ++it)
                obs_keys.emplace_back(id, std::get<2>(it->first));
        }
    }
    std::map<std::string, std::vector<double>> point_losses;
    for (const auto& model : table.models) {
        auto& v = point_losses[model];
        v.reserve(obs_keys.size());
        for (const auto& key : obs_keys)
            v.push_back(table.point_losses.at({model, key.first, key.second}));
    }

    using SeriesPred = std::function<std::optional<bool>(const aspects::SeriesAnnotation&)>;
    using ObsPred = std::function<std::optional<bool>(const aspects::ObservationAnnotation&)>;

    auto series_cond_mask = [&](const SeriesPred& pred) {
        std::vector<bool> mask(table.series_ids.size(), false);
        for (std::size_t i = 0; i < table.series_ids.size(); ++i) {
            auto it = annotations.series.find(table.series_ids[i]);
            if (it == annotations.series.end()) continue;  // undefined: excluded from slice
            mask[i] = pred(it->second).value_or(false);
        }
        return mask;
    };
    auto obs_cond_mask = [&](const ObsPred& pred) {
        std::vector<bool> mask(obs_keys.size(), false);
        for (std::size_t i = 0; i < obs_keys.size(); ++i) {
            auto it = annotations.observations.find(obs_keys[i]);
            if (it == annotations.observations.end()) continue;
            mask[i] = pred(it->second).value_or(false);
        }
        return mask;
    };

    std::vector<DimensionScore> scores;
    auto emit = [&](Dimension dim, const std::function<MeanResult(const std::string&)>& compute) {
        std::vector<DimensionScore> dim_scores;
        try {
            for (const auto& model : table.models) {
                const MeanResult r = compute(model);
                dim_scores.push_back({dim, model, r.value, r.n});
            }
        } catch (const Error& e) {
            diag.warn("scores: dimension '" + to_string(dim) + "' dropped (" + e.what() + ")");
            return;
        }
        scores.insert(scores.end(), dim_scores.begin(), dim_scores.end());
    };

    emit(Dimension::overall,
         [&](const std::string& model) { return mean_loss(series_losses.at(model)); });
    emit(Dimension::expected_shortfall, [&](const std::string& model) {
        return expected_shortfall(series_losses.at(model), config.alpha);
    });

    const std::vector<std::pair<Dimension, SeriesPred>> series_dims = {
        {Dimension::stationary, [](const aspects::SeriesAnnotation& a) { return a.is_stationary; }},
        {Dimension::non_stationary,
         [](const aspects::SeriesAnnotation& a) -> std::optional<bool> {
             if (!a.is_stationary) return std::nullopt;
             return !*a.is_stationary;
         }},
        {Dimension::seasonal, [](const aspects::SeriesAnnotation& a) { return a.is_seasonal; }},
        {Dimension::non_seasonal,
         [](const aspects::SeriesAnnotation& a) -> std::optional<bool> {
             if (!a.is_seasonal) return std::nullopt;
             return !*a.is_seasonal;
         }},
        {Dimension::hard,
         [](const aspects::SeriesAnnotation& a) -> std::optional<bool> { return a.is_hard; }},
        {Dimension::freq_monthly,
         [](const aspects::SeriesAnnotation& a) -> std::optional<bool> {
             return a.frequency == Frequency::monthly;
         }},
        {Dimension::freq_quarterly,
         [](const aspects::SeriesAnnotation& a) -> std::optional<bool> {
             return a.frequency == Frequency::quarterly;
         }},
    };
    for (const auto& [dim, pred] : series_dims) {
        const auto mask = series_cond_mask(pred);
        emit(dim, [&](const std::string& model) {
            return conditional_mean_series(series_losses.at(model), mask);
        });
    }

    const std::vector<std::pair<Dimension, ObsPred>> obs_dims = {
        {Dimension::anomalies, [](const aspects::ObservationAnnotation& o) { return o.is_anomaly; }},
        {Dimension::horizon_first,
         [](const aspects::ObservationAnnotation& o) -> std::optional<bool> {
             return o.horizon_class == aspects::HorizonClass::first;
         }},
        {Dimension::horizon_last,
         [](const aspects::ObservationAnnotation& o) -> std::optional<bool> {
             return o.horizon_class == aspects::HorizonClass::last;
         }},
    };
    for (const auto& [dim, pred] : obs_dims) {
        const auto mask = obs_cond_mask(pred);
        emit(dim, [&](const std::string& model) {
            return conditional_mean_obs(point_losses.at(model), mask);
        });
    }

    std::stable_sort(scores.begin(), scores.end(), [](const DimensionScore& a, const DimensionScore& b) {
        if (a.dimension != b.dimension)
            return static_cast<int>(a.dimension) < static_cast<int>(b.dimension);
        return a.model < b.model;
    });
    return scores;
}

/// Per-dimension model ranks (1 = lowest loss); ties share the average rank.
struct RadarSummary {
    std::vector<std::string> models;    // sorted
    std::vector<Dimension> dimensions;  // retained, in enum order
    std::map<std::pair<std::string, Dimension>, double> ranks;

    double rank(const std::string& model, Dimension d) const { return ranks.at({model, d}); }
};

inline RadarSummary rank_models(const std::vector<DimensionScore>& scores) {
    if (scores.empty()) throw Error(errc::empty_input, "rank_models: no scores");
    RadarSummary summary;
    std::map<Dimension, std::vector<std::pair<double, std::string>>> by_dim;
    for (const auto& s : scores) {
        by_dim[s.dimension].emplace_back(s.value, s.model);
        if (std::find(summary.models.begin(), summary.models.end(), s.model) == summary.models.end())
            summary.models.push_back(s.model);
    }
    std::sort(summary.models.begin(), summary.models.end());
    for (auto& [dim, entries] : by_dim) {
        if (entries.size() != summary.models.size())
            throw Error(errc::incomplete_scores,
                        "rank_models: dimension '" + to_string(dim) + "' misses some models");
        summary.dimensions.push_back(dim);
        std::sort(entries.begin(), entries.end());
        std::size_t i = 0;
        while (i < entries.size()) {
            std::size_t j = i;
            while (j + 1 < entries.size() && entries[j + 1].first == entries[i].first) ++j;
            const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
            for (std::size_t k = i; k <= j; ++k) summary.ranks[{entries[k].second, dim}] = avg_rank;
            i = j + 1;
        }
    }
    std::sort(summary.dimensions.begin(), summary.dimensions.end(),
              [](Dimension a, Dimension b) { return static_cast<int>(a) < static_cast<int>(b); });
    return summary;
}

/// Restricts a summary to the requested axes; axes missing from the summary
/// are dropped with a warning. Axis order follows the request.
inline RadarSummary select_axes(const RadarSummary& summary, const std::vector<Dimension>& axes,
                                Diagnostics& diag) {
    RadarSummary out;
    out.models = summary.models;
    for (Dimension d : axes) {
        if (std::find(summary.dimensions.begin(), summary.dimensions.end(), d) ==
            summary.dimensions.end()) {
            diag.warn("radar: axis '" + to_string(d) + "' unavailable, omitted");
            continue;
        }
        out.dimensions.push_back(d);
        for (const auto& model : out.models) out.ranks[{model, d}] = summary.rank(model, d);
    }
    return out;
}

}  // namespace radar::agg
