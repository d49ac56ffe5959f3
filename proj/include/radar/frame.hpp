// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "radar/io.hpp"
#include "radar/series.hpp"

namespace radar {

/// Evaluation-ready join of holdout actuals and forecasts, plus the training
/// portion of each retained series (needed for scaled metrics).
struct EvalFrame {
    struct Row {
        std::string series;
        Date ds;
        int step;  // 1..H, position inside the holdout window
        double actual;
        std::string model;
        double forecast;
    };
    struct TrainRef {
        std::vector<double> values;
        Frequency frequency = Frequency::monthly;
    };

    std::vector<Row> rows;                  // ordered by (series, model, step)
    std::vector<std::string> models;        // sorted
    std::vector<std::string> series_ids;    // sorted, kept series only
    std::map<std::string, TrainRef> train;  // per kept series

    bool empty() const noexcept { return rows.empty(); }
    int horizon_of(const std::string& id) const { return horizon(train.at(id).frequency); }
};

/// Joins holdout actuals with forecasts. Intersection semantics: only series
/// covered by every model are kept, so each model is scored on identical
/// rows; dropped (model, series) pairs are reported through `diag`.
inline EvalFrame align(const SeriesCollection& test, const ForecastSet& forecasts,
                       const SeriesCollection& train, Diagnostics& diag) {
    if (forecasts.empty() || forecasts.models.empty())
        throw Error(errc::no_overlap, "forecast set is empty");

    std::map<std::string, std::set<std::string>> covered_by;  // model -> series
    for (const auto& row : forecasts.rows) covered_by[row.model].insert(row.series);

    std::set<std::string> kept;
    bool first = true;
    for (const auto& model : forecasts.models) {
        const auto& cov = covered_by[model];
        if (first) {
            kept = cov;
            first = false;
        } else {
            std::set<std::string> next;
            std::set_intersection(kept.begin(), kept.end(), cov.begin(), cov.end(),
                                  std::inserter(next, next.begin()));
            kept = std::move(next);
        }
    }
    for (const auto& model : forecasts.models)
        for (const auto& id : covered_by[model])
            if (!kept.count(id))
                diag.warn("align: dropped (model '" + model + "', series '" + id +
                          "'): series not covered by every model");
    if (kept.empty()) throw Error(errc::no_overlap, "no series is covered by every model");

    // forecast lookup, then emit rows in (series, model, step) order
    std::map<std::tuple<std::string, std::string, Date>, double> value_of;
    for (const auto& row : forecasts.rows)
        if (kept.count(row.series)) value_of[{row.series, row.model, row.ds}] = row.value;
    EvalFrame frame;
    frame.models = forecasts.models;
    for (const auto& id : kept) {
        const TimeSeries& ts = test.at(id);
        const TimeSeries& tr = train.at(id);
        frame.series_ids.push_back(id);
        frame.train.emplace(id, EvalFrame::TrainRef{tr.values, tr.frequency});
        const int h = horizon(ts.frequency);
        if (static_cast<int>(ts.size()) != h)
            throw Error(errc::no_overlap, "test window of '" + id + "' does not span one horizon");
        for (const auto& model : frame.models) {
            for (int step = 1; step <= h; ++step) {
                const Date ds = ts.timestamps[static_cast<std::size_t>(step - 1)];
                auto it = value_of.find({id, model, ds});
                if (it == value_of.end())
                    throw Error(errc::incomplete_horizon,
                                "model '" + model + "' lacks " + format_date(ds) + " for '" + id + "'");
                frame.rows.push_back({id, ds, step, ts.values[static_cast<std::size_t>(step - 1)],
                                      model, it->second});
            }
        }
    }
    return frame;
}

}  // namespace radar
