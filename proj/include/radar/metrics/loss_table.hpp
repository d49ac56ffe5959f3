// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "radar/csv.hpp"
#include "radar/frame.hpp"
#include "radar/metrics/mase.hpp"
#include "radar/metrics/smape.hpp"
#include "radar/parallel.hpp"

namespace radar::metrics {

enum class Metric { smape, mase };

inline std::string to_string(Metric m) { return m == Metric::smape ? "smape" : "mase"; }

inline Metric parse_metric(const std::string& text) {
    if (text == "smape" || text == "SMAPE") return Metric::smape;
    if (text == "mase" || text == "MASE") return Metric::mase;
    throw Error(errc::invalid_config, "unknown metric '" + text + "' (expected smape|mase)");
}

/// Per-series and per-observation losses for every model. Point losses stay
/// on the metric's own scale: SMAPE terms for SMAPE, per-point absolute
/// error over the series' constant scaling denominator for MASE — so
/// observation-level slices remain meaningful.
struct LossTable {
    Metric metric = Metric::smape;
    std::vector<std::string> models;      // sorted
    std::vector<std::string> series_ids;  // sorted, series with defined losses only
    std::map<std::pair<std::string, std::string>, double> series_losses;        // (model, series)
    std::map<std::tuple<std::string, std::string, int>, double> point_losses;   // (model, series, step)
    std::vector<std::pair<std::string, std::string>> excluded;  // (series, reason)

    double series_loss(const std::string& model, const std::string& series) const {
        return series_losses.at({model, series});
    }
};

/// Computes the loss table over an evaluation frame. A series whose metric
/// is undefined (MASE with a zero scaling denominator) is excluded for all
/// models, keeping every model scored on the same series set.
inline LossTable build_loss_table(const EvalFrame& frame, Metric metric, Diagnostics& diag,
                                  int threads = 1) {
    if (frame.empty()) throw Error(errc::empty_input, "build_loss_table: empty frame");

    LossTable table;
    table.metric = metric;
    table.models = frame.models;

    struct SeriesResult {
        bool excluded = false;
        std::string reason;
        // per model, in frame.models order: series loss + point losses
        std::vector<double> series_loss;
        std::vector<std::vector<double>> points;
    };
    std::vector<SeriesResult> results(frame.series_ids.size());

    // rows are ordered (series, model, step); index the per-series blocks
    const std::size_t n_models = frame.models.size();
    std::map<std::string, std::size_t> row_offset;
    {
        std::size_t offset = 0;
        for (const auto& id : frame.series_ids) {
            row_offset[id] = offset;
            offset += n_models * static_cast<std::size_t>(frame.horizon_of(id));
        }
    }

    parallel_for(frame.series_ids.size(), threads, [&](std::size_t si) {
        const std::string& id = frame.series_ids[si];
        const auto& train = frame.train.at(id);
        const int h = frame.horizon_of(id);
        SeriesResult& res = results[si];

        double scaling = 0.0;
        if (metric == Metric::mase) {
            try {
                scaling = mase_scaling(train.values, seasonal_period(train.frequency));
            } catch (const Error& e) {
                res.excluded = true;
                res.reason = e.what();
                return;
            }
        }

        res.series_loss.resize(n_models);
        res.points.resize(n_models);
        const std::size_t base = row_offset.at(id);
        for (std::size_t mi = 0; mi < n_models; ++mi) {
            std::vector<double>& pts = res.points[mi];
            pts.resize(static_cast<std::size_t>(h));
            double sum = 0.0;
            for (int step = 1; step <= h; ++step) {
                const EvalFrame::Row& row =
                    frame.rows[base + mi * static_cast<std::size_t>(h) + static_cast<std::size_t>(step - 1)];
                double pt = 0.0;
                if (metric == Metric::smape) {
                    pt = smape_term(row.actual, row.forecast);
                } else {
                    pt = std::abs(row.actual - row.forecast) / scaling;
                }
                pts[static_cast<std::size_t>(step - 1)] = pt;
                sum += pt;
            }
            res.series_loss[mi] = sum / static_cast<double>(h);
        }
    });

    for (std::size_t si = 0; si < frame.series_ids.size(); ++si) {
        const std::string& id = frame.series_ids[si];
        const SeriesResult& res = results[si];
        if (res.excluded) {
            table.excluded.emplace_back(id, res.reason);
            diag.warn("loss table: excluded series '" + id + "' (" + res.reason + ")");
            continue;
        }
        table.series_ids.push_back(id);
        for (std::size_t mi = 0; mi < n_models; ++mi) {
            const std::string& model = frame.models[mi];
            table.series_losses[{model, id}] = res.series_loss[mi];
            for (std::size_t p = 0; p < res.points[mi].size(); ++p)
                table.point_losses[{model, id, static_cast<int>(p + 1)}] = res.points[mi][p];
        }
    }
    if (table.series_ids.empty())
        throw Error(errc::empty_input, "build_loss_table: every series was excluded");
    return table;
}

/// CSV export: `model,unique_id,horizon,loss`, horizon blank on series rows.
inline std::string render_losses_csv(const LossTable& table) {
    std::string out = "model,unique_id,horizon,loss\n";
    for (const auto& model : table.models) {
        for (const auto& id : table.series_ids) {
            out += csv::quote_field(model);
            out += ',';
            out += csv::quote_field(id);
            out += ",,";
            out += csv::format_double(table.series_losses.at({model, id}));
            out += '\n';
            auto it = table.point_losses.lower_bound({model, id, 0});
            for (; it != table.point_losses.end() && std::get<0>(it->first) == model &&
                   std::get<1>(it->first) == id;
                 ++it) {
                out += csv::quote_field(model);
                out += ',';
                out += csv::quote_field(id);
                out += ',';
                out += std::to_string(std::get<2>(it->first));
                out += ',';
                out += csv::format_double(it->second);
                out += '\n';
            }
        }
    }
    return out;
}

}  // namespace radar::metrics
