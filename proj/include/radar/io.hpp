// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "radar/csv.hpp"
#include "radar/series.hpp"

namespace radar {

/// Loads a long-format actuals file (header exactly `unique_id,ds,y`).
/// Cell-level problems abort the load; series failing the length/spacing
/// invariants are dropped with a per-series diagnostic.
inline SeriesCollection load_actuals(const std::string& path, Frequency frequency,
                                     Diagnostics& diag) {
    const auto lines = csv::read_lines(path);
    if (lines.empty()) throw Error(errc::empty_input, "'" + path + "' is empty");
    if (lines[0] != "unique_id,ds,y")
        throw Error(errc::missing_column,
                    "'" + path + "': expected header 'unique_id,ds,y', got '" + lines[0] + "'");

    struct RawPoint {
        Date ds;
        double y;
    };
    std::map<std::string, std::vector<RawPoint>> raw;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (lines[ln].empty()) continue;
        const auto fields = csv::split_record(lines[ln]);
        const std::string ctx = path + ":" + std::to_string(ln + 1);
        if (fields.size() != 3)
            throw Error(errc::missing_column, ctx + ": expected 3 fields, got " + std::to_string(fields.size()));
        if (fields[0].empty()) throw Error(errc::unparseable_value, ctx + ": empty unique_id");
        Date ds;
        try {
            ds = parse_date(fields[1]);
        } catch (const Error& e) {
            throw Error(errc::unparseable_timestamp, ctx + ": " + e.what());
        }
        const double y = csv::parse_double(fields[2], ctx);
        raw[fields[0]].push_back({ds, y});
    }
    if (raw.empty()) throw Error(errc::empty_input, "'" + path + "' has a header but no data rows");

    SeriesCollection out;
    out.provenance = path;
    for (auto& [id, points] : raw) {
        std::stable_sort(points.begin(), points.end(),
                         [](const RawPoint& a, const RawPoint& b) { return a.ds < b.ds; });
        TimeSeries s;
        s.id = id;
        s.frequency = frequency;
        s.timestamps.reserve(points.size());
        s.values.reserve(points.size());
        for (const auto& p : points) {
            s.timestamps.push_back(p.ds);
            s.values.push_back(p.y);
        }
        if (auto problem = check_series(s)) {
            diag.warn("dropped series '" + id + "' from '" + path + "': " + *problem);
            continue;
        }
        out.series.emplace(id, std::move(s));
    }
    if (out.series.empty())
        throw Error(errc::empty_input, "'" + path + "' contains no valid series");
    return out;
}

/// Serializes a collection back to the `unique_id,ds,y` format. Values use
/// shortest round-trip formatting, so load(render(load(x))) == load(x).
inline std::string render_actuals_csv(const SeriesCollection& collection) {
    std::string out = "unique_id,ds,y\n";
    for (const auto& [id, s] : collection.series) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            out += csv::quote_field(id);
            out += ',';
            out += format_date(s.timestamps[i]);
            out += ',';
            out += csv::format_double(s.values[i]);
            out += '\n';
        }
    }
    return out;
}

/// Long-format forecast rows over holdout windows; model list derived.
struct ForecastSet {
    struct Row {
        std::string series;
        Date ds;
        std::string model;
        double value;
    };
    std::vector<Row> rows;          // sorted by (series, model, ds)
    std::vector<std::string> models;  // sorted, unique

    bool empty() const noexcept { return rows.empty(); }
};

/// Loads forecasts (`unique_id,ds,model,y_hat`) and validates them against
/// the holdout windows of `collection`: every (id, ds) must be one of the
/// last H timestamps of a known series, and every (id, model) pair present
/// must cover all H steps.
inline ForecastSet load_forecasts(const std::string& path, const SeriesCollection& collection,
                                  ForecastSet merged_into = {}) {
    const auto lines = csv::read_lines(path);
    if (lines.empty()) throw Error(errc::empty_input, "'" + path + "' is empty");
    if (lines[0] != "unique_id,ds,model,y_hat")
        throw Error(errc::missing_column,
                    "'" + path + "': expected header 'unique_id,ds,model,y_hat', got '" + lines[0] + "'");

    ForecastSet fx = std::move(merged_into);
    // (series, model, ds) uniqueness across everything loaded so far
    std::map<std::tuple<std::string, std::string, Date>, bool> seen;
    for (const auto& row : fx.rows) seen[{row.series, row.model, row.ds}] = true;

    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (lines[ln].empty()) continue;
        const auto fields = csv::split_record(lines[ln]);
        const std::string ctx = path + ":" + std::to_string(ln + 1);
        if (fields.size() != 4)
            throw Error(errc::missing_column, ctx + ": expected 4 fields, got " + std::to_string(fields.size()));
        const std::string& id = fields[0];
        if (!collection.contains(id))
            throw Error(errc::unknown_series, ctx + ": series '" + id + "' not present in actuals");
        Date ds;
        try {
            ds = parse_date(fields[1]);
        } catch (const Error& e) {
            throw Error(errc::unparseable_timestamp, ctx + ": " + e.what());
        }
        const std::string& model = fields[2];
        if (model.empty()) throw Error(errc::unparseable_value, ctx + ": empty model name");
        const double y_hat = csv::parse_double(fields[3], ctx);

        const TimeSeries& s = collection.at(id);
        const std::size_t h = static_cast<std::size_t>(horizon(s.frequency));
        const std::size_t cut = s.size() - h;
        const auto begin = s.timestamps.begin() + static_cast<std::ptrdiff_t>(cut);
        if (std::find(begin, s.timestamps.end(), ds) == s.timestamps.end())
            throw Error(errc::timestamp_outside_holdout,
                        ctx + ": " + format_date(ds) + " is not in the holdout window of '" + id + "'");
        if (!seen.emplace(std::make_tuple(id, model, ds), true).second)
            throw Error(errc::duplicate_forecast,
                        ctx + ": duplicate forecast for ('" + id + "', " + format_date(ds) + ", '" + model + "')");
        fx.rows.push_back({id, ds, model, y_hat});
    }

    // Coverage: each (series, model) pair present must span all H steps.
    std::map<std::pair<std::string, std::string>, std::size_t> coverage;
    for (const auto& row : fx.rows) ++coverage[{row.series, row.model}];
    for (const auto& [key, count] : coverage) {
        const std::size_t h = static_cast<std::size_t>(horizon(collection.at(key.first).frequency));
        if (count != h)
            throw Error(errc::incomplete_horizon,
                        "model '" + key.second + "' provides " + std::to_string(count) + " of " +
                            std::to_string(h) + " steps for series '" + key.first + "'");
    }

    std::sort(fx.rows.begin(), fx.rows.end(), [](const ForecastSet::Row& a, const ForecastSet::Row& b) {
        return std::tie(a.series, a.model, a.ds) < std::tie(b.series, b.model, b.ds);
    });
    fx.models.clear();
    for (const auto& row : fx.rows)
        if (fx.models.empty() || fx.models.back() != row.model) fx.models.push_back(row.model);
    std::sort(fx.models.begin(), fx.models.end());
    fx.models.erase(std::unique(fx.models.begin(), fx.models.end()), fx.models.end());
    return fx;
}

}  // namespace radar
