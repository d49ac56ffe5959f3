// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radar/date.hpp"
#include "radar/frequency.hpp"

namespace radar {

/// One univariate series: strictly increasing, evenly spaced timestamps and
/// a complete value sequence at the declared frequency.
struct TimeSeries {
    std::string id;
    std::vector<Date> timestamps;
    std::vector<double> values;
    Frequency frequency = Frequency::monthly;

    std::size_t size() const noexcept { return values.size(); }
};

/// Returns the first violated ingestion invariant, or nullopt when the
/// series is well-formed: strictly increasing timestamps on the declared
/// calendar grid, finite values, and length >= 2m + H.
inline std::optional<std::string> check_series(const TimeSeries& s) {
    if (s.timestamps.size() != s.values.size())
        return "timestamp/value length mismatch";
    const int m = seasonal_period(s.frequency);
    const int h = horizon(s.frequency);
    const std::size_t min_len = static_cast<std::size_t>(2 * m + h);
    if (s.size() < min_len)
        return "SeriesTooShort: length " + std::to_string(s.size()) + " < " + std::to_string(min_len);
    const int step = month_step(s.frequency);
    for (std::size_t i = 1; i < s.timestamps.size(); ++i) {
        const int d = months_between(s.timestamps[i - 1], s.timestamps[i]);
        if (d == 0 && s.timestamps[i - 1] == s.timestamps[i])
            return "DuplicateTimestamp: " + format_date(s.timestamps[i]);
        if (d != step)
            return "IrregularSpacing: " + format_date(s.timestamps[i - 1]) + " -> " +
                   format_date(s.timestamps[i]) + " is not one " + to_string(s.frequency) + " step";
    }
    for (double v : s.values)
        if (!std::isfinite(v)) return "UnparseableValue: non-finite value";
    return std::nullopt;
}

/// Immutable once built; safe to share read-only across threads.
struct SeriesCollection {
    std::map<std::string, TimeSeries> series;  // ordered by id
    std::string provenance;

    std::size_t size() const noexcept { return series.size(); }
    bool contains(const std::string& id) const { return series.count(id) != 0; }

    const TimeSeries& at(const std::string& id) const {
        auto it = series.find(id);
        if (it == series.end()) throw Error(errc::unknown_series, "series '" + id + "' not in collection");
        return it->second;
    }
};

/// Splits every series into (all but last H, last H). The two parts
/// concatenate back to the original exactly.
inline std::pair<SeriesCollection, SeriesCollection> split_holdout(const SeriesCollection& collection) {
    SeriesCollection train, test;
    train.provenance = collection.provenance;
    test.provenance = collection.provenance;
    for (const auto& [id, s] : collection.series) {
        const std::size_t h = static_cast<std::size_t>(horizon(s.frequency));
        if (s.size() <= h)
            throw Error(errc::series_too_short,
                        "series '" + id + "' has length " + std::to_string(s.size()) +
                            " <= horizon " + std::to_string(h));
        const std::size_t cut = s.size() - h;
        TimeSeries tr{id, {s.timestamps.begin(), s.timestamps.begin() + cut},
                      {s.values.begin(), s.values.begin() + cut}, s.frequency};
        TimeSeries te{id, {s.timestamps.begin() + cut, s.timestamps.end()},
                      {s.values.begin() + cut, s.values.end()}, s.frequency};
        train.series.emplace(id, std::move(tr));
        test.series.emplace(id, std::move(te));
    }
    return {std::move(train), std::move(test)};
}

}  // namespace radar
