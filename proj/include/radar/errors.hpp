// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radar {

enum class errc {
    // ingestion
    missing_column,
    unparseable_timestamp,
    unparseable_value,
    duplicate_timestamp,
    series_too_short,
    irregular_spacing,
    empty_input,
    duplicate_series,
    // forecast ingestion
    unknown_series,
    timestamp_outside_holdout,
    incomplete_horizon,
    duplicate_forecast,
    // alignment and metrics
    no_overlap,
    length_mismatch,
    zero_denominator,
    insample_too_short,
    zero_variance,
    unsupported_significance,
    // aggregation
    alpha_too_small,
    series_set_mismatch,
    empty_condition,
    incomplete_scores,
    // reporting
    too_few_axes,
    io_error,
    invalid_config,
    unknown_model,
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::missing_column: return "MissingColumn";
        case errc::unparseable_timestamp: return "UnparseableTimestamp";
        case errc::unparseable_value: return "UnparseableValue";
        case errc::duplicate_timestamp: return "DuplicateTimestamp";
        case errc::series_too_short: return "SeriesTooShort";
        case errc::irregular_spacing: return "IrregularSpacing";
        case errc::empty_input: return "EmptyInput";
        case errc::duplicate_series: return "DuplicateSeries";
        case errc::unknown_series: return "UnknownSeries";
        case errc::timestamp_outside_holdout: return "TimestampOutsideHoldout";
        case errc::incomplete_horizon: return "IncompleteHorizon";
        case errc::duplicate_forecast: return "DuplicateForecast";
        case errc::no_overlap: return "NoOverlap";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::zero_denominator: return "ZeroDenominator";
        case errc::insample_too_short: return "InsampleTooShort";
        case errc::zero_variance: return "ZeroVariance";
        case errc::unsupported_significance: return "UnsupportedSignificance";
        case errc::alpha_too_small: return "AlphaTooSmall";
        case errc::series_set_mismatch: return "SeriesSetMismatch";
        case errc::empty_condition: return "EmptyCondition";
        case errc::incomplete_scores: return "IncompleteScores";
        case errc::too_few_axes: return "TooFewAxes";
        case errc::io_error: return "IoError";
        case errc::invalid_config: return "InvalidConfig";
        case errc::unknown_model: return "UnknownModel";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Library-wide exception. code() identifies the contract violation,
/// what() carries the human-readable context.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Collects non-fatal warnings raised along the pipeline. Each distinct
/// message is kept once, in first-seen order.
class Diagnostics {
public:
    void warn(std::string message) {
        for (const auto& w : warnings_)
            if (w == message) return;
        warnings_.push_back(std::move(message));
    }

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    bool empty() const noexcept { return warnings_.empty(); }

    void merge(const Diagnostics& other) {
        for (const auto& w : other.warnings_) warn(w);
    }

private:
    std::vector<std::string> warnings_;
};

}  // namespace radar
