// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radar/agg/dimensions.hpp"
#include "radar/frequency.hpp"
#include "radar/metrics/loss_table.hpp"

namespace radar::report {

inline std::vector<agg::Dimension> default_radar_axes() {
    return {agg::Dimension::overall,   agg::Dimension::expected_shortfall,
            agg::Dimension::stationary, agg::Dimension::seasonal,
            agg::Dimension::anomalies, agg::Dimension::hard,
            agg::Dimension::horizon_last};
}

struct ActualsInput {
    std::filesystem::path path;
    Frequency frequency = Frequency::monthly;
};

/// One run: inputs, metric, aggregation and annotation parameters, radar
/// axes, and the output directory. Loadable from a JSON document; scalar
/// fields can be overridden from the command line.
struct RunConfig {
    std::vector<ActualsInput> actuals;
    std::vector<std::filesystem::path> forecasts;
    metrics::Metric metric = metrics::Metric::smape;
    double alpha = 0.10;
    double rope = 10.0;  // percent
    double seasonality_threshold = 0.6;
    double kpss_significance = 0.05;
    double anomaly_level = 0.99;
    double hardness_percentile = 0.90;
    std::vector<agg::Dimension> radar_axes = default_radar_axes();
    std::filesystem::path output_dir = "radar-out";
    std::optional<std::string> reference_model;
    int threads = 0;  // 0 = all available cores
};

/// Validates the config invariants; throws InvalidConfig on the first
/// violation.
inline void validate_config(const RunConfig& config) {
    auto fail = [](const std::string& msg) { throw Error(errc::invalid_config, msg); };
    if (config.actuals.empty()) fail("at least one actuals input is required");
    if (config.forecasts.empty()) fail("at least one forecasts input is required");
    if (!(config.alpha > 0.0 && config.alpha <= 1.0)) fail("alpha must be in (0,1]");
    if (config.rope < 0.0) fail("rope must be >= 0");
    if (!(config.seasonality_threshold >= 0.0 && config.seasonality_threshold <= 1.0))
        fail("seasonality_threshold must be in [0,1]");
    if (!(config.anomaly_level > 0.0 && config.anomaly_level < 1.0))
        fail("anomaly_level must be in (0,1)");
    if (!(config.hardness_percentile > 0.0 && config.hardness_percentile < 1.0))
        fail("hardness_percentile must be in (0,1)");
    try {
        aspects::kpss_critical_value(config.kpss_significance);
    } catch (const Error& e) {
        fail(e.what());
    }
    if (config.radar_axes.size() < 3) fail("radar_axes needs at least 3 axes");
    if (config.output_dir.empty()) fail("output_dir must not be empty");
    if (config.threads < 0) fail("threads must be >= 0");
}

/// Reads a JSON run configuration. Relative input paths are resolved
/// against the directory containing the config file.
inline RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open config '" + path.string() + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::invalid_config, "config '" + path.string() + "': " + e.what());
    }

    const std::filesystem::path base = path.has_parent_path() ? path.parent_path() : ".";
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? fp : base / fp;
    };

    RunConfig config;
    try {
        if (!doc.contains("actuals") || !doc["actuals"].is_array())
            throw Error(errc::invalid_config, "config: 'actuals' array is required");
        for (const auto& entry : doc["actuals"]) {
            ActualsInput input;
            input.path = resolve(entry.at("path").get<std::string>());
            input.frequency = parse_frequency(entry.at("frequency").get<std::string>());
            config.actuals.push_back(std::move(input));
        }
        if (!doc.contains("forecasts") || !doc["forecasts"].is_array())
            throw Error(errc::invalid_config, "config: 'forecasts' array is required");
        for (const auto& entry : doc["forecasts"])
            config.forecasts.push_back(resolve(entry.get<std::string>()));

        if (doc.contains("metric")) config.metric = metrics::parse_metric(doc["metric"].get<std::string>());
        if (doc.contains("alpha")) config.alpha = doc["alpha"].get<double>();
        if (doc.contains("rope")) config.rope = doc["rope"].get<double>();
        if (doc.contains("seasonality_threshold"))
            config.seasonality_threshold = doc["seasonality_threshold"].get<double>();
        if (doc.contains("kpss_significance"))
            config.kpss_significance = doc["kpss_significance"].get<double>();
        if (doc.contains("anomaly_level")) config.anomaly_level = doc["anomaly_level"].get<double>();
        if (doc.contains("hardness_percentile"))
            config.hardness_percentile = doc["hardness_percentile"].get<double>();
        if (doc.contains("radar_axes")) {
            config.radar_axes.clear();
            for (const auto& axis : doc["radar_axes"])
                config.radar_axes.push_back(agg::parse_dimension(axis.get<std::string>()));
        }
        if (doc.contains("output_dir")) config.output_dir = doc["output_dir"].get<std::string>();
        if (doc.contains("reference_model"))
            config.reference_model = doc["reference_model"].get<std::string>();
        if (doc.contains("threads")) config.threads = doc["threads"].get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::invalid_config, "config '" + path.string() + "': " + e.what());
    }
    return config;
}

/// Canonical JSON echo of a config (used in the run manifest).
inline nlohmann::json config_to_json(const RunConfig& config) {
    nlohmann::json doc;
    doc["actuals"] = nlohmann::json::array();
    for (const auto& input : config.actuals)
        doc["actuals"].push_back({{"path", input.path.string()}, {"frequency", to_string(input.frequency)}});
    doc["forecasts"] = nlohmann::json::array();
    for (const auto& p : config.forecasts) doc["forecasts"].push_back(p.string());
    doc["metric"] = metrics::to_string(config.metric);
    doc["alpha"] = config.alpha;
    doc["rope"] = config.rope;
    doc["seasonality_threshold"] = config.seasonality_threshold;
    doc["kpss_significance"] = config.kpss_significance;
    doc["anomaly_level"] = config.anomaly_level;
    doc["hardness_percentile"] = config.hardness_percentile;
    doc["radar_axes"] = nlohmann::json::array();
    for (auto axis : config.radar_axes) doc["radar_axes"].push_back(agg::to_string(axis));
    doc["output_dir"] = config.output_dir.string();
    if (config.reference_model) doc["reference_model"] = *config.reference_model;
    doc["threads"] = config.threads;
    return doc;
}

}  // namespace radar::report
