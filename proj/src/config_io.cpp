#include "sicrelay/config_io.hpp"

#include <fstream>
#include <stdexcept>

#include "sicrelay/fading.hpp"

namespace sicrelay {

namespace {

std::vector<double> means_of(const std::vector<LinkStats>& stats) {
    std::vector<double> means;
    means.reserve(stats.size());
    for (const LinkStats& s : stats) means.push_back(s.mean_gain);
    return means;
}

std::vector<LinkStats> stats_of(const nlohmann::json& j, const char* key) {
    std::vector<LinkStats> stats;
    for (double m : j.at(key).get<std::vector<double>>()) {
        stats.push_back(link_stats_from_mean(m));
    }
    return stats;
}

nlohmann::json parse_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(std::string("cannot open ") + what + ": " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("malformed ") + what + " '" + path + "': " + e.what());
    }
}

}  // namespace

nlohmann::json scenario_to_json(const ScenarioConfig& config) {
    nlohmann::json j;
    j["version"] = kConfigVersion;
    j["relays"] = {{"count", config.n_relays}, {"used", config.n_used}};
    if (!config.active.empty()) j["relays"]["active"] = config.active;
    j["rates"] = {{"r1", config.r1}, {"r2", config.r2}};
    j["gains"] = {{"h1_mean", means_of(config.h1_stats)},
                  {"h2_mean", means_of(config.h2_stats)},
                  {"f_mean", means_of(config.f_stats)}};
    j["relay_power"] = config.p_relay;
    j["run"] = {{"trials", config.trials},
                {"seed", config.master_seed},
                {"workers", config.workers}};
    return j;
}

ScenarioConfig scenario_from_json(const nlohmann::json& j) {
    const int version = j.value("version", kConfigVersion);
    if (version != kConfigVersion) {
        throw std::runtime_error("unsupported config version " + std::to_string(version));
    }
    ScenarioConfig config;
    try {
        const auto& relays = j.at("relays");
        config.n_relays = relays.at("count").get<int>();
        config.n_used = relays.at("used").get<int>();
        if (relays.contains("active")) {
            config.active = relays.at("active").get<std::vector<int>>();
        }
        const auto& rates = j.at("rates");
        config.r1 = rates.at("r1").get<double>();
        config.r2 = rates.at("r2").get<double>();
        const auto& gains = j.at("gains");
        config.h1_stats = stats_of(gains, "h1_mean");
        config.h2_stats = stats_of(gains, "h2_mean");
        config.f_stats = stats_of(gains, "f_mean");
        config.p_relay = j.at("relay_power").get<double>();
        const auto& run = j.at("run");
        config.trials = run.at("trials").get<std::uint64_t>();
        config.master_seed = run.at("seed").get<std::uint64_t>();
        config.workers = run.value("workers", 0u);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("bad scenario config: ") + e.what());
    }
    validate_scenario(config);
    return config;
}

ScenarioConfig load_scenario_file(const std::string& path) {
    try {
        return scenario_from_json(parse_file(path, "scenario config"));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("invalid scenario config '" + path + "': " + e.what());
    }
}

nlohmann::json manifest_to_json(const RunManifest& manifest) {
    nlohmann::json j;
    j["command"] = manifest.command;
    j["tool_version"] = manifest.tool_version;
    j["scenario"] = scenario_to_json(manifest.scenario);
    j["gammas_db"] = manifest.gammas_db;
    j["with_analytic"] = manifest.with_analytic;
    j["output_csv"] = manifest.output_csv;
    return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
    RunManifest m;
    try {
        m.command = j.at("command").get<std::string>();
        m.tool_version = j.at("tool_version").get<std::string>();
        m.scenario = scenario_from_json(j.at("scenario"));
        m.gammas_db = j.at("gammas_db").get<std::vector<double>>();
        m.with_analytic = j.at("with_analytic").get<bool>();
        m.output_csv = j.at("output_csv").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("bad run manifest: ") + e.what());
    }
    return m;
}

void save_manifest(const RunManifest& manifest, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write manifest: " + path);
    }
    out << manifest_to_json(manifest).dump(2) << '\n';
}

RunManifest load_manifest(const std::string& path) {
    try {
        return manifest_from_json(parse_file(path, "run manifest"));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("invalid run manifest '" + path + "': " + e.what());
    }
}

}  // namespace sicrelay
