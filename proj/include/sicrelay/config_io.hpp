#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sicrelay/scenario.hpp"

namespace sicrelay {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kConfigVersion = 1;

// JSON scenario schema (documented in the README):
// {
//   "version": 1,
//   "relays": {"count": N, "used": K, "active": [..]},   // active optional
//   "rates": {"r1": .., "r2": ..},
//   "gains": {"h1_mean": [..], "h2_mean": [..], "f_mean": [..]},
//   "relay_power": ..,
//   "run": {"trials": .., "seed": .., "workers": ..}
// }
nlohmann::json scenario_to_json(const ScenarioConfig& config);
ScenarioConfig scenario_from_json(const nlohmann::json& j);

// Throws std::runtime_error naming the path when the file is missing or
// malformed.
ScenarioConfig load_scenario_file(const std::string& path);

// Everything needed to reproduce a run byte for byte: the fully resolved
// scenario (not a file reference), the SNR grid and the output location.
struct RunManifest {
    std::string command;
    std::string tool_version;
    ScenarioConfig scenario;
    std::vector<double> gammas_db;
    bool with_analytic = true;
    std::string output_csv;
};

nlohmann::json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);
void save_manifest(const RunManifest& manifest, const std::string& path);
RunManifest load_manifest(const std::string& path);

}  // namespace sicrelay
