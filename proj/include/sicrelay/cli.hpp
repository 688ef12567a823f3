#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sicrelay {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitUsageError = 2;

struct SweepArgs {
    std::string config_path;
    std::string manifest_in;    // rerun a previous sweep exactly
    std::string snr_range;      // "start:step:stop" in dB
    std::string snr_list;       // comma-separated dB values
    std::string out_csv;
    std::string manifest_out;   // defaults to out_csv + ".manifest.json"
    bool no_analytic = false;
    std::int64_t trials = -1;   // <0 = use config value
    std::int64_t seed = -1;
    int workers = -1;
};

struct ValidateArgs {
    std::string grid = "small";  // "small" or "full"
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 20260815;
    std::string json_out;
};

struct DmtArgs {
    std::string config_path;
    double window_low_db = 35.0;
    double window_high_db = 55.0;
    double step_db = 2.5;
};

struct PreselectArgs {
    int n_relays = 8;
    int n_used = 2;
    std::uint64_t seed = 1;
    double ref_snr_db = 20.0;
    double r1 = 1.0;
    double r2 = 1.0;
    double p_relay = 1.0;
    std::uint64_t trials = 100000;
    std::string topology_in;   // import instead of generating
    std::string topology_out;  // export the layout used
    bool evaluate = false;     // simulate chosen vs lowest-weight subset
};

// Parses "start:step:stop" or a comma list into an ordered dB grid.
std::vector<double> parse_snr_range(const std::string& range);
std::vector<double> parse_snr_list(const std::string& list);

int cmd_sweep(const SweepArgs& args);
int cmd_validate(const ValidateArgs& args);
int cmd_dmt(const DmtArgs& args);
int cmd_preselect(const PreselectArgs& args);

}  // namespace sicrelay
