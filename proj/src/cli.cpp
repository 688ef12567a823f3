#include "sicrelay/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sicrelay/analytic.hpp"
#include "sicrelay/config_io.hpp"
#include "sicrelay/dmt.hpp"
#include "sicrelay/montecarlo.hpp"
#include "sicrelay/preselect.hpp"
#include "sicrelay/stats.hpp"
#include "sicrelay/validate.hpp"

namespace sicrelay {

namespace {

double parse_double(const std::string& s, const char* what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty()) {
        throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + s + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

std::string format_row(const SweepRow& row) {
    char buf[256];
    char analytic[40] = "";
    if (row.has_analytic) {
        std::snprintf(analytic, sizeof(analytic), "%.10g", row.analytic_s1);
    }
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%s,%.10g,%.10g,%llu", row.gamma_db,
                  row.s1.p_hat, row.s1.ci_half_width, analytic, row.s2.p_hat,
                  row.s2.ci_half_width, static_cast<unsigned long long>(row.s1.trials));
    return buf;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write CSV: " + path);
    }
    out << "gamma_db,pout_sim_s1,ci_s1,pout_analytic_s1,pout_sim_s2,ci_s2,trials\n";
    for (const SweepRow& row : rows) out << format_row(row) << '\n';
}

}  // namespace

std::vector<double> parse_snr_range(const std::string& range) {
    const std::vector<std::string> parts = split(range, ':');
    if (parts.size() != 3) {
        throw std::invalid_argument("SNR range must be start:step:stop (dB), got '" + range + "'");
    }
    const double start = parse_double(parts[0], "SNR range start");
    const double step = parse_double(parts[1], "SNR range step");
    const double stop = parse_double(parts[2], "SNR range stop");
    if (!(step > 0.0) || stop < start) {
        throw std::invalid_argument("SNR range needs step > 0 and stop >= start");
    }
    std::vector<double> grid;
    for (double g = start; g <= stop + 1e-9; g += step) grid.push_back(g);
    return grid;
}

std::vector<double> parse_snr_list(const std::string& list) {
    std::vector<double> grid;
    for (const std::string& item : split(list, ',')) {
        grid.push_back(parse_double(item, "SNR list entry"));
    }
    if (grid.empty()) {
        throw std::invalid_argument("SNR list is empty");
    }
    return grid;
}

int cmd_sweep(const SweepArgs& args) {
    ScenarioConfig config;
    std::vector<double> gammas_db;
    bool with_analytic = !args.no_analytic;

    if (!args.manifest_in.empty()) {
        const RunManifest m = load_manifest(args.manifest_in);
        config = m.scenario;
        gammas_db = m.gammas_db;
        with_analytic = m.with_analytic;
    } else {
        if (args.config_path.empty()) {
            throw std::invalid_argument("sweep needs --config (or --from-manifest)");
        }
        config = load_scenario_file(args.config_path);
        if (!args.snr_range.empty()) {
            gammas_db = parse_snr_range(args.snr_range);
        } else if (!args.snr_list.empty()) {
            gammas_db = parse_snr_list(args.snr_list);
        } else {
            throw std::invalid_argument("sweep needs --snr or --snr-list");
        }
    }
    if (args.trials >= 0) config.trials = static_cast<std::uint64_t>(args.trials);
    if (args.seed >= 0) config.master_seed = static_cast<std::uint64_t>(args.seed);
    if (args.workers >= 0) config.workers = args.workers;
    validate_scenario(config);
    if (args.out_csv.empty()) {
        throw std::invalid_argument("sweep needs --out");
    }

    const std::vector<SweepRow> rows = sweep(config, gammas_db, with_analytic);
    write_sweep_csv(rows, args.out_csv);

    RunManifest manifest;
    manifest.command = "sweep";
    manifest.tool_version = kToolVersion;
    manifest.scenario = config;
    manifest.gammas_db = gammas_db;
    manifest.with_analytic = with_analytic;
    manifest.output_csv = args.out_csv;
    const std::string manifest_path =
        args.manifest_out.empty() ? args.out_csv + ".manifest.json" : args.manifest_out;
    save_manifest(manifest, manifest_path);

    for (const SweepRow& row : rows) {
        std::printf("%7.2f dB  s1 %.4e +-%.1e  s2 %.4e +-%.1e%s\n", row.gamma_db, row.s1.p_hat,
                    row.s1.ci_half_width, row.s2.p_hat, row.s2.ci_half_width,
                    (row.s1.low_count() || row.s2.low_count()) ? "  [low failure count]" : "");
    }
    std::printf("wrote %s and %s\n", args.out_csv.c_str(), manifest_path.c_str());
    return kExitOk;
}

int cmd_validate(const ValidateArgs& args) {
    if (args.grid != "small" && args.grid != "full") {
        throw std::invalid_argument("--grid must be 'small' or 'full'");
    }
    ValidateOptions options;
    options.full_grid = (args.grid == "full");
    options.trials = args.trials;
    options.seed = args.seed;
    const std::vector<CheckResult> results = run_validation(options);

    for (const CheckResult& r : results) {
        std::printf("%-26s %-4s  measured %.3e  tolerance %.3e  (%s)\n", r.name.c_str(),
                    r.status.c_str(), r.measured, r.tolerance, r.detail.c_str());
    }
    if (!args.json_out.empty()) {
        nlohmann::json j = nlohmann::json::array();
        for (const CheckResult& r : results) {
            j.push_back({{"check_name", r.name},
                         {"status", r.status},
                         {"measured", r.measured},
                         {"tolerance", r.tolerance}});
        }
        std::ofstream out(args.json_out);
        if (!out) {
            throw std::runtime_error("cannot write validation report: " + args.json_out);
        }
        out << j.dump(2) << '\n';
    }
    if (!all_passed(results)) {
        std::printf("validation FAILED\n");
        return kExitValidationFailure;
    }
    std::printf("all checks passed\n");
    return kExitOk;
}

int cmd_dmt(const DmtArgs& args) {
    ScenarioConfig config = load_scenario_file(args.config_path);
    if (!(args.step_db > 0.0)) {
        throw std::invalid_argument("--step must be positive");
    }
    std::vector<std::pair<double, double>> curve;
    for (double g_db = args.window_low_db; g_db <= args.window_high_db + 1e-9;
         g_db += args.step_db) {
        const OutageEstimate est =
            end_to_end_outage(config, db_to_linear(g_db), 0, {config.master_seed, 0});
        curve.emplace_back(g_db, est.p_hat);
        std::printf("%7.2f dB  pout_s1 %.6e\n", g_db, est.p_hat);
    }
    const double slope = empirical_slope(curve, args.window_low_db, args.window_high_db);
    const double theory = diversity(0.0, config.n_used, config.n_f());
    std::printf("fitted slope      %.4f\n", slope);
    std::printf("theoretical order %.4f\n", theory);
    std::printf("relative error    %.4f\n", std::abs(slope - theory) / theory);
    return kExitOk;
}

int cmd_preselect(const PreselectArgs& args) {
    Topology topo;
    if (!args.topology_in.empty()) {
        std::ifstream in(args.topology_in);
        if (!in) {
            throw std::runtime_error("cannot open topology: " + args.topology_in);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        topo = topology_from_text(buf.str());
    } else {
        topo = random_topology(args.n_relays, {args.seed, 0});
    }
    const ScenarioConfig config = scenario_from_topology(topo, args.r1, args.r2, args.n_used,
                                                         args.p_relay, args.trials, args.seed);
    const double gamma_ref = db_to_linear(args.ref_snr_db);
    const std::vector<double> weights = topology_weights(config, gamma_ref);
    const SelectionResult sel = select_relays(weights, args.n_used);

    std::printf("%s", topology_to_text(topo).c_str());
    for (int r = 0; r < config.n_relays; ++r) {
        const bool chosen = std::find(sel.chosen.begin(), sel.chosen.end(), r) != sel.chosen.end();
        std::printf("relay R%-3d weight %.6f%s\n", r, weights[static_cast<std::size_t>(r)],
                    chosen ? "  [chosen]" : "");
    }
    if (!args.topology_out.empty()) {
        std::ofstream out(args.topology_out, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write topology: " + args.topology_out);
        }
        out << topology_to_text(topo);
    }

    if (args.evaluate) {
        std::vector<int> order(weights.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return weights[static_cast<std::size_t>(a)] < weights[static_cast<std::size_t>(b)];
        });
        std::vector<int> worst(order.begin(), order.begin() + args.n_used);
        std::sort(worst.begin(), worst.end());

        const OutageEstimate chosen_est =
            estimate_outage(subscenario(config, sel.chosen), gamma_ref, Source::S1);
        const OutageEstimate worst_est =
            estimate_outage(subscenario(config, worst), gamma_ref, Source::S1);
        std::printf("chosen subset pout_s1 %.6e +-%.1e\n", chosen_est.p_hat,
                    chosen_est.ci_half_width);
        std::printf("lowest-weight subset pout_s1 %.6e +-%.1e\n", worst_est.p_hat,
                    worst_est.ci_half_width);
    }
    return kExitOk;
}

}  // namespace sicrelay
