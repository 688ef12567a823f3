#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "sicrelay/cli.hpp"

namespace {

int dispatch(const CLI::App& app, const sicrelay::SweepArgs& sweep_args,
             const sicrelay::ValidateArgs& validate_args, const sicrelay::DmtArgs& dmt_args,
             const sicrelay::PreselectArgs& preselect_args) {
    if (app.got_subcommand("sweep")) return sicrelay::cmd_sweep(sweep_args);
    if (app.got_subcommand("validate")) return sicrelay::cmd_validate(validate_args);
    if (app.got_subcommand("dmt")) return sicrelay::cmd_dmt(dmt_args);
    if (app.got_subcommand("preselect")) return sicrelay::cmd_preselect(preselect_args);
    return sicrelay::kExitUsageError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-source multi-relay outage simulator and analytical calculator"};
    app.require_subcommand(1);

    sicrelay::SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Simulated + analytic outage across an SNR grid");
    sweep->add_option("--config", sweep_args.config_path, "scenario config (JSON)");
    sweep->add_option("--from-manifest", sweep_args.manifest_in,
                      "rerun a previous sweep from its manifest");
    sweep->add_option("--snr", sweep_args.snr_range, "SNR grid start:step:stop in dB");
    sweep->add_option("--snr-list", sweep_args.snr_list, "comma-separated SNR values in dB");
    sweep->add_option("--out", sweep_args.out_csv, "output CSV path");
    sweep->add_option("--manifest-out", sweep_args.manifest_out,
                      "manifest path (default: <out>.manifest.json)");
    sweep->add_flag("--no-analytic", sweep_args.no_analytic, "skip the analytic curve");
    sweep->add_option("--trials", sweep_args.trials, "override trials per point");
    sweep->add_option("--seed", sweep_args.seed, "override master seed");
    sweep->add_option("--workers", sweep_args.workers, "override worker count (0 = all cores)");

    sicrelay::ValidateArgs validate_args;
    CLI::App* validate =
        app.add_subcommand("validate", "Cross-validation suite (closed forms vs simulation)");
    validate->add_option("--grid", validate_args.grid, "parameter grid: small or full");
    validate->add_option("--trials", validate_args.trials, "Monte Carlo size for sampled checks");
    validate->add_option("--seed", validate_args.seed, "suite seed");
    validate->add_option("--json", validate_args.json_out, "write a JSON report here");

    sicrelay::DmtArgs dmt_args;
    CLI::App* dmt = app.add_subcommand("dmt", "High-SNR slope of the analytic outage curve");
    dmt->add_option("--config", dmt_args.config_path, "scenario config (JSON)")->required();
    dmt->add_option("--window-low", dmt_args.window_low_db, "fit window lower edge (dB)");
    dmt->add_option("--window-high", dmt_args.window_high_db, "fit window upper edge (dB)");
    dmt->add_option("--step", dmt_args.step_db, "grid step inside the window (dB)");

    sicrelay::PreselectArgs preselect_args;
    CLI::App* preselect =
        app.add_subcommand("preselect", "Weight-based relay pre-selection on a topology");
    preselect->add_option("--n-relays", preselect_args.n_relays, "candidate relay count");
    preselect->add_option("--n-used", preselect_args.n_used, "relays to select");
    preselect->add_option("--seed", preselect_args.seed, "topology / run seed");
    preselect->add_option("--ref-snr-db", preselect_args.ref_snr_db, "selection reference SNR (dB)");
    preselect->add_option("--r1", preselect_args.r1, "source 1 rate");
    preselect->add_option("--r2", preselect_args.r2, "source 2 rate");
    preselect->add_option("--relay-power", preselect_args.p_relay, "per-relay power budget");
    preselect->add_option("--trials", preselect_args.trials, "trials for --evaluate");
    preselect->add_option("--in-topology", preselect_args.topology_in, "import a topology file");
    preselect->add_option("--out-topology", preselect_args.topology_out, "export the topology");
    preselect->add_flag("--evaluate", preselect_args.evaluate,
                        "simulate chosen vs lowest-weight subset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? sicrelay::kExitOk : sicrelay::kExitUsageError;
    }

    try {
        return dispatch(app, sweep_args, validate_args, dmt_args, preselect_args);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return sicrelay::kExitUsageError;
    }
}
