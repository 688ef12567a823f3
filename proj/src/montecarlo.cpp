#include "sicrelay/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sicrelay/analytic.hpp"
#include "sicrelay/destination.hpp"
#include "sicrelay/fading.hpp"
#include "sicrelay/protocol.hpp"
#include "sicrelay/stats.hpp"

namespace sicrelay {

namespace {

struct WorkerTally {
    std::uint64_t fail_s1 = 0;
    std::uint64_t fail_s2 = 0;
    std::vector<std::array<std::uint64_t, 4>> event_counts;
};

OutageEstimate finish_estimate(std::uint64_t failures, std::uint64_t trials) {
    OutageEstimate est;
    est.failures = failures;
    est.trials = trials;
    est.p_hat = static_cast<double>(failures) / static_cast<double>(trials);
    const Interval iv = wilson_interval(failures, trials);
    est.ci_low = iv.low;
    est.ci_high = iv.high;
    est.ci_half_width = iv.half_width();
    return est;
}

// Trials are assigned to workers by stride over the trial index, and every
// trial owns stream index == trial index, so results do not depend on the
// worker count.
WorkerTally run_worker(const ScenarioConfig& config, double gamma, unsigned worker,
                       unsigned stride) {
    const RateConfig rc = config.rates();
    const double sigma2 = 1.0 / gamma;
    const std::size_t nu = config.active.size();

    WorkerTally tally;
    tally.event_counts.assign(nu, {0, 0, 0, 0});

    ChannelRealization re;
    std::vector<RelayTxState> states;
    std::vector<std::complex<double>> f_active(nu);
    SecondHopModel model;

    for (std::uint64_t t = worker; t < config.trials; t += stride) {
        draw_realization_into(config, {config.master_seed, t}, re);
        step_first_hop_into(config, re, gamma, states);
        for (std::size_t j = 0; j < nu; ++j) {
            f_active[j] = re.f[static_cast<std::size_t>(config.active[j])];
            ++tally.event_counts[j][static_cast<std::size_t>(states[j].event)];
        }
        assemble_into(states, f_active, sigma2, model);
        if (outage_at_destination(gamma_d(model, Source::S1), rc.r1, rc.n_f)) ++tally.fail_s1;
        if (outage_at_destination(gamma_d(model, Source::S2), rc.r2, rc.n_f)) ++tally.fail_s2;
    }
    return tally;
}

}  // namespace

PointResult run_point(const ScenarioConfig& config_in, double gamma) {
    ScenarioConfig config = config_in;
    validate_scenario(config);
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("run_point: gamma must be positive and finite");
    }

    unsigned workers = config.workers;
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    if (static_cast<std::uint64_t>(workers) > config.trials) {
        workers = static_cast<unsigned>(config.trials);
    }

    std::vector<WorkerTally> tallies(workers);
    if (workers == 1) {
        tallies[0] = run_worker(config, gamma, 0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w) {
            pool.emplace_back([&, w] { tallies[w] = run_worker(config, gamma, w, workers); });
        }
        tallies[0] = run_worker(config, gamma, 0, workers);
        for (auto& th : pool) th.join();
    }

    const std::size_t nu = config.active.size();
    std::uint64_t fail_s1 = 0, fail_s2 = 0;
    std::vector<std::array<std::uint64_t, 4>> counts(nu, {0, 0, 0, 0});
    for (const WorkerTally& t : tallies) {
        fail_s1 += t.fail_s1;
        fail_s2 += t.fail_s2;
        for (std::size_t j = 0; j < nu; ++j) {
            for (std::size_t e = 0; e < 4; ++e) counts[j][e] += t.event_counts[j][e];
        }
    }

    PointResult result;
    result.s1 = finish_estimate(fail_s1, config.trials);
    result.s2 = finish_estimate(fail_s2, config.trials);
    result.event_counts = std::move(counts);
    return result;
}

OutageEstimate estimate_outage(const ScenarioConfig& config, double gamma, Source source) {
    const PointResult r = run_point(config, gamma);
    return (source == Source::S1) ? r.s1 : r.s2;
}

std::vector<SweepRow> sweep(const ScenarioConfig& config, const std::vector<double>& gammas_db,
                            bool with_analytic) {
    if (gammas_db.empty()) {
        throw std::invalid_argument("sweep: need at least one SNR point");
    }
    std::vector<SweepRow> rows;
    rows.reserve(gammas_db.size());
    for (double g_db : gammas_db) {
        const double gamma = db_to_linear(g_db);
        SweepRow row;
        row.gamma_db = g_db;
        const PointResult pr = run_point(config, gamma);
        row.s1 = pr.s1;
        row.s2 = pr.s2;
        if (with_analytic && config.n_used <= 8) {
            row.analytic_s1 =
                end_to_end_outage(config, gamma, 0, {config.master_seed, 0}, Source::S1).p_hat;
            row.has_analytic = true;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace sicrelay
