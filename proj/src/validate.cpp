#include "sicrelay/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "sicrelay/destination.hpp"
#include "sicrelay/montecarlo.hpp"
#include "sicrelay/protocol.hpp"
#include "sicrelay/rates.hpp"
#include "sicrelay/stats.hpp"

namespace sicrelay {

namespace {

struct TupleStream {
    TrialStream st;
    explicit TupleStream(SeedSpec seed) : st(seed, StreamDomain::Generic) {}
    double log_uniform(double lo_exp, double hi_exp) {
        return std::pow(10.0, lo_exp + (hi_exp - lo_exp) * st.next_unit());
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * st.next_unit(); }
};

CheckResult make_check(const char* name, double measured, double tolerance, std::string detail,
                       bool info = false) {
    CheckResult r;
    r.name = name;
    r.measured = measured;
    r.tolerance = tolerance;
    r.detail = std::move(detail);
    r.status = info ? "info" : (measured <= tolerance ? "pass" : "fail");
    return r;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

// --- closed-form structural scans -----------------------------------------

CheckResult check_range(std::uint64_t tuples, SeedSpec seed) {
    TupleStream ts(seed);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < tuples; ++i) {
        const double lambda = ts.log_uniform(-1.0, 1.0);
        const double mu = ts.log_uniform(-1.0, 1.0);
        const RateConfig rc = rates_from_thresholds(ts.uniform(1.0, 8.0), ts.uniform(1.0, 8.0), 3);
        const double gamma = ts.log_uniform(0.0, 4.0);
        const RelayEventProbs p = event_probs(lambda, mu, rc, gamma);
        for (double v : {p.p_both_fail, p.p_s1fail_s2ok, p.p_s1ok_s2fail, p.p_both_ok}) {
            worst = std::max(worst, std::max(-v, v - 1.0));
        }
    }
    return make_check("closed_form_range", std::max(worst, 0.0), 0.0,
                      "max excursion of any event probability outside [0,1]");
}

CheckResult check_monotonicity(std::uint64_t tuples, SeedSpec seed) {
    TupleStream ts(seed);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < tuples; ++i) {
        const double lambda = ts.log_uniform(-1.0, 1.0);
        const double mu = ts.log_uniform(-1.0, 1.0);
        const RateConfig rc = rates_from_thresholds(ts.uniform(1.0, 8.0), ts.uniform(1.0, 8.0), 3);
        double prev_fail = 1.0, prev_ok = 0.0;
        for (double g_db = -10.0; g_db <= 40.0; g_db += 2.5) {
            const RelayEventProbs p = event_probs(lambda, mu, rc, db_to_linear(g_db));
            worst = std::max(worst, p.p_both_fail - prev_fail);
            worst = std::max(worst, prev_ok - p.p_both_ok);
            prev_fail = p.p_both_fail;
            prev_ok = p.p_both_ok;
        }
    }
    return make_check("gamma_monotonicity", std::max(worst, 0.0), 1e-12,
                      "max increase of p_both_fail (or decrease of p_both_ok) along a rising SNR grid");
}

CheckResult check_swap_symmetry(std::uint64_t tuples, SeedSpec seed) {
    TupleStream ts(seed);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < tuples; ++i) {
        const double lambda = ts.log_uniform(-1.0, 1.0);
        const double mu = ts.log_uniform(-1.0, 1.0);
        const double k1 = ts.uniform(1.0, 8.0), k2 = ts.uniform(1.0, 8.0);
        const double gamma = ts.log_uniform(0.0, 4.0);
        const RelayEventProbs p = event_probs(lambda, mu, rates_from_thresholds(k1, k2, 3), gamma);
        const RelayEventProbs q = event_probs(mu, lambda, rates_from_thresholds(k2, k1, 3), gamma);
        worst = std::max({worst, std::abs(p.p_both_fail - q.p_both_fail),
                          std::abs(p.p_both_ok - q.p_both_ok),
                          std::abs(p.p_s1fail_s2ok - q.p_s1ok_s2fail),
                          std::abs(p.p_s1ok_s2fail - q.p_s1fail_s2ok)});
    }
    return make_check("swap_symmetry", worst, 1e-12,
                      "max asymmetry under exchanging the two sources (lambda<->mu, k1<->k2)");
}

// --- closed forms vs the protocol-level Monte Carlo oracle ----------------

CheckResult check_closed_vs_mc(bool full, std::uint64_t trials, SeedSpec seed) {
    const std::vector<double> gammas_db = full ? std::vector<double>{0, 10, 20, 30, 40}
                                               : std::vector<double>{0, 20, 40};
    const std::vector<double> lambdas = full ? std::vector<double>{0.1, 0.5, 1, 2, 10}
                                             : std::vector<double>{0.1, 1, 10};
    const std::vector<std::pair<double, double>> rate_pairs =
        full ? std::vector<std::pair<double, double>>{{1, 1}, {1, 2}, {2, 2}}
             : std::vector<std::pair<double, double>>{{1, 1}, {2, 2}};
    const std::uint64_t n = full ? 10000000ull : trials;

    double worst = 0.0;
    std::uint64_t point = 0;
    for (const auto& [r1, r2] : rate_pairs) {
        const RateConfig rc = make_rates(r1, r2, 3);
        for (double lambda : lambdas) {
            for (double g_db : gammas_db) {
                const double gamma = db_to_linear(g_db);
                const RelayEventProbs cf = event_probs(lambda, 1.0, rc, gamma);
                const std::array<double, 4> freq =
                    event_frequency_mc(lambda, 1.0, rc, gamma, n, {seed.master_seed, point});
                const double cfv[4] = {cf.p_both_fail, cf.p_s1fail_s2ok, cf.p_s1ok_s2fail,
                                       cf.p_both_ok};
                for (int tag = 0; tag < 4; ++tag) {
                    const double sigma =
                        std::sqrt(std::max(cfv[tag] * (1.0 - cfv[tag]), 1e-300) / n);
                    worst = std::max(worst, std::abs(freq[tag] - cfv[tag]) / sigma);
                }
                ++point;
            }
        }
    }
    return make_check("closed_vs_mc", worst, 3.0,
                      fmt("max |closed form - frequency| in standard errors over %g points", point));
}

// --- limiting behavior -----------------------------------------------------

CheckResult check_high_snr_limits(SeedSpec) {
    double worst = 0.0;
    for (double k1 : {1.0, 2.0, 7.0}) {
        for (double k2 : {1.0, 2.0, 7.0}) {
            const RateConfig rc = rates_from_thresholds(k1, k2, 3);
            for (double gamma : {1.0, 10.0, 100.0}) {
                // one source far stronger than the other: its block always
                // decodes, the weak one reduces to a single-user test
                const RelayEventProbs p = event_probs(1e8, 1.0, rc, gamma);
                const double e1 = std::exp(-k1 / gamma);
                worst = std::max(worst, std::abs(p.p_both_fail - (1.0 - e1)));
                worst = std::max(worst, p.p_s1fail_s2ok);
                worst = std::max(worst, std::abs(p.p_s1ok_s2fail - e1));
            }
        }
    }
    for (double lambda : {0.5, 1.0, 2.0}) {
        const RateConfig rc = rates_from_thresholds(2.0, 2.0, 3);
        worst = std::max(worst, event_probs(lambda, 1.0, rc, 1e9).p_s1ok_s2fail);
    }
    return make_check("high_snr_limits", worst, 1e-6,
                      "max deviation from the strong-interferer and infinite-SNR limits");
}

CheckResult check_high_snr_constants(SeedSpec seed) {
    TupleStream ts(seed);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double lambda = ts.log_uniform(-1.0, 1.0);
        const double mu = ts.log_uniform(-1.0, 1.0);
        const RateConfig rc = rates_from_thresholds(ts.uniform(1.0, 8.0), ts.uniform(1.0, 8.0), 3);
        const RelayEventProbs p = event_probs(lambda, mu, rc, 1e9);
        const RelayEventProbs c = high_snr_constants(lambda, mu, rc);
        worst = std::max({worst, std::abs(p.p_both_fail - c.p_both_fail), p.p_s1fail_s2ok,
                          p.p_s1ok_s2fail, std::abs(p.p_both_ok - c.p_both_ok)});
    }
    return make_check("high_snr_constants", worst, 1e-6,
                      "max gap between finite-SNR probabilities at 90 dB and their limits");
}

// --- destination processing ------------------------------------------------

CheckResult check_mmse_sinr(SeedSpec seed) {
    TrialStream st(seed, StreamDomain::Generic);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(st.next_u64() % 4);
        const int col = static_cast<int>(st.next_u64() % 2);
        SecondHopModel model;
        model.sigma2 = 1.0;
        model.h.resize(static_cast<std::size_t>(n));
        model.noise_var.resize(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
            model.h[static_cast<std::size_t>(r)] = {0.0, 0.0};
            model.h[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = st.next_gain(1.0);
            model.noise_var[static_cast<std::size_t>(r)] = 0.1 + 1.9 * st.next_unit();
        }
        const Source source = (col == 0) ? Source::S1 : Source::S2;
        const double gd = gamma_d(model, source);

        // recover the estimator weights by probing with unit observations
        std::vector<std::complex<double>> w(static_cast<std::size_t>(n));
        std::vector<std::complex<double>> y(static_cast<std::size_t>(n), {0.0, 0.0});
        for (int r = 0; r < n; ++r) {
            y[static_cast<std::size_t>(r)] = {1.0, 0.0};
            w[static_cast<std::size_t>(r)] =
                mmse_estimate(model, y)[static_cast<std::size_t>(col)];
            y[static_cast<std::size_t>(r)] = {0.0, 0.0};
        }
        std::complex<double> signal{0.0, 0.0};
        double noise = 0.0;
        for (int r = 0; r < n; ++r) {
            signal += w[static_cast<std::size_t>(r)] *
                      model.h[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            noise += std::norm(w[static_cast<std::size_t>(r)]) *
                     model.noise_var[static_cast<std::size_t>(r)];
        }
        const double sinr = std::norm(signal) / noise;
        worst = std::max(worst, std::abs(sinr - gd) / gd);
    }
    return make_check("mmse_sinr_identity", worst, 1e-9,
                      "max relative gap between estimator SINR and the combining formula");
}

CheckResult check_mmse_mse(SeedSpec seed) {
    TrialStream st(seed, StreamDomain::Generic);
    double worst = 0.0;
    for (int m = 0; m < 3; ++m) {
        const int n = 2 + m;
        SecondHopModel model;
        model.sigma2 = 1.0;
        model.h.resize(static_cast<std::size_t>(n));
        model.noise_var.resize(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
            model.h[static_cast<std::size_t>(r)] = {st.next_gain(1.0), {0.0, 0.0}};
            model.noise_var[static_cast<std::size_t>(r)] = 0.2 + st.next_unit();
        }
        const double gd = gamma_d(model, Source::S1);
        double mse = 0.0;
        const int draws = 100000;
        std::vector<std::complex<double>> y(static_cast<std::size_t>(n));
        for (int d = 0; d < draws; ++d) {
            const std::complex<double> x = st.next_gain(1.0);
            for (int r = 0; r < n; ++r) {
                y[static_cast<std::size_t>(r)] =
                    model.h[static_cast<std::size_t>(r)][0] * x +
                    st.next_gain(model.noise_var[static_cast<std::size_t>(r)]);
            }
            mse += std::norm(mmse_estimate(model, y)[0] - x);
        }
        mse /= draws;
        const double target = 1.0 / (1.0 + gd);
        worst = std::max(worst, std::abs(mse - target) / target);
    }
    return make_check("mmse_mse_identity", worst, 0.02,
                      "max relative gap between empirical estimator MSE and 1/(1+SINR)");
}

// --- second hop and end-to-end cross checks --------------------------------

ScenarioConfig reference_scenario(std::uint64_t trials, std::uint64_t seed) {
    ScenarioConfig config = make_uniform_scenario(2, 1.0, 1.0, trials, seed);
    config.workers = 1;
    return config;
}

CheckResult check_af_sum(std::uint64_t trials, SeedSpec seed) {
    // with both blocks decoded everywhere the relays forward clean unit-power
    // signals, so the combining SNR is a scaled Erlang sum with an exact tail
    const ScenarioConfig config = reference_scenario(std::max<std::uint64_t>(trials / 10, 10000),
                                                     seed.master_seed);
    const double gamma = 1.0;
    const RateConfig rc = config.rates();
    const OutageEstimate est = second_hop_outage_given_events(
        config, {DecodeEvent::Both, DecodeEvent::Both}, gamma, config.trials,
        {seed.master_seed, 0}, Source::S1, ConditioningMode::Unconditional);
    const double t = 2.0 * rc.k1 / (gamma * config.p_relay);
    const double exact = 1.0 - std::exp(-t) * (1.0 + t);
    const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(config.trials));
    return make_check("af_sum_closed_form", std::abs(est.p_hat - exact) / sigma, 3.0,
                      fmt("clean-forwarding outage vs exact sum tail, %g trials",
                          static_cast<double>(config.trials)));
}

CheckResult check_analytic_vs_sim(std::uint64_t trials, SeedSpec seed) {
    const ScenarioConfig config = reference_scenario(trials, seed.master_seed);
    double worst = -1.0;
    for (double g_db : {0.0, 10.0, 20.0}) {
        const double gamma = db_to_linear(g_db);
        const PointResult sim = run_point(config, gamma);
        const OutageEstimate ana =
            end_to_end_outage(config, gamma, 0, {seed.master_seed, 0}, Source::S1);
        const double gap =
            std::max(ana.ci_low, sim.s1.ci_low) - std::min(ana.ci_high, sim.s1.ci_high);
        worst = std::max(worst, gap);
    }
    return make_check("analytic_vs_sim", worst, 0.0,
                      "max interval separation between analytic and simulated outage (<=0 overlaps)");
}

CheckResult check_quadrature_vs_event_mc(std::uint64_t trials, SeedSpec seed) {
    const ScenarioConfig config = reference_scenario(trials, seed.master_seed);
    const double gamma = db_to_linear(10.0);
    const std::uint64_t per_event = std::max<std::uint64_t>(1000, trials / 100);
    const OutageEstimate quad =
        end_to_end_outage(config, gamma, 0, {seed.master_seed, 0}, Source::S1);
    EndToEndOptions mc_options;
    mc_options.method = SecondHopMethod::ConditionalMc;
    const OutageEstimate mc = end_to_end_outage(config, gamma, per_event, {seed.master_seed, 1},
                                                Source::S1, mc_options);
    const double budget = (3.0 / 1.96) * mc.ci_half_width + quad.ci_half_width + 1e-15;
    return make_check("quadrature_vs_event_mc", std::abs(quad.p_hat - mc.p_hat) / budget, 1.0,
                      fmt("deterministic vs event-conditioned sampling, %g trials/event",
                          static_cast<double>(per_event)));
}

CheckResult check_conditioning_gap(std::uint64_t trials, SeedSpec seed) {
    const ScenarioConfig config = reference_scenario(trials, seed.master_seed);
    const double gamma = db_to_linear(10.0);
    const std::uint64_t n = std::max<std::uint64_t>(trials / 10, 10000);
    const EventVector events{DecodeEvent::OnlyS1, DecodeEvent::None};
    const OutageEstimate cond = second_hop_outage_given_events(
        config, events, gamma, n, {seed.master_seed, 0}, Source::S1,
        ConditioningMode::Conditional);
    const OutageEstimate unc = second_hop_outage_given_events(
        config, events, gamma, n, {seed.master_seed, 1}, Source::S1,
        ConditioningMode::Unconditional);
    return make_check("conditioning_gap", std::abs(cond.p_hat - unc.p_hat), 0.0,
                      "gap from ignoring the decode-event conditioning of the first-hop gains",
                      /*info=*/true);
}

}  // namespace

std::array<double, 4> event_frequency_mc(double lambda, double mu, const RateConfig& rates,
                                         double gamma, std::uint64_t trials, SeedSpec seed) {
    if (trials == 0) {
        throw std::invalid_argument("event_frequency_mc: need at least one trial");
    }
    TrialStream st(seed, StreamDomain::Generic);
    const double mean_y = 1.0 / mu, mean_x = 1.0 / lambda;
    std::array<std::uint64_t, 4> counts{0, 0, 0, 0};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double y = st.next_exponential(mean_y);
        const double x = st.next_exponential(mean_x);
        switch (relay_decode(y, x, rates, gamma)) {
            case DecodeEvent::None: ++counts[0]; break;
            case DecodeEvent::OnlyS2: ++counts[1]; break;
            case DecodeEvent::OnlyS1: ++counts[2]; break;
            case DecodeEvent::Both: ++counts[3]; break;
        }
    }
    std::array<double, 4> freq;
    for (int i = 0; i < 4; ++i) {
        freq[static_cast<std::size_t>(i)] =
            static_cast<double>(counts[static_cast<std::size_t>(i)]) / static_cast<double>(trials);
    }
    return freq;
}

double max_sum_to_one_error(EventProbsFn fn, std::uint64_t tuples, SeedSpec seed) {
    TupleStream ts(seed);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < tuples; ++i) {
        const double lambda = ts.log_uniform(-1.0, 1.0);
        const double mu = ts.log_uniform(-1.0, 1.0);
        const RateConfig rc = rates_from_thresholds(ts.uniform(1.0, 8.0), ts.uniform(1.0, 8.0), 3);
        const double gamma = ts.log_uniform(0.0, 4.0);
        const RelayEventProbs p = fn(lambda, mu, rc, gamma);
        worst = std::max(worst,
                         std::abs(p.p_both_fail + p.p_s1fail_s2ok + p.p_s1ok_s2fail + p.p_both_ok -
                                  1.0));
    }
    return worst;
}

std::vector<CheckResult> run_validation(const ValidateOptions& options) {
    const SeedSpec seed{options.seed, 0};
    std::vector<CheckResult> results;
    results.push_back(make_check("sum_to_one", max_sum_to_one_error(&event_probs, 10000, seed),
                                 1e-12, "max |sum of event probabilities - 1| over 10^4 tuples"));
    results.push_back(check_range(10000, seed));
    results.push_back(check_monotonicity(1000, seed));
    results.push_back(check_swap_symmetry(10000, seed));
    results.push_back(check_closed_vs_mc(options.full_grid, options.trials, seed));
    results.push_back(check_high_snr_limits(seed));
    results.push_back(check_high_snr_constants(seed));
    results.push_back(check_mmse_sinr(seed));
    results.push_back(check_mmse_mse(seed));
    results.push_back(check_af_sum(options.trials, seed));
    results.push_back(check_analytic_vs_sim(options.trials, seed));
    results.push_back(check_quadrature_vs_event_mc(options.trials, seed));
    results.push_back(check_conditioning_gap(options.trials, seed));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) {
        if (r.status == "fail") return false;
    }
    return true;
}

}  // namespace sicrelay
