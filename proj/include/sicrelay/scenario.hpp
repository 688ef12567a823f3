#pragma once

#include <cstdint>
#include <vector>

#include "sicrelay/fading.hpp"
#include "sicrelay/rates.hpp"

namespace sicrelay {

// Full description of one experiment: a pool of n_relays candidate relays of
// which n_used actually transmit (the `active` indices), two source rates,
// per-link statistics and the run parameters. The frame length is always
// n_used + 1 slots (one shared listening slot plus one slot per transmitting
// relay) and is derived, never stored, so it cannot go stale.
struct ScenarioConfig {
    int n_relays = 1;
    int n_used = 1;
    std::vector<int> active;  // size n_used; defaulted to 0..n_used-1 by validate_scenario

    double r1 = 1.0;
    double r2 = 1.0;

    std::vector<LinkStats> h1_stats;  // source 1 -> relay r
    std::vector<LinkStats> h2_stats;  // source 2 -> relay r
    std::vector<LinkStats> f_stats;   // relay r -> destination

    double p_relay = 1.0;
    std::uint64_t trials = 100000;
    std::uint64_t master_seed = 1;
    int workers = 0;  // 0 = one thread per hardware core

    int n_f() const { return n_used + 1; }
    RateConfig rates() const;
};

// Uniform-gain convenience constructor (every link mean 1).
ScenarioConfig make_uniform_scenario(int n_relays, double r1, double r2,
                                     std::uint64_t trials, std::uint64_t master_seed);

// Fills defaults (active list) and throws std::invalid_argument on
// inconsistent sizes, non-positive gains or rates, or bad indices.
void validate_scenario(ScenarioConfig& config);

// Scenario restricted to the given candidate indices: those relays become
// the whole pool, all of them active, with the frame length recomputed.
ScenarioConfig subscenario(const ScenarioConfig& config, const std::vector<int>& indices);

// Monte Carlo (or analytic) outage result. For simulation estimates
// p_hat = failures / trials and the confidence fields come from a 95% Wilson
// interval; analytic estimates carry trials = 0 and a deterministic error
// bracket instead.
struct OutageEstimate {
    double p_hat = 0.0;
    std::uint64_t trials = 0;
    double ci_half_width = 0.0;
    std::uint64_t failures = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;

    // Fewer than ~20 observed failures means the relative error is large.
    bool low_count() const { return trials > 0 && failures < 20; }
};

}  // namespace sicrelay
