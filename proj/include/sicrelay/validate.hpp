#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sicrelay/analytic.hpp"

namespace sicrelay {

// Result of one named consistency check. `measured` is the observed worst
// deviation in the units of `tolerance`; status is "pass", "fail" or "info".
struct CheckResult {
    std::string name;
    std::string status;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ValidateOptions {
    bool full_grid = false;          // full parameter grid + 1e7-trial oracles
    std::uint64_t trials = 1000000;  // Monte Carlo size for the sampled checks
    std::uint64_t seed = 20260815;
};

// Cross-validation suite tying the closed forms, the protocol simulation and
// the destination processing together. Every check is deterministic for a
// fixed seed.
std::vector<CheckResult> run_validation(const ValidateOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

// Monte Carlo decode-event frequencies straight from the protocol decision
// logic (the oracle the closed forms are checked against). Tag order follows
// RelayEventProbs: both_fail, s1fail_s2ok, s1ok_s2fail, both_ok.
std::array<double, 4> event_frequency_mc(double lambda, double mu, const RateConfig& rates,
                                         double gamma, std::uint64_t trials, SeedSpec seed);

// Sum-to-one scan over random parameter tuples, pluggable so a deliberately
// corrupted evaluator can be shown to trip the check. Returns max |sum - 1|.
using EventProbsFn = RelayEventProbs (*)(double, double, const RateConfig&, double);
double max_sum_to_one_error(EventProbsFn fn, std::uint64_t tuples, SeedSpec seed);

}  // namespace sicrelay
