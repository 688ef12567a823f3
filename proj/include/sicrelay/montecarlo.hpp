#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sicrelay/protocol.hpp"
#include "sicrelay/scenario.hpp"

namespace sicrelay {

// One simulated grid point: outage of both sources plus the per-relay decode
// event tallies (index order follows config.active, tag order follows
// DecodeEvent). Deterministic for a fixed master seed regardless of the
// worker count: trial t always consumes stream t.
struct PointResult {
    OutageEstimate s1;
    OutageEstimate s2;
    std::vector<std::array<std::uint64_t, 4>> event_counts;
};

PointResult run_point(const ScenarioConfig& config, double gamma);

// Full-pipeline Monte Carlo outage of one source at one SNR.
OutageEstimate estimate_outage(const ScenarioConfig& config, double gamma, Source source);

struct SweepRow {
    double gamma_db = 0.0;
    OutageEstimate s1;
    OutageEstimate s2;
    double analytic_s1 = 0.0;
    bool has_analytic = false;
};

// Simulated outage across an SNR grid, with the deterministic analytic curve
// for source 1 alongside whenever the transmitting relay count permits the
// event enumeration (n_used <= 8).
std::vector<SweepRow> sweep(const ScenarioConfig& config, const std::vector<double>& gammas_db,
                            bool with_analytic = true);

}  // namespace sicrelay
