#pragma once

#include <complex>
#include <vector>

#include "sicrelay/rng.hpp"

namespace sicrelay {

struct ScenarioConfig;

// First- and second-order statistics of one fading link. Gains are zero-mean
// circularly symmetric complex Gaussian, so |h|^2 is exponential with the
// given mean and `rate` is its exponential rate parameter 1/mean.
struct LinkStats {
    double mean_gain = 1.0;
    double rate = 1.0;
};

LinkStats link_stats_from_mean(double mean_gain);

// One block-fading draw of every link in a scenario: h1[r], h2[r] are the
// source-1 and source-2 gains towards relay r, f[r] is relay r towards the
// destination. Gains stay constant for the whole frame.
struct ChannelRealization {
    std::vector<std::complex<double>> h1;
    std::vector<std::complex<double>> h2;
    std::vector<std::complex<double>> f;
};

// Single link draw. The same SeedSpec always yields the bit-identical value.
std::complex<double> draw_complex_gain(const LinkStats& stats, SeedSpec seed);

// Draws all 2*N + N link gains of one frame from one per-trial stream, in a
// fixed order (h1[r], h2[r] for ascending r, then f[r]). Throws on a scenario
// with no relays.
ChannelRealization draw_realization(const ScenarioConfig& config, SeedSpec seed);

// Allocation-free variant for hot loops; `out` keeps its capacity.
void draw_realization_into(const ScenarioConfig& config, SeedSpec seed, ChannelRealization& out);

}  // namespace sicrelay
