#include "sicrelay/fading.hpp"

#include <cmath>
#include <stdexcept>

#include "sicrelay/scenario.hpp"

namespace sicrelay {

LinkStats link_stats_from_mean(double mean_gain) {
    if (!(mean_gain > 0.0) || !std::isfinite(mean_gain)) {
        throw std::invalid_argument("link_stats_from_mean: mean gain must be positive and finite");
    }
    return {mean_gain, 1.0 / mean_gain};
}

std::complex<double> draw_complex_gain(const LinkStats& stats, SeedSpec seed) {
    if (!(stats.mean_gain > 0.0) || !std::isfinite(stats.mean_gain)) {
        throw std::invalid_argument("draw_complex_gain: mean gain must be positive and finite");
    }
    TrialStream stream(seed, StreamDomain::Fading);
    return stream.next_gain(stats.mean_gain);
}

void draw_realization_into(const ScenarioConfig& config, SeedSpec seed, ChannelRealization& out) {
    const std::size_t n = static_cast<std::size_t>(config.n_relays);
    if (n == 0) {
        throw std::invalid_argument("draw_realization: scenario has no relays");
    }
    out.h1.resize(n);
    out.h2.resize(n);
    out.f.resize(n);
    TrialStream stream(seed, StreamDomain::Fading);
    for (std::size_t r = 0; r < n; ++r) {
        out.h1[r] = stream.next_gain(config.h1_stats[r].mean_gain);
        out.h2[r] = stream.next_gain(config.h2_stats[r].mean_gain);
    }
    for (std::size_t r = 0; r < n; ++r) {
        out.f[r] = stream.next_gain(config.f_stats[r].mean_gain);
    }
}

ChannelRealization draw_realization(const ScenarioConfig& config, SeedSpec seed) {
    ChannelRealization out;
    draw_realization_into(config, seed, out);
    return out;
}

}  // namespace sicrelay
