#pragma once

#include <string>
#include <vector>

#include "sicrelay/analytic.hpp"
#include "sicrelay/rng.hpp"
#include "sicrelay/scenario.hpp"

namespace sicrelay {

// Long-term usefulness of a relay: its expected forwarded spectral
// efficiency. Decoding only source 1 is worth r1, only source 2 is worth r2,
// both is worth r1 + r2; a relay that decodes nothing forwards no decoded
// rate and contributes zero weight. lambda/mu are the fading rates of the
// source-2 and source-1 links at this relay.
double relay_weight(double lambda, double mu, const RateConfig& rates, double gamma);

struct SelectionResult {
    std::vector<int> chosen;      // ascending candidate indices, size n_used
    std::vector<double> weights;  // weight of every candidate
};

// Picks the n_used highest-weight candidates; ties resolved towards the
// lower index. Because the objective is a sum of independent per-relay
// weights this greedy pick is exactly the brute-force optimum.
SelectionResult select_relays(const std::vector<double>& weights, int n_used);

// Unit-square topology: the two sources and the destination sit at fixed
// anchor points, relays are placed uniformly at random (re-drawn if they
// land within 1e-3 of an anchor). Link mean gains follow an inverse-square
// path loss on the node distance.
struct Topology {
    struct Node {
        std::string id;
        double x = 0.0;
        double y = 0.0;
    };
    std::vector<Node> nodes;  // S1, S2, D, then R0..R{n-1}
};

Topology random_topology(int n_relays, SeedSpec seed);

// Plain-text record form "id x y", one node per line, '#' comments allowed.
std::string topology_to_text(const Topology& topology);
Topology topology_from_text(const std::string& text);

// Scenario whose link statistics come from the topology's path-loss gains.
ScenarioConfig scenario_from_topology(const Topology& topology, double r1, double r2,
                                      int n_used, double p_relay, std::uint64_t trials,
                                      std::uint64_t master_seed);

// Per-candidate weights of a topology-derived scenario, evaluated at the
// given reference SNR (default 20 dB).
std::vector<double> topology_weights(const ScenarioConfig& config, double gamma_ref = 100.0);

}  // namespace sicrelay
