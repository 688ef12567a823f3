#include "sicrelay/preselect.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sicrelay/fading.hpp"

namespace sicrelay {

namespace {

constexpr double kAnchorClearance = 1e-3;

const Topology::Node kAnchors[3] = {{"S1", 0.0, 0.25}, {"S2", 0.0, 0.75}, {"D", 1.0, 0.5}};

double dist(const Topology::Node& a, const Topology::Node& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace

double relay_weight(double lambda, double mu, const RateConfig& rates, double gamma) {
    const RelayEventProbs p = event_probs(lambda, mu, rates, gamma);
    return p.p_s1ok_s2fail * rates.r1 + p.p_s1fail_s2ok * rates.r2 +
           p.p_both_ok * (rates.r1 + rates.r2);
}

SelectionResult select_relays(const std::vector<double>& weights, int n_used) {
    const int n = static_cast<int>(weights.size());
    if (n_used < 1 || n_used > n) {
        throw std::invalid_argument("select_relays: need 1 <= n_used <= candidate count");
    }
    for (double w : weights) {
        if (!std::isfinite(w)) {
            throw std::invalid_argument("select_relays: weights must be finite");
        }
    }
    std::vector<int> order(weights.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return weights[static_cast<std::size_t>(a)] > weights[static_cast<std::size_t>(b)];
    });
    SelectionResult result;
    result.weights = weights;
    result.chosen.assign(order.begin(), order.begin() + n_used);
    std::sort(result.chosen.begin(), result.chosen.end());
    return result;
}

Topology random_topology(int n_relays, SeedSpec seed) {
    if (n_relays < 1) {
        throw std::invalid_argument("random_topology: need at least one relay");
    }
    Topology topo;
    topo.nodes.assign(std::begin(kAnchors), std::end(kAnchors));
    TrialStream st(seed, StreamDomain::Topology);
    for (int r = 0; r < n_relays; ++r) {
        Topology::Node node{"R" + std::to_string(r), 0.0, 0.0};
        for (;;) {
            node.x = st.next_unit();
            node.y = st.next_unit();
            bool clear = true;
            for (const auto& a : kAnchors) {
                if (dist(node, a) < kAnchorClearance) clear = false;
            }
            if (clear) break;
        }
        topo.nodes.push_back(node);
    }
    return topo;
}

std::string topology_to_text(const Topology& topology) {
    std::string out = "# node layout: id x y\n";
    char line[96];
    for (const auto& n : topology.nodes) {
        std::snprintf(line, sizeof(line), "%s %.17g %.17g\n", n.id.c_str(), n.x, n.y);
        out += line;
    }
    return out;
}

Topology topology_from_text(const std::string& text) {
    Topology topo;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        Topology::Node node;
        if (!(fields >> node.id)) continue;  // blank line
        if (!(fields >> node.x >> node.y)) {
            throw std::runtime_error("topology_from_text: malformed record '" + line + "'");
        }
        std::string extra;
        if (fields >> extra) {
            throw std::runtime_error("topology_from_text: trailing fields in '" + line + "'");
        }
        topo.nodes.push_back(node);
    }
    return topo;
}

ScenarioConfig scenario_from_topology(const Topology& topology, double r1, double r2, int n_used,
                                      double p_relay, std::uint64_t trials,
                                      std::uint64_t master_seed) {
    const Topology::Node* s1 = nullptr;
    const Topology::Node* s2 = nullptr;
    const Topology::Node* d = nullptr;
    std::vector<const Topology::Node*> relays;
    for (const auto& n : topology.nodes) {
        if (n.id == "S1") s1 = &n;
        else if (n.id == "S2") s2 = &n;
        else if (n.id == "D") d = &n;
        else relays.push_back(&n);
    }
    if (!s1 || !s2 || !d) {
        throw std::invalid_argument("scenario_from_topology: topology must contain nodes S1, S2 and D");
    }
    if (relays.empty()) {
        throw std::invalid_argument("scenario_from_topology: topology has no relay nodes");
    }

    ScenarioConfig config;
    config.n_relays = static_cast<int>(relays.size());
    config.n_used = n_used;
    config.r1 = r1;
    config.r2 = r2;
    config.p_relay = p_relay;
    config.trials = trials;
    config.master_seed = master_seed;
    for (const auto* r : relays) {
        const double d1 = dist(*s1, *r);
        const double d2 = dist(*s2, *r);
        const double dd = dist(*r, *d);
        if (!(d1 > 0.0) || !(d2 > 0.0) || !(dd > 0.0)) {
            throw std::invalid_argument("scenario_from_topology: relay '" + r->id +
                                        "' coincides with another node");
        }
        config.h1_stats.push_back(link_stats_from_mean(1.0 / (d1 * d1)));
        config.h2_stats.push_back(link_stats_from_mean(1.0 / (d2 * d2)));
        config.f_stats.push_back(link_stats_from_mean(1.0 / (dd * dd)));
    }
    validate_scenario(config);
    return config;
}

std::vector<double> topology_weights(const ScenarioConfig& config, double gamma_ref) {
    const RateConfig rc = config.rates();
    std::vector<double> weights;
    weights.reserve(static_cast<std::size_t>(config.n_relays));
    for (int r = 0; r < config.n_relays; ++r) {
        weights.push_back(relay_weight(config.h2_stats[static_cast<std::size_t>(r)].rate,
                                       config.h1_stats[static_cast<std::size_t>(r)].rate, rc,
                                       gamma_ref));
    }
    return weights;
}

}  // namespace sicrelay
