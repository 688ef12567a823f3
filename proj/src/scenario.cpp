#include "sicrelay/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sicrelay {

RateConfig ScenarioConfig::rates() const { return make_rates(r1, r2, n_f()); }

ScenarioConfig make_uniform_scenario(int n_relays, double r1, double r2, std::uint64_t trials,
                                     std::uint64_t master_seed) {
    ScenarioConfig cfg;
    cfg.n_relays = n_relays;
    cfg.n_used = n_relays;
    cfg.r1 = r1;
    cfg.r2 = r2;
    cfg.h1_stats.assign(n_relays, {1.0, 1.0});
    cfg.h2_stats.assign(n_relays, {1.0, 1.0});
    cfg.f_stats.assign(n_relays, {1.0, 1.0});
    cfg.trials = trials;
    cfg.master_seed = master_seed;
    validate_scenario(cfg);
    return cfg;
}

void validate_scenario(ScenarioConfig& config) {
    if (config.n_relays < 1) {
        throw std::invalid_argument("scenario: need at least one relay");
    }
    if (config.n_used < 1 || config.n_used > config.n_relays) {
        throw std::invalid_argument("scenario: n_used must be in [1, n_relays]");
    }
    if (config.active.empty()) {
        config.active.resize(config.n_used);
        std::iota(config.active.begin(), config.active.end(), 0);
    }
    if (static_cast<int>(config.active.size()) != config.n_used) {
        throw std::invalid_argument("scenario: active list size must equal n_used");
    }
    for (int idx : config.active) {
        if (idx < 0 || idx >= config.n_relays) {
            throw std::invalid_argument("scenario: active index out of range");
        }
    }
    const std::size_t n = static_cast<std::size_t>(config.n_relays);
    if (config.h1_stats.size() != n || config.h2_stats.size() != n || config.f_stats.size() != n) {
        throw std::invalid_argument("scenario: one LinkStats entry per relay required");
    }
    for (const auto* list : {&config.h1_stats, &config.h2_stats, &config.f_stats}) {
        for (const auto& s : *list) {
            if (!(s.mean_gain > 0.0) || !std::isfinite(s.mean_gain) || !(s.rate > 0.0) ||
                std::abs(s.mean_gain * s.rate - 1.0) > 1e-9) {
                throw std::invalid_argument("scenario: link stats must satisfy rate = 1/mean > 0");
            }
        }
    }
    if (!(config.p_relay > 0.0) || !std::isfinite(config.p_relay)) {
        throw std::invalid_argument("scenario: relay power must be positive");
    }
    make_rates(config.r1, config.r2, config.n_f());  // throws on bad rates
    if (config.trials == 0) {
        throw std::invalid_argument("scenario: trials must be positive");
    }
    if (config.workers < 0) {
        throw std::invalid_argument("scenario: workers must be >= 0");
    }
}

ScenarioConfig subscenario(const ScenarioConfig& config, const std::vector<int>& indices) {
    if (indices.empty()) {
        throw std::invalid_argument("subscenario: empty index list");
    }
    ScenarioConfig sub;
    sub.n_relays = static_cast<int>(indices.size());
    sub.n_used = sub.n_relays;
    sub.r1 = config.r1;
    sub.r2 = config.r2;
    sub.p_relay = config.p_relay;
    sub.trials = config.trials;
    sub.master_seed = config.master_seed;
    sub.workers = config.workers;
    for (int idx : indices) {
        if (idx < 0 || idx >= config.n_relays) {
            throw std::invalid_argument("subscenario: index out of range");
        }
        sub.h1_stats.push_back(config.h1_stats[idx]);
        sub.h2_stats.push_back(config.h2_stats[idx]);
        sub.f_stats.push_back(config.f_stats[idx]);
    }
    validate_scenario(sub);
    return sub;
}

}  // namespace sicrelay
