#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "sicrelay/analytic.hpp"
#include "sicrelay/preselect.hpp"
#include "sicrelay/rates.hpp"
#include "sicrelay/rng.hpp"
#include "sicrelay/stats.hpp"

using namespace sicrelay;

namespace {

// exhaustive best subset of size k by total weight, smallest index set on ties
std::vector<int> brute_force_best(const std::vector<double>& w, int k) {
    const int n = static_cast<int>(w.size());
    std::vector<int> best;
    double best_sum = -1.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        double s = 0.0;
        std::vector<int> idx;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                s += w[static_cast<std::size_t>(i)];
                idx.push_back(i);
            }
        }
        if (s > best_sum + 1e-15 ||
            (std::abs(s - best_sum) <= 1e-15 && !best.empty() && idx < best)) {
            best_sum = s;
            best = idx;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("weight of one relay at the reference point") {
    // lambda = mu = 1, k1 = k2 = 1, gamma = 10, both rates 1:
    // w = p_only1 * 1 + p_only2 * 1 + p_both * 2
    const RateConfig rc = rates_from_thresholds(1.0, 1.0, 2);
    CHECK(relay_weight(1.0, 1.0, rc, 10.0) ==
          doctest::Approx(1.6456556387176774).epsilon(1e-14));
}

TEST_CASE("weight grows with SNR and caps at the full-rate sum") {
    const RateConfig rc = make_rates(1.0, 2.0, 3);
    double prev = -1.0;
    for (double g_db = -10.0; g_db <= 60.0; g_db += 5.0) {
        const double w = relay_weight(0.7, 1.3, rc, db_to_linear(g_db));
        CHECK(w >= prev);
        CHECK(w <= rc.r1 + rc.r2);
        prev = w;
    }
    // decode failure persists at infinite SNR (interference-limited SIC), so
    // the limit is the both-decoded plateau times the rate sum, not r1 + r2
    const RelayEventProbs lim = high_snr_constants(0.7, 1.3, rc);
    CHECK(relay_weight(0.7, 1.3, rc, 1e12) ==
          doctest::Approx(lim.p_both_ok * (rc.r1 + rc.r2)).epsilon(1e-6));
    // at unit thresholds and equal gains the plateau is exactly 1
    const RateConfig unit = rates_from_thresholds(1.0, 1.0, 3);
    CHECK(relay_weight(1.0, 1.0, unit, 1e12) ==
          doctest::Approx(unit.r1 + unit.r2).epsilon(1e-5));
}

TEST_CASE("selection picks the top weights") {
    SelectionResult r = select_relays({3.0, 1.0, 2.0}, 2);
    CHECK(r.chosen == std::vector<int>{0, 2});
    CHECK(r.weights == std::vector<double>{3.0, 1.0, 2.0});

    // all equal: ties go to the lower indices
    r = select_relays({1.0, 1.0, 1.0, 1.0}, 2);
    CHECK(r.chosen == std::vector<int>{0, 1});

    r = select_relays({0.5, 0.9, 0.9, 0.1}, 3);
    CHECK(r.chosen == std::vector<int>{0, 1, 2});
}

TEST_CASE("selection rejects bad sizes") {
    CHECK_THROWS_AS(select_relays({1.0, 2.0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(select_relays({1.0, 2.0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(select_relays({}, 1), std::invalid_argument);
    CHECK_THROWS_AS(select_relays({1.0, std::nan("")}, 1), std::invalid_argument);
}

TEST_CASE("greedy pick equals the exhaustive optimum") {
    TrialStream st({99, 0}, StreamDomain::Generic);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(st.next_u64() % 9);  // 2..10 candidates
        const int k = 1 + static_cast<int>(st.next_u64() % static_cast<std::uint64_t>(n));
        std::vector<double> w(static_cast<std::size_t>(n));
        for (double& v : w) v = st.next_unit() * 2.0;
        CHECK(select_relays(w, k).chosen == brute_force_best(w, k));
    }
}

TEST_CASE("random topology respects anchors and clearance") {
    const Topology t = random_topology(12, {5, 0});
    REQUIRE(t.nodes.size() == 15);
    CHECK(t.nodes[0].id == "S1");
    CHECK(t.nodes[0].x == 0.0);
    CHECK(t.nodes[0].y == 0.25);
    CHECK(t.nodes[1].id == "S2");
    CHECK(t.nodes[1].x == 0.0);
    CHECK(t.nodes[1].y == 0.75);
    CHECK(t.nodes[2].id == "D");
    CHECK(t.nodes[2].x == 1.0);
    CHECK(t.nodes[2].y == 0.5);
    for (std::size_t i = 3; i < t.nodes.size(); ++i) {
        const auto& n = t.nodes[i];
        CHECK(n.id == "R" + std::to_string(i - 3));
        CHECK(n.x >= 0.0);
        CHECK(n.x <= 1.0);
        CHECK(n.y >= 0.0);
        CHECK(n.y <= 1.0);
        for (std::size_t a = 0; a < 3; ++a) {
            CHECK(std::hypot(n.x - t.nodes[a].x, n.y - t.nodes[a].y) >= 1e-3);
        }
    }
    // deterministic per seed, distinct across seeds
    const Topology again = random_topology(12, {5, 0});
    CHECK(again.nodes[4].x == t.nodes[4].x);
    const Topology other = random_topology(12, {6, 0});
    CHECK(other.nodes[4].x != t.nodes[4].x);
}

TEST_CASE("relay positions are uniform over the square") {
    // coordinate means over many relays; anchors exclude a negligible area
    Topology t = random_topology(4000, {11, 0});
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 3; i < t.nodes.size(); ++i) {
        sx += t.nodes[i].x;
        sy += t.nodes[i].y;
    }
    const double n = static_cast<double>(t.nodes.size() - 3);
    CHECK(sx / n == doctest::Approx(0.5).epsilon(0.05));
    CHECK(sy / n == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("topology text round trip") {
    const Topology t = random_topology(5, {7, 0});
    const std::string text = topology_to_text(t);
    const Topology back = topology_from_text(text);
    REQUIRE(back.nodes.size() == t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        CHECK(back.nodes[i].id == t.nodes[i].id);
        CHECK(back.nodes[i].x == t.nodes[i].x);  // %.17g survives exactly
        CHECK(back.nodes[i].y == t.nodes[i].y);
    }
    // parse failures report like any other malformed input file
    CHECK_THROWS_AS(topology_from_text("S1 0 0.25\nS2 zero 0.75"), std::runtime_error);
    CHECK_THROWS_AS(topology_from_text("S1 0 0.25 9"), std::runtime_error);
}

TEST_CASE("path-loss gains follow inverse-square distance") {
    Topology t;
    t.nodes.push_back({"S1", 0.0, 0.25});
    t.nodes.push_back({"S2", 0.0, 0.75});
    t.nodes.push_back({"D", 1.0, 0.5});
    t.nodes.push_back({"R0", 0.5, 0.5});
    const ScenarioConfig cfg = scenario_from_topology(t, 1.0, 1.0, 1, 1.0, 1000, 3);
    REQUIRE(cfg.n_relays == 1);
    // relay sits 0.5 from D: mean |f|^2 = 1/0.25 = 4
    CHECK(cfg.f_stats[0].mean_gain == doctest::Approx(4.0).epsilon(1e-12));
    const double d1 = std::hypot(0.5 - 0.0, 0.5 - 0.25);
    CHECK(cfg.h1_stats[0].mean_gain == doctest::Approx(1.0 / (d1 * d1)).epsilon(1e-12));
    CHECK(cfg.h2_stats[0].mean_gain == doctest::Approx(1.0 / (d1 * d1)).epsilon(1e-12));

    Topology missing = t;
    missing.nodes.erase(missing.nodes.begin() + 2);
    CHECK_THROWS_AS(scenario_from_topology(missing, 1.0, 1.0, 1, 1.0, 1000, 3),
                    std::invalid_argument);
    Topology bare = t;
    bare.nodes.pop_back();
    CHECK_THROWS_AS(scenario_from_topology(bare, 1.0, 1.0, 1, 1.0, 1000, 3),
                    std::invalid_argument);
}

TEST_CASE("closer relays get larger weights") {
    Topology t;
    t.nodes.push_back({"S1", 0.0, 0.25});
    t.nodes.push_back({"S2", 0.0, 0.75});
    t.nodes.push_back({"D", 1.0, 0.5});
    t.nodes.push_back({"R0", 0.1, 0.5});   // near the sources
    t.nodes.push_back({"R1", 0.95, 0.95});  // far corner
    const ScenarioConfig cfg = scenario_from_topology(t, 1.0, 1.0, 1, 1.0, 1000, 3);
    const std::vector<double> w = topology_weights(cfg);
    REQUIRE(w.size() == 2);
    CHECK(w[0] > w[1]);
    CHECK(select_relays(w, 1).chosen == std::vector<int>{0});
}

TEST_CASE("weight is invariant under a common gain and SNR rescale") {
    // multiplying every link gain by c and dividing the transmit power by c
    // leaves all decode statistics unchanged
    const RateConfig rc = make_rates(1.0, 1.5, 3);
    for (double c : {0.25, 4.0, 100.0}) {
        CHECK(relay_weight(0.7 * c, 1.3 * c, rc, 50.0 * c) ==
              doctest::Approx(relay_weight(0.7, 1.3, rc, 50.0)).epsilon(1e-13));
    }
}

TEST_CASE("weight ranking helps end-to-end outage on average" * doctest::should_fail()) {
    // Intended behavior: across random topologies the highest-weight pair
    // beats the lowest-weight pair in aggregate. Known model-level gap: the
    // weight maximizes the expected decoded rate of the first hop, but the
    // destination SNR statistic charges an amplified (undecoded) branch for
    // noise only, never for the other block riding along. A relay that
    // decodes nothing therefore forwards the whole received aggregate at
    // full power and often beats a decoding relay that splits its power
    // between the two re-encoded blocks. In inverse-square layouts that
    // makes low-weight relays near the destination stronger end to end, so
    // the ranking inverts at every SNR (verified against both the quadrature
    // evaluator and the event-driven simulator). Kept as an expected failure
    // so a change in the destination model gets flagged here.
    double sum_best = 0.0, sum_worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Topology t = random_topology(6, {1000 + seed, 0});
        ScenarioConfig cfg = scenario_from_topology(t, 1.0, 1.0, 2, 1.0, 1000, 9);
        const std::vector<double> w = topology_weights(cfg);
        const std::vector<int> best = select_relays(w, 2).chosen;
        std::vector<int> order(w.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)];
        });
        const std::vector<int> worst(order.begin(), order.begin() + 2);

        ScenarioConfig cb = subscenario(cfg, best);
        ScenarioConfig cw = subscenario(cfg, worst);
        const double gamma = db_to_linear(15.0);
        sum_best += end_to_end_outage(cb, gamma, 0, {1, 0}).p_hat;
        sum_worst += end_to_end_outage(cw, gamma, 0, {1, 0}).p_hat;
    }
    CHECK(sum_best < sum_worst);
}
