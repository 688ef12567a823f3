#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sicrelay/fading.hpp"
#include "sicrelay/scenario.hpp"

using namespace sicrelay;

namespace {

ScenarioConfig two_relay_config() {
    ScenarioConfig cfg = make_uniform_scenario(2, 1.0, 1.0, 1000, 7);
    cfg.h1_stats = {link_stats_from_mean(1.0), link_stats_from_mean(0.5)};
    cfg.h2_stats = {link_stats_from_mean(2.0), link_stats_from_mean(1.0)};
    cfg.f_stats = {link_stats_from_mean(4.0), link_stats_from_mean(1.0)};
    return cfg;
}

}  // namespace

TEST_CASE("link stats invert the mean") {
    const LinkStats s = link_stats_from_mean(0.25);
    CHECK(s.mean_gain == doctest::Approx(0.25));
    CHECK(s.rate == doctest::Approx(4.0));
    CHECK_THROWS_AS(link_stats_from_mean(0.0), std::invalid_argument);
    CHECK_THROWS_AS(link_stats_from_mean(-1.0), std::invalid_argument);
}

TEST_CASE("same seed reproduces a realization") {
    const ScenarioConfig cfg = two_relay_config();
    const ChannelRealization a = draw_realization(cfg, {11, 42});
    const ChannelRealization b = draw_realization(cfg, {11, 42});
    REQUIRE(a.h1.size() == 2);
    REQUIRE(a.h2.size() == 2);
    REQUIRE(a.f.size() == 2);
    for (std::size_t r = 0; r < 2; ++r) {
        CHECK(a.h1[r] == b.h1[r]);
        CHECK(a.h2[r] == b.h2[r]);
        CHECK(a.f[r] == b.f[r]);
    }
    const ChannelRealization c = draw_realization(cfg, {11, 43});
    CHECK(a.h1[0] != c.h1[0]);
}

TEST_CASE("buffer reuse matches the allocating variant") {
    const ScenarioConfig cfg = two_relay_config();
    ChannelRealization buf;
    draw_realization_into(cfg, {3, 9}, buf);
    const ChannelRealization fresh = draw_realization(cfg, {3, 9});
    for (std::size_t r = 0; r < 2; ++r) {
        CHECK(buf.h1[r] == fresh.h1[r]);
        CHECK(buf.f[r] == fresh.f[r]);
    }
}

TEST_CASE("per-link mean powers converge") {
    const ScenarioConfig cfg = two_relay_config();
    const int n = 100000;
    double p_h1_0 = 0.0, p_h2_0 = 0.0, p_f_0 = 0.0, p_h1_1 = 0.0;
    ChannelRealization re;
    for (int t = 0; t < n; ++t) {
        draw_realization_into(cfg, {100, static_cast<std::uint64_t>(t)}, re);
        p_h1_0 += std::norm(re.h1[0]);
        p_h2_0 += std::norm(re.h2[0]);
        p_f_0 += std::norm(re.f[0]);
        p_h1_1 += std::norm(re.h1[1]);
    }
    // exponential power: sigma of the mean = mean/sqrt(n), allow 5 sigma
    const double tol = 5.0 / std::sqrt(static_cast<double>(n));
    CHECK(p_h1_0 / n == doctest::Approx(1.0).epsilon(tol));
    CHECK(p_h2_0 / n == doctest::Approx(2.0).epsilon(tol));
    CHECK(p_f_0 / n == doctest::Approx(4.0).epsilon(tol));
    CHECK(p_h1_1 / n == doctest::Approx(0.5).epsilon(tol));
}

TEST_CASE("squared magnitudes are exponential (KS)") {
    const LinkStats stats = link_stats_from_mean(2.0);
    const int n = 20000;
    std::vector<double> u(n);
    for (int t = 0; t < n; ++t) {
        const auto h = draw_complex_gain(stats, {500, static_cast<std::uint64_t>(t)});
        u[static_cast<std::size_t>(t)] = -std::expm1(-std::norm(h) / 2.0);  // CDF transform
    }
    std::sort(u.begin(), u.end());
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
        d = std::max(d, std::abs(u[static_cast<std::size_t>(i)] - (i + 1.0) / n));
        d = std::max(d, std::abs(u[static_cast<std::size_t>(i)] - static_cast<double>(i) / n));
    }
    CHECK(d * std::sqrt(static_cast<double>(n)) < 1.95);
}

TEST_CASE("trials use disjoint streams") {
    const ScenarioConfig cfg = two_relay_config();
    const ChannelRealization a = draw_realization(cfg, {1, 0});
    const ChannelRealization b = draw_realization(cfg, {1, 1});
    CHECK(a.h1[0] != b.h1[0]);
    CHECK(a.f[1] != b.f[1]);
}
