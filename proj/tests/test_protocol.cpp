#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "sicrelay/fading.hpp"
#include "sicrelay/protocol.hpp"
#include "sicrelay/rates.hpp"
#include "sicrelay/rng.hpp"
#include "sicrelay/scenario.hpp"

using namespace sicrelay;

namespace {

RateConfig thresholds(double k1, double k2) { return rates_from_thresholds(k1, k2, 3); }

}  // namespace

TEST_CASE("decode order picks the stronger scaled gain") {
    CHECK(sic_order(4.0, 1.0, thresholds(1.0, 1.0)) == Source::S1);
    CHECK(sic_order(1.0, 1.0, thresholds(1.0, 3.0)) == Source::S1);  // 1/1 > 1/3
    CHECK(sic_order(1.0, 4.0, thresholds(1.0, 1.0)) == Source::S2);
    CHECK(sic_order(2.0, 2.0, thresholds(1.0, 1.0)) == Source::S1);  // tie rule
    CHECK(sic_order(0.0, 0.0, thresholds(2.0, 5.0)) == Source::S1);
}

TEST_CASE("decode events at explicit gains") {
    const RateConfig rc = thresholds(1.0, 1.0);
    CHECK(relay_decode(3.0, 1.0, rc, 1.0) == DecodeEvent::Both);    // 3 >= 1+1, 1 >= 1
    CHECK(relay_decode(1.5, 1.0, rc, 1.0) == DecodeEvent::None);    // 1.5 < 2
    CHECK(relay_decode(0.5, 10.0, rc, 1.0) == DecodeEvent::OnlyS2); // 10 >= 1.5, 0.5 < 1
    CHECK(relay_decode(10.0, 0.5, rc, 1.0) == DecodeEvent::OnlyS1);

    // strong-signal regime decodes everything
    CHECK(relay_decode(10.0, 1.0, thresholds(3.0, 1.0), 1e12) == DecodeEvent::Both);
}

TEST_CASE("boundary equality decodes") {
    const RateConfig rc = thresholds(2.0, 1.5);
    const double gamma = 4.0;
    const double x = 3.0;
    const double y = rc.k1 * x + rc.k1 / gamma;  // exactly on the first-stage threshold
    CHECK(sic_order(y, x, rc) == Source::S1);
    CHECK(relay_decode(y, x, rc, gamma) == DecodeEvent::Both);
    CHECK(relay_decode(std::nextafter(y, 0.0), x, rc, gamma) == DecodeEvent::None);

    // second stage boundary
    const double x2 = rc.k2 / gamma;
    const double y2 = rc.k1 * x2 + rc.k1 / gamma;
    CHECK(relay_decode(y2, x2, rc, gamma) == DecodeEvent::Both);
    CHECK(relay_decode(y2, std::nextafter(x2, 0.0), rc, gamma) != DecodeEvent::Both);
}

TEST_CASE("decoding is monotone in SNR") {
    const RateConfig rc = thresholds(1.8284271247461901, 7.0);
    TrialStream st({31, 0}, StreamDomain::Generic);
    auto decoded_count = [](DecodeEvent e) {
        switch (e) {
            case DecodeEvent::Both: return 2;
            case DecodeEvent::OnlyS1:
            case DecodeEvent::OnlyS2: return 1;
            case DecodeEvent::None: return 0;
        }
        return 0;
    };
    for (int i = 0; i < 2000; ++i) {
        const double y = st.next_exponential(1.0);
        const double x = st.next_exponential(1.0);
        int prev = decoded_count(relay_decode(y, x, rc, 0.01));
        for (double gamma : {0.1, 1.0, 10.0, 100.0, 1e4, 1e8}) {
            const int now = decoded_count(relay_decode(y, x, rc, gamma));
            CHECK(now >= prev);
            prev = now;
        }
    }
}

TEST_CASE("coefficient table") {
    const std::complex<double> h1{0.3, 0.4};
    const std::complex<double> h2{-1.0, 0.0};

    const Coefficients both = coefficients(DecodeEvent::Both, h1, h2);
    CHECK(both.a1 == std::complex<double>{1.0, 0.0});
    CHECK(both.a2 == std::complex<double>{1.0, 0.0});
    CHECK(both.a3 == 0.0);

    const Coefficients only1 = coefficients(DecodeEvent::OnlyS1, h1, {0.0, 2.0});
    CHECK(only1.a1 == std::complex<double>{1.0, 0.0});
    CHECK(only1.a2 == std::complex<double>{0.0, 2.0});
    CHECK(only1.a3 == 1.0);

    const Coefficients only2 = coefficients(DecodeEvent::OnlyS2, h1, h2);
    CHECK(only2.a1 == h1);
    CHECK(only2.a2 == std::complex<double>{1.0, 0.0});
    CHECK(only2.a3 == 1.0);

    const Coefficients none = coefficients(DecodeEvent::None, h1, h2);
    CHECK(none.a1 == h1);
    CHECK(none.a2 == h2);
    CHECK(none.a3 == 1.0);
}

TEST_CASE("power normalization is exact") {
    CHECK(power_scale({1.0, 1.0, 0.0}, 0.1, 1.0) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    // undecoded relay with unit gains: 1/(1+1+1)
    const double g = power_scale({1.0, 1.0, 1.0}, 1.0, 1.0);
    CHECK(g * g == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    // only s1, |h2|^2 = 4, sigma2 = 0.01
    const double g2 = power_scale({1.0, {0.0, 2.0}, 1.0}, 0.01, 1.0);
    CHECK(g2 * g2 == doctest::Approx(1.0 / 5.01).epsilon(1e-15));

    CHECK_THROWS_AS(power_scale({0.0, 0.0, 0.0}, 1.0, 1.0), std::invalid_argument);

    TrialStream st({8, 0}, StreamDomain::Generic);
    const RateConfig rc = thresholds(1.5, 2.5);
    for (int i = 0; i < 500; ++i) {
        const std::complex<double> h1 = st.next_gain(1.0);
        const std::complex<double> h2 = st.next_gain(2.0);
        const double sigma2 = 0.01 + st.next_unit();
        const DecodeEvent ev = relay_decode(std::norm(h1), std::norm(h2), rc, 1.0 / sigma2);
        const Coefficients c = coefficients(ev, h1, h2);
        const double gg = power_scale(c, sigma2, 2.0);
        const double restored =
            gg * gg * (std::norm(c.a1) + std::norm(c.a2) + c.a3 * c.a3 * sigma2);
        CHECK(restored == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("first hop treats relays independently") {
    ScenarioConfig cfg = make_uniform_scenario(2, 1.0, 1.0, 1000, 5);
    ChannelRealization re;
    re.h1 = {{2.0, 0.0}, {2.0, 0.0}};
    re.h2 = {{0.223606797749979, 0.0}, {0.223606797749979, 0.0}};  // |h2|^2 = 0.05
    re.f = {{1.0, 0.0}, {1.0, 0.0}};
    const auto states = step_first_hop(cfg, re, 10.0);
    REQUIRE(states.size() == 2);
    CHECK(states[0].event == states[1].event);
    CHECK(states[0].g == states[1].g);

    // swapping one relay's gains flips only that relay
    re.h1[1] = {0.5, 0.0};
    re.h2[1] = {2.0, 0.0};
    const auto mixed = step_first_hop(cfg, re, 10.0);
    CHECK(mixed[0].event == states[0].event);
    CHECK(mixed[1].event != states[1].event);
}

TEST_CASE("event frequency matches the closed form at one point") {
    // oracle: no-decode probability 0.0951625819640404 at unit rates,
    // k1 = k2 = 1, SNR 10
    ScenarioConfig cfg = make_uniform_scenario(1, 1.0, 1.0, 1000, 99);
    const RateConfig rc = rates_from_thresholds(1.0, 1.0, cfg.n_f());
    cfg.r1 = rc.r1;
    cfg.r2 = rc.r2;
    const int n = 1000000;
    int none_count = 0;
    ChannelRealization re;
    std::vector<RelayTxState> states;
    for (int t = 0; t < n; ++t) {
        draw_realization_into(cfg, {99, static_cast<std::uint64_t>(t)}, re);
        step_first_hop_into(cfg, re, 10.0, states);
        none_count += (states[0].event == DecodeEvent::None);
    }
    const double p = 0.0951625819640404;
    const double sigma = std::sqrt(p * (1.0 - p) / n);
    CHECK(std::abs(none_count / static_cast<double>(n) - p) < 4.0 * sigma);
}
