#include "sicrelay/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "sicrelay/fading.hpp"
#include "sicrelay/scenario.hpp"

namespace sicrelay {

const char* to_string(DecodeEvent e) {
    switch (e) {
        case DecodeEvent::Both: return "both";
        case DecodeEvent::OnlyS1: return "only_s1";
        case DecodeEvent::OnlyS2: return "only_s2";
        case DecodeEvent::None: return "none";
    }
    return "?";
}

Source sic_order(double y, double x, const RateConfig& rates) {
    // y/k1 vs x/k2 compared cross-multiplied; the tie goes to S1.
    return (y * rates.k2 >= x * rates.k1) ? Source::S1 : Source::S2;
}

DecodeEvent relay_decode(double y, double x, const RateConfig& rates, double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma) || !(y >= 0.0) || !(x >= 0.0) ||
        !std::isfinite(y) || !std::isfinite(x)) {
        throw std::invalid_argument("relay_decode: gains must be non-negative and gamma positive");
    }
    if (sic_order(y, x, rates) == Source::S1) {
        // S1 against S2-plus-noise first; if that fails nothing is decodable.
        if (y < rates.k1 * x + rates.k1 / gamma) return DecodeEvent::None;
        return (x >= rates.k2 / gamma) ? DecodeEvent::Both : DecodeEvent::OnlyS1;
    }
    if (x < rates.k2 * y + rates.k2 / gamma) return DecodeEvent::None;
    return (y >= rates.k1 / gamma) ? DecodeEvent::Both : DecodeEvent::OnlyS2;
}

Coefficients coefficients(DecodeEvent event, std::complex<double> h1, std::complex<double> h2) {
    switch (event) {
        case DecodeEvent::Both: return {1.0, 1.0, 0.0};
        case DecodeEvent::OnlyS1: return {1.0, h2, 1.0};
        case DecodeEvent::OnlyS2: return {h1, 1.0, 1.0};
        case DecodeEvent::None: return {h1, h2, 1.0};
    }
    throw std::invalid_argument("coefficients: unknown event");
}

double power_scale(const Coefficients& c, double sigma2, double p_relay) {
    if (!(sigma2 >= 0.0) || !(p_relay > 0.0) || !std::isfinite(sigma2) || !std::isfinite(p_relay)) {
        throw std::invalid_argument("power_scale: need sigma2 >= 0 and p_relay > 0");
    }
    const double energy = std::norm(c.a1) + std::norm(c.a2) + c.a3 * c.a3 * sigma2;
    if (!(energy > 0.0) || !std::isfinite(energy)) {
        throw std::invalid_argument("power_scale: combination carries no energy");
    }
    return std::sqrt(p_relay / energy);
}

void step_first_hop_into(const ScenarioConfig& config, const ChannelRealization& realization,
                         double gamma, std::vector<RelayTxState>& out) {
    if (realization.h1.size() < static_cast<std::size_t>(config.n_relays)) {
        throw std::invalid_argument("step_first_hop: realization smaller than the relay pool");
    }
    const RateConfig rc = config.rates();
    const double sigma2 = 1.0 / gamma;
    out.resize(config.active.size());
    for (std::size_t i = 0; i < config.active.size(); ++i) {
        const int r = config.active[i];
        const std::complex<double> h1 = realization.h1[r];
        const std::complex<double> h2 = realization.h2[r];
        const DecodeEvent ev = relay_decode(std::norm(h1), std::norm(h2), rc, gamma);
        RelayTxState& st = out[i];
        st.event = ev;
        st.coef = coefficients(ev, h1, h2);
        st.g = power_scale(st.coef, sigma2, config.p_relay);
    }
}

std::vector<RelayTxState> step_first_hop(const ScenarioConfig& config,
                                         const ChannelRealization& realization, double gamma) {
    std::vector<RelayTxState> out;
    step_first_hop_into(config, realization, gamma, out);
    return out;
}

}  // namespace sicrelay
