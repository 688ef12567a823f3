#pragma once

#include <complex>
#include <vector>

#include "sicrelay/rates.hpp"

namespace sicrelay {

struct ScenarioConfig;
struct ChannelRealization;

enum class Source { S1 = 0, S2 = 1 };

// What a relay managed to decode from the superimposed first-hop signal.
enum class DecodeEvent { Both = 0, OnlyS1 = 1, OnlyS2 = 2, None = 3 };

const char* to_string(DecodeEvent e);

// Successive-cancellation order at a relay: the source with the higher
// energy per threshold unit is decoded first. y = |h1|^2, x = |h2|^2.
// Ties go to S1.
Source sic_order(double y, double x, const RateConfig& rates);

// Decode outcome at one relay for one realization. The first-decoded source
// sees the other as interference; if it fails, nothing is decodable. After a
// successful first stage the remaining source is interference-free.
// Threshold equality counts as success. gamma is the transmit SNR 1/sigma^2.
DecodeEvent relay_decode(double y, double x, const RateConfig& rates, double gamma);

// Linear combination the relay transmits: q = a1*x1 + a2*x2 + a3*w, where w
// is the relay's own receive noise. Decoded blocks are forwarded clean
// (coefficient 1); undecoded ones ride along inside the received sufficient
// statistic (coefficient = their channel gain, noise term included).
struct Coefficients {
    std::complex<double> a1;
    std::complex<double> a2;
    double a3 = 0.0;
};

Coefficients coefficients(DecodeEvent event, std::complex<double> h1, std::complex<double> h2);

// Instantaneous power normalisation g so that E|g*q|^2 = p_relay given the
// current coefficients. Throws if the combination carries no energy.
double power_scale(const Coefficients& c, double sigma2, double p_relay);

// Everything the destination needs to know about one relay's transmission.
struct RelayTxState {
    Coefficients coef;
    double g = 1.0;
    DecodeEvent event = DecodeEvent::None;
};

// Runs decode + coefficient selection + power scaling on every active relay
// of the scenario for one channel realization.
std::vector<RelayTxState> step_first_hop(const ScenarioConfig& config,
                                         const ChannelRealization& realization,
                                         double gamma);

void step_first_hop_into(const ScenarioConfig& config, const ChannelRealization& realization,
                         double gamma, std::vector<RelayTxState>& out);

}  // namespace sicrelay
