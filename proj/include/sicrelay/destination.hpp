#pragma once

#include <array>
#include <complex>
#include <vector>

#include "sicrelay/protocol.hpp"

namespace sicrelay {

// Effective second-hop system after the relay retransmissions: one row per
// relay, y[r] = h[r][0]*x1 + h[r][1]*x2 + n_r with independent noise of
// variance noise_var[r] (forwarded relay noise plus destination noise).
struct SecondHopModel {
    std::vector<std::array<std::complex<double>, 2>> h;
    std::vector<double> noise_var;
    double sigma2 = 1.0;
};

// Builds the model from the relay states and the relay->destination gains
// (f[i] corresponds to states[i]). Row r: (g f a1, g f a2), noise variance
// g^2 |f|^2 a3^2 sigma^2 + sigma^2. Throws on size mismatch.
SecondHopModel assemble(const std::vector<RelayTxState>& states,
                        const std::vector<std::complex<double>>& f,
                        double sigma2);

void assemble_into(const std::vector<RelayTxState>& states,
                   const std::vector<std::complex<double>>& f,
                   double sigma2, SecondHopModel& out);

// Post-combining SNR for one source: the rows are independent observations,
// so per-row SNRs add. Equals the post-MMSE SINR of that source's column
// when the other column is inactive.
double gamma_d(const SecondHopModel& model, Source source);

// Linear MMSE estimate of (x1, x2) from the stacked observation y, for unit
// transmit power: (H^H S^-1 H + I)^-1 H^H S^-1 y with S = diag(noise_var).
// The +I regularisation keeps the 2x2 system invertible for any H.
// Throws on size mismatch or non-finite input.
std::array<std::complex<double>, 2> mmse_estimate(const SecondHopModel& model,
                                                  const std::vector<std::complex<double>>& y);

// A source is in outage when the frame cannot carry its block:
// log2(1 + gamma_d) < (n_f / 2) * rate. Boundary equality is a success.
bool outage_at_destination(double gamma_d_value, double rate, int n_f);

}  // namespace sicrelay
