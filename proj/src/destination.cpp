#include "sicrelay/destination.hpp"

#include <cmath>
#include <stdexcept>

namespace sicrelay {

void assemble_into(const std::vector<RelayTxState>& states,
                   const std::vector<std::complex<double>>& f, double sigma2,
                   SecondHopModel& out) {
    if (states.size() != f.size()) {
        throw std::invalid_argument("assemble: one relay->destination gain per relay state required");
    }
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
        throw std::invalid_argument("assemble: sigma2 must be positive and finite");
    }
    out.sigma2 = sigma2;
    out.h.resize(states.size());
    out.noise_var.resize(states.size());
    for (std::size_t r = 0; r < states.size(); ++r) {
        const auto& st = states[r];
        const std::complex<double> gf = st.g * f[r];
        out.h[r][0] = gf * st.coef.a1;
        out.h[r][1] = gf * st.coef.a2;
        // forwarded relay noise plus the destination's own noise
        out.noise_var[r] = std::norm(gf) * st.coef.a3 * st.coef.a3 * sigma2 + sigma2;
    }
}

SecondHopModel assemble(const std::vector<RelayTxState>& states,
                        const std::vector<std::complex<double>>& f, double sigma2) {
    SecondHopModel out;
    assemble_into(states, f, sigma2, out);
    return out;
}

double gamma_d(const SecondHopModel& model, Source source) {
    const std::size_t col = (source == Source::S1) ? 0 : 1;
    double sum = 0.0;
    for (std::size_t r = 0; r < model.h.size(); ++r) {
        sum += std::norm(model.h[r][col]) / model.noise_var[r];
    }
    if (!std::isfinite(sum)) {
        throw std::invalid_argument("gamma_d: non-finite model");
    }
    return sum;
}

std::array<std::complex<double>, 2> mmse_estimate(const SecondHopModel& model,
                                                  const std::vector<std::complex<double>>& y) {
    using cplx = std::complex<double>;
    if (y.size() != model.h.size() || model.noise_var.size() != model.h.size()) {
        throw std::invalid_argument("mmse_estimate: observation/model size mismatch");
    }
    // A = H^H S^-1 H + I (2x2 Hermitian), b = H^H S^-1 y
    double a00 = 1.0, a11 = 1.0;
    cplx a01 = 0.0;
    cplx b0 = 0.0, b1 = 0.0;
    for (std::size_t r = 0; r < model.h.size(); ++r) {
        const double w = 1.0 / model.noise_var[r];
        const cplx h0 = model.h[r][0];
        const cplx h1 = model.h[r][1];
        if (!std::isfinite(h0.real()) || !std::isfinite(h0.imag()) ||
            !std::isfinite(h1.real()) || !std::isfinite(h1.imag()) ||
            !std::isfinite(y[r].real()) || !std::isfinite(y[r].imag()) ||
            !(model.noise_var[r] > 0.0)) {
            throw std::invalid_argument("mmse_estimate: non-finite input");
        }
        a00 += w * std::norm(h0);
        a11 += w * std::norm(h1);
        a01 += w * std::conj(h0) * h1;
        b0 += w * std::conj(h0) * y[r];
        b1 += w * std::conj(h1) * y[r];
    }
    const double det = a00 * a11 - std::norm(a01);  // >= 1 by the +I term
    return {(a11 * b0 - a01 * b1) / det, (a00 * b1 - std::conj(a01) * b0) / det};
}

bool outage_at_destination(double gamma_d_value, double rate, int n_f) {
    if (!(gamma_d_value >= 0.0) || !std::isfinite(gamma_d_value)) {
        throw std::invalid_argument("outage_at_destination: invalid SNR");
    }
    // log2(1 + gamma_d) < (n_f/2) rate, compared in the SNR domain so that
    // boundary equality decodes exactly
    return gamma_d_value < std::exp2(0.5 * n_f * rate) - 1.0;
}

}  // namespace sicrelay
