#pragma once

namespace sicrelay {

// Per-source spectral efficiencies plus the derived per-block decode
// thresholds. With n_f slots per frame and half of them carrying a source's
// block, source i is decodable at SNR x iff log2(1 + x) >= (n_f/2) * r_i,
// i.e. iff x >= k_i = 2^((n_f/2) r_i) - 1.
struct RateConfig {
    double r1 = 1.0;
    double r2 = 1.0;
    int n_f = 2;
    double k1 = 1.0;
    double k2 = 1.0;
};

// Builds a consistent RateConfig; throws std::invalid_argument on
// non-positive rates or n_f < 2.
RateConfig make_rates(double r1, double r2, int n_f);

// Inverse construction used when sweeping thresholds directly: recovers the
// rates that produce the given k1, k2.
RateConfig rates_from_thresholds(double k1, double k2, int n_f);

}  // namespace sicrelay
