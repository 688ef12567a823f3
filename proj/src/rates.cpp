#include "sicrelay/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace sicrelay {

RateConfig make_rates(double r1, double r2, int n_f) {
    if (!(r1 > 0.0) || !(r2 > 0.0) || !std::isfinite(r1) || !std::isfinite(r2)) {
        throw std::invalid_argument("make_rates: rates must be positive and finite");
    }
    if (n_f < 2) {
        throw std::invalid_argument("make_rates: need at least two slots per frame");
    }
    RateConfig rc;
    rc.r1 = r1;
    rc.r2 = r2;
    rc.n_f = n_f;
    rc.k1 = std::exp2(0.5 * n_f * r1) - 1.0;
    rc.k2 = std::exp2(0.5 * n_f * r2) - 1.0;
    return rc;
}

RateConfig rates_from_thresholds(double k1, double k2, int n_f) {
    if (!(k1 > 0.0) || !(k2 > 0.0) || !std::isfinite(k1) || !std::isfinite(k2)) {
        throw std::invalid_argument("rates_from_thresholds: thresholds must be positive and finite");
    }
    if (n_f < 2) {
        throw std::invalid_argument("rates_from_thresholds: need at least two slots per frame");
    }
    RateConfig rc;
    rc.n_f = n_f;
    rc.r1 = 2.0 * std::log2(1.0 + k1) / n_f;
    rc.r2 = 2.0 * std::log2(1.0 + k2) / n_f;
    rc.k1 = k1;
    rc.k2 = k2;
    return rc;
}

}  // namespace sicrelay
