#include "sicrelay/dmt.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sicrelay/stats.hpp"

namespace sicrelay {

double diversity(double r1, int n_r, int n_f) {
    if (n_r < 1 || n_f < 2) {
        throw std::invalid_argument("diversity: need n_r >= 1 and n_f >= 2");
    }
    const double r_max = 2.0 / n_f;
    if (!(r1 >= 0.0) || r1 > r_max) {
        throw std::domain_error("diversity: multiplexing gain outside [0, 2/n_f]");
    }
    return n_r - (static_cast<double>(n_r) * n_f / 2.0) * r1;
}

double empirical_slope(const std::vector<std::pair<double, double>>& curve, double window_low_db,
                       double window_high_db) {
    if (!(window_low_db < window_high_db)) {
        throw std::invalid_argument("empirical_slope: window bounds out of order");
    }
    std::vector<double> xs, ys;
    for (const auto& [g_db, p] : curve) {
        if (g_db < window_low_db || g_db > window_high_db) continue;
        // the fit only makes sense in the asymptotic decay region
        if (!(p > 0.0) || p >= 0.1) continue;
        xs.push_back(g_db / 10.0);  // log10(gamma)
        ys.push_back(std::log10(p));
    }
    if (xs.size() < 4) {
        throw std::invalid_argument("empirical_slope: fewer than 4 usable points in the fit window");
    }
    return -ols_slope(xs, ys);
}

}  // namespace sicrelay
