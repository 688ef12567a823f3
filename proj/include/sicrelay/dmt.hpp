#pragma once

#include <utility>
#include <vector>

namespace sicrelay {

// Diversity order achieved at multiplexing gain r1 (source rate growing as
// r1*log2(gamma)): d = n_r - (n_r * n_f / 2) * r1, valid on [0, 2/n_f].
// Throws std::domain_error outside that range.
double diversity(double r1, int n_r, int n_f);

// Fitted diversity order of an outage curve: least-squares slope of
// log10(p_out) against log10(gamma) over the given dB window, sign-flipped
// so a steeper decay gives a larger value. Points with p_out = 0 or
// p_out >= 0.1 (outside the asymptotic decay regime) are ignored; throws
// std::invalid_argument when fewer than four usable points remain.
double empirical_slope(const std::vector<std::pair<double, double>>& curve_db_pout,
                       double window_low_db, double window_high_db);

}  // namespace sicrelay
