#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace sicrelay {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

struct Interval {
    double low = 0.0;
    double high = 0.0;
    double half_width() const { return 0.5 * (high - low); }
};

// Wilson score interval for a binomial proportion; default z is the 95%
// two-sided normal quantile.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = 1.959963984540054);

// Ordinary least-squares slope of y against x. Throws if fewer than two
// points or degenerate x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace sicrelay
