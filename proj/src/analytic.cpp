#include "sicrelay/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sicrelay/destination.hpp"
#include "sicrelay/fading.hpp"
#include "sicrelay/stats.hpp"

namespace sicrelay {

namespace {

constexpr double kRareEventFloor = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_prob_params(double lambda, double mu, const RateConfig& rc, double gamma) {
    if (!(lambda > 0.0) || !(mu > 0.0) || !(gamma > 0.0) || !std::isfinite(lambda) ||
        !std::isfinite(mu) || !std::isfinite(gamma)) {
        throw std::invalid_argument("event_probs: lambda, mu and gamma must be positive and finite");
    }
    if (!(rc.k1 > 0.0) || !(rc.k2 > 0.0)) {
        throw std::invalid_argument("event_probs: decode thresholds must be positive");
    }
}

OutageEstimate mc_estimate(std::uint64_t failures, std::uint64_t trials) {
    OutageEstimate est;
    est.failures = failures;
    est.trials = trials;
    est.p_hat = static_cast<double>(failures) / static_cast<double>(trials);
    const Interval iv = wilson_interval(failures, trials);
    est.ci_low = iv.low;
    est.ci_high = iv.high;
    est.ci_half_width = iv.half_width();
    return est;
}

}  // namespace

double RelayEventProbs::operator[](DecodeEvent e) const {
    switch (e) {
        case DecodeEvent::Both: return p_both_ok;
        case DecodeEvent::OnlyS1: return p_s1ok_s2fail;
        case DecodeEvent::OnlyS2: return p_s1fail_s2ok;
        case DecodeEvent::None: return p_both_fail;
    }
    return 0.0;
}

RelayEventProbs event_probs(double lambda, double mu, const RateConfig& rc, double gamma) {
    check_prob_params(lambda, mu, rc, gamma);
    const double k1 = rc.k1, k2 = rc.k2;
    // Shared building blocks of the four wedge integrals over the
    // (|h1|^2, |h2|^2) plane. A/Ap are the SIC-order wedge masses, B/Bp carry
    // the finite-SNR threshold shift exp(-k/gamma).
    const double A = lambda / (lambda + mu * k1 / k2);
    const double B = lambda * std::exp(-mu * k1 / gamma) / (lambda + mu * k1);
    const double Ap = mu / (lambda * k2 / k1 + mu);
    const double Bp = mu * std::exp(-lambda * k2 / gamma) / (mu + lambda * k2);
    const double e1 = std::exp(-(mu + lambda * k2) * k1 / gamma);
    const double e2 = std::exp(-(lambda + mu * k1) * k2 / gamma);

    RelayEventProbs p;
    p.p_both_fail = A - B + Ap - Bp;
    p.p_s1fail_s2ok = Bp * -std::expm1(-(mu + lambda * k2) * k1 / gamma);
    p.p_s1ok_s2fail = B * -std::expm1(-(lambda + mu * k1) * k2 / gamma);
    p.p_both_ok = 1.0 + B * e2 + Bp * e1 - A - Ap;
    // cancellation can leave a -1e-16 residue where the integral is ~0
    p.p_both_fail = std::clamp(p.p_both_fail, 0.0, 1.0);
    p.p_both_ok = std::clamp(p.p_both_ok, 0.0, 1.0);
    return p;
}

RelayEventProbs high_snr_constants(double lambda, double mu, const RateConfig& rc) {
    check_prob_params(lambda, mu, rc, 1.0);
    const double k1 = rc.k1, k2 = rc.k2;
    const double A = lambda / (lambda + mu * k1 / k2);
    const double B = lambda / (lambda + mu * k1);
    const double Ap = mu / (lambda * k2 / k1 + mu);
    const double Bp = mu / (mu + lambda * k2);
    RelayEventProbs p;
    p.p_both_fail = std::clamp(A - B + Ap - Bp, 0.0, 1.0);
    p.p_s1fail_s2ok = 0.0;
    p.p_s1ok_s2fail = 0.0;
    p.p_both_ok = std::clamp(1.0 + B + Bp - A - Ap, 0.0, 1.0);
    return p;
}

// ---------------------------------------------------------------------------
// Conditional Monte Carlo second hop

OutageEstimate second_hop_outage_given_events(const ScenarioConfig& config_in,
                                              const EventVector& events, double gamma,
                                              std::uint64_t trials, SeedSpec seed, Source source,
                                              ConditioningMode mode) {
    ScenarioConfig config = config_in;
    validate_scenario(config);
    if (events.size() != config.active.size()) {
        throw std::invalid_argument("second_hop_outage_given_events: one event per active relay required");
    }
    if (trials < 1000) {
        throw std::invalid_argument("second_hop_outage_given_events: need at least 1000 trials");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("second_hop_outage_given_events: gamma must be positive and finite");
    }
    const RateConfig rc = config.rates();
    const double sigma2 = 1.0 / gamma;
    const std::size_t n = events.size();

    if (mode == ConditioningMode::Conditional) {
        for (std::size_t j = 0; j < n; ++j) {
            const int r = config.active[j];
            const RelayEventProbs probs =
                event_probs(config.h2_stats[r].rate, config.h1_stats[r].rate, rc, gamma);
            const double p = probs[events[j]];
            if (p < kRareEventFloor) {
                throw std::runtime_error(
                    std::string("second_hop_outage_given_events: event '") + to_string(events[j]) +
                    "' at relay " + std::to_string(r) + " has probability " + std::to_string(p) +
                    " < 1e-6 at these parameters; rejection sampling would stall");
            }
        }
    }

    const double rate = (source == Source::S1) ? rc.r1 : rc.r2;
    std::vector<RelayTxState> states(n);
    std::vector<std::complex<double>> f(n);
    SecondHopModel model;
    std::uint64_t failures = 0;

    for (std::uint64_t t = 0; t < trials; ++t) {
        TrialStream st({seed.master_seed, seed.stream_index + t}, StreamDomain::SecondHop);
        for (std::size_t j = 0; j < n; ++j) {
            const int r = config.active[j];
            std::complex<double> h1, h2;
            if (mode == ConditioningMode::Conditional) {
                std::uint64_t attempts = 0;
                do {
                    h1 = st.next_gain(config.h1_stats[r].mean_gain);
                    h2 = st.next_gain(config.h2_stats[r].mean_gain);
                    if (++attempts > 50000000ull) {
                        throw std::runtime_error(
                            "second_hop_outage_given_events: rejection sampling exceeded the attempt budget");
                    }
                } while (relay_decode(std::norm(h1), std::norm(h2), rc, gamma) != events[j]);
            } else {
                h1 = st.next_gain(config.h1_stats[r].mean_gain);
                h2 = st.next_gain(config.h2_stats[r].mean_gain);
            }
            states[j].event = events[j];
            states[j].coef = coefficients(events[j], h1, h2);
            states[j].g = power_scale(states[j].coef, sigma2, config.p_relay);
            f[j] = st.next_gain(config.f_stats[r].mean_gain);
        }
        assemble_into(states, f, sigma2, model);
        if (outage_at_destination(gamma_d(model, source), rate, rc.n_f)) ++failures;
    }
    return mc_estimate(failures, trials);
}

// ---------------------------------------------------------------------------
// Deterministic quadrature engine
//
// Conditioned on its decode event, relay r adds an independent amount
// S_r = gamma g^2 V alpha / (g^2 V beta + 1) to the destination combining
// SNR, where V = |f_r|^2 and (alpha, beta, g^2) follow from the forwarded
// coefficients. The V dimension integrates in closed form, the conditional
// first-hop gain distributions are low-dimensional with explicit inverse
// CDFs (Gauss-Legendre after a probability-integral transform), and the
// across-relay sum is a convolution evaluated on a grid with outer rounding
// bounds. Tail values decay polynomially in 1/gamma with full relative
// accuracy, which plain Monte Carlo cannot deliver.

namespace {

struct GlRule {
    std::vector<double> x;  // nodes on (0, 1)
    std::vector<double> w;  // weights summing to 1
};

GlRule gauss_legendre01(int n) {
    GlRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double pa = 1.0, pb = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double pc = pb;
                pb = pa;
                pa = ((2.0 * j - 1.0) * z * pb - (j - 1.0) * pc) / j;
            }
            pp = n * (z * pa - pb) / (z * z - 1.0);
            const double dz = pa / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        const double w = 1.0 / ((1.0 - z * z) * pp * pp);
        rule.x[i] = 0.5 * (1.0 - z);
        rule.x[n - 1 - i] = 0.5 * (1.0 + z);
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }
    return rule;
}

// Unnormalised CDF of the density e^{-a x} - E e^{-b x} (a <= b on its
// support); appears as the outer marginal of the failed-SIC wedge.
double diffexp_cdf(double x, double a, double b, double E) {
    if (x == kInf) return 1.0 / a - E / b;
    return -std::expm1(-a * x) / a - E * -std::expm1(-b * x) / b;
}

double invert_diffexp(double q, double a, double b, double E, double cap) {
    const double total = diffexp_cdf(cap, a, b, E);
    if (!(total > 0.0)) return 0.0;
    const double target = q * total;
    double hi = std::isfinite(cap) ? cap : 1.0 / a;
    if (!std::isfinite(cap)) {
        while (diffexp_cdf(hi, a, b, E) < target && hi < 1e300) hi *= 2.0;
    }
    double lo = 0.0;
    double x = std::min(hi, -std::log1p(-q * 0.999999) / a);
    for (int it = 0; it < 100; ++it) {
        const double G = diffexp_cdf(x, a, b, E) - target;
        if (G >= 0.0) hi = x; else lo = x;
        const double g = std::exp(-a * x) - E * std::exp(-b * x);
        double nx = (g > 0.0) ? x - G / g : 0.5 * (lo + hi);
        if (!(nx > lo) || !(nx < hi)) nx = 0.5 * (lo + hi);
        if (std::abs(nx - x) <= 1e-14 * (1.0 + std::abs(x))) return nx;
        x = nx;
    }
    return x;
}

// Inverse CDF of Exp(rate) truncated to [0, hi): x(u) for u in (0,1).
double trunc_exp_inv(double u, double rate, double hi) {
    return -std::log1p(u * std::expm1(-rate * hi)) / rate;
}

struct RelayRates {
    double lambda;  // rate of |h2|^2
    double mu;      // rate of |h1|^2
    double nu;      // rate of |f|^2
};

// CDF of one relay's combining-SNR contribution given its decode event,
// sampled at the n+1 grid edges {0, thr/n, ..., thr}.
std::vector<double> contrib_cdf(DecodeEvent tag, Source source, const RelayRates& lr,
                                const RateConfig& rc, double gamma, double p_relay, double thr,
                                int n, int nodes) {
    std::vector<double> cdf(static_cast<std::size_t>(n) + 1, 0.0);
    const double step = thr / n;
    const double sigma2 = 1.0 / gamma;
    const double nu = lr.nu;

    // Accumulates weight * Pr{S <= s | g2, alpha} for a relay that forwards
    // its own noise (beta = 1): S saturates at gamma * alpha.
    auto add_af = [&](double weight, double g2, double alpha) {
        const double c = nu / g2;
        for (int i = 1; i <= n; ++i) {
            const double s = step * i;
            const double margin = gamma * alpha - s;
            cdf[static_cast<std::size_t>(i)] +=
                weight * (margin > 0.0 ? -std::expm1(-c * s / margin) : 1.0);
        }
    };

    switch (tag) {
        case DecodeEvent::Both: {
            // noise-free forwarding: S = gamma (P/2) V exactly
            const double g2 = p_relay / 2.0;
            for (int i = 1; i <= n; ++i) {
                cdf[static_cast<std::size_t>(i)] = -std::expm1(-nu * step * i / (gamma * g2));
            }
            return cdf;
        }
        case DecodeEvent::OnlyS1: {
            // condition: |h2|^2 below its threshold, S1 decodable on top of it;
            // the marginal of X = |h2|^2 is a truncated exponential
            const double c = lr.lambda + lr.mu * rc.k1;
            const double hi = rc.k2 / gamma;
            const GlRule gl = gauss_legendre01(nodes);
            for (int j = 0; j < nodes; ++j) {
                const double x = trunc_exp_inv(gl.x[j], c, hi);
                add_af(gl.w[j], p_relay / (1.0 + x + sigma2), source == Source::S1 ? 1.0 : x);
            }
            return cdf;
        }
        case DecodeEvent::OnlyS2: {
            const double c = lr.mu + lr.lambda * rc.k2;
            const double hi = rc.k1 / gamma;
            const GlRule gl = gauss_legendre01(nodes);
            for (int j = 0; j < nodes; ++j) {
                const double y = trunc_exp_inv(gl.x[j], c, hi);
                add_af(gl.w[j], p_relay / (y + 1.0 + sigma2), source == Source::S1 ? y : 1.0);
            }
            return cdf;
        }
        case DecodeEvent::None: {
            // SIC failed outright: a wedge in the (Y, X) plane, one strip per
            // attempted decode order. Outer variable via the
            // difference-of-exponentials marginal, inner via a truncated
            // exponential across the strip.
            const double k1 = rc.k1, k2 = rc.k2;
            const double aA = lr.lambda + lr.mu * k1 / k2;
            const double bA = lr.lambda + lr.mu * k1;
            const double EA = std::exp(-lr.mu * k1 / gamma);
            const double capA = (k2 >= 1.0) ? kInf : k2 / (gamma * (1.0 - k2));
            const double massA = lr.lambda * diffexp_cdf(capA, aA, bA, EA);
            const double aB = lr.mu + lr.lambda * k2 / k1;
            const double bB = lr.mu + lr.lambda * k2;
            const double EB = std::exp(-lr.lambda * k2 / gamma);
            const double capB = (k1 >= 1.0) ? kInf : k1 / (gamma * (1.0 - k1));
            const double massB = lr.mu * diffexp_cdf(capB, aB, bB, EB);
            if (!(massA + massB > 0.0)) {
                // event mass underflowed; its mixture weight is equally tiny,
                // return the conservative all-outage distribution
                std::fill(cdf.begin() + 1, cdf.end(), 1.0);
                return cdf;
            }
            const GlRule gl = gauss_legendre01(nodes);
            const double wA = massA / (massA + massB);
            for (int j = 0; j < nodes; ++j) {
                const double x = invert_diffexp(gl.x[j], aA, bA, EA, capA);
                const double ylo = k1 * x / k2, yhi = k1 * x + k1 / gamma;
                const double em = std::expm1(-lr.mu * (yhi - ylo));
                for (int m = 0; m < nodes; ++m) {
                    const double y = ylo - std::log1p(gl.x[m] * em) / lr.mu;
                    add_af(wA * gl.w[j] * gl.w[m], p_relay / (y + x + sigma2),
                           source == Source::S1 ? y : x);
                }
            }
            const double wB = 1.0 - wA;
            for (int j = 0; j < nodes; ++j) {
                const double y = invert_diffexp(gl.x[j], aB, bB, EB, capB);
                const double xlo = k2 * y / k1, xhi = k2 * y + k2 / gamma;
                const double em = std::expm1(-lr.lambda * (xhi - xlo));
                for (int m = 0; m < nodes; ++m) {
                    const double x = xlo - std::log1p(gl.x[m] * em) / lr.lambda;
                    add_af(wB * gl.w[j] * gl.w[m], p_relay / (y + x + sigma2),
                           source == Source::S1 ? y : x);
                }
            }
            return cdf;
        }
    }
    throw std::invalid_argument("contrib_cdf: unknown event");
}

struct QuadPass {
    double p_low = 0.0;
    double p_high = 0.0;
    double skipped = 0.0;
    std::uint64_t events_evaluated = 0;
    std::uint64_t events_skipped = 0;
};

// Convolution with bin masses placed on the chosen edge; indices beyond the
// grid (sums already past the threshold) are dropped.
void convolve_edge(const std::vector<double>& dist, const std::vector<double>& bins, int shift,
                   std::vector<double>& out) {
    const int n = static_cast<int>(dist.size()) - 1;
    std::fill(out.begin(), out.end(), 0.0);
    for (int i = 0; i <= n; ++i) {
        const double d = dist[static_cast<std::size_t>(i)];
        if (d == 0.0) continue;
        const int jmax = n - i - shift;
        for (int j = 0; j <= jmax && j < n; ++j) {
            out[static_cast<std::size_t>(i + j + shift)] += d * bins[static_cast<std::size_t>(j)];
        }
    }
}

QuadPass quad_pass(const ScenarioConfig& config, const RateConfig& rc, double gamma, Source source,
                   double thr, int n, int nodes, double skip_threshold) {
    const std::size_t nu = config.active.size();
    std::vector<std::array<std::vector<double>, 4>> bins(nu);
    std::vector<std::array<double, 4>> prob(nu);
    for (std::size_t j = 0; j < nu; ++j) {
        const int r = config.active[j];
        const RelayRates lr{config.h2_stats[r].rate, config.h1_stats[r].rate,
                            config.f_stats[r].rate};
        const RelayEventProbs probs = event_probs(lr.lambda, lr.mu, rc, gamma);
        for (int tag = 0; tag < 4; ++tag) {
            const DecodeEvent e = static_cast<DecodeEvent>(tag);
            const std::vector<double> cdf =
                contrib_cdf(e, source, lr, rc, gamma, config.p_relay, thr, n, nodes);
            std::vector<double> b(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                b[static_cast<std::size_t>(i)] = cdf[static_cast<std::size_t>(i) + 1] -
                                                 cdf[static_cast<std::size_t>(i)];
            }
            bins[j][static_cast<std::size_t>(tag)] = std::move(b);
            prob[j][static_cast<std::size_t>(tag)] = probs[e];
        }
    }

    QuadPass pass;
    // one scratch distribution pair per recursion depth; index = grid
    // position, rounded down (lo) or up (hi)
    std::vector<std::vector<double>> lo(nu + 1), hi(nu + 1);
    for (auto& v : lo) v.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (auto& v : hi) v.assign(static_cast<std::size_t>(n) + 1, 0.0);
    lo[0][0] = 1.0;
    hi[0][0] = 1.0;

    auto descend = [&](auto&& self, std::size_t depth, double p1) -> void {
        if (depth == nu) {
            double sum_lo = 0.0, sum_hi = 0.0;
            for (double v : lo[depth]) sum_lo += v;
            for (double v : hi[depth]) sum_hi += v;
            // rounded-down values overstate Pr{sum <= thr}, rounded-up understate
            pass.p_low += p1 * sum_hi;
            pass.p_high += p1 * sum_lo;
            ++pass.events_evaluated;
            return;
        }
        for (int tag = 0; tag < 4; ++tag) {
            const double p = p1 * prob[depth][static_cast<std::size_t>(tag)];
            if (p < skip_threshold) {
                pass.skipped += p;
                pass.events_skipped += 1ull << (2 * (nu - depth - 1));
                continue;
            }
            convolve_edge(lo[depth], bins[depth][static_cast<std::size_t>(tag)], 0, lo[depth + 1]);
            convolve_edge(hi[depth], bins[depth][static_cast<std::size_t>(tag)], 1, hi[depth + 1]);
            self(self, depth + 1, p);
        }
    };
    descend(descend, 0, 1.0);
    return pass;
}

OutageEstimate end_to_end_quadrature(const ScenarioConfig& config, double gamma, Source source,
                                     const EndToEndOptions& options, EndToEndDiagnostics* diag) {
    const RateConfig rc = config.rates();
    const double thr = (source == Source::S1) ? rc.k1 : rc.k2;
    // the event enumeration is exponential in the relay count; coarsen the
    // grid beyond four relays to keep the convolution tree affordable
    const int shrink = (config.n_used <= 4) ? 1 : (config.n_used <= 6) ? 2 : 4;
    const int n = std::max(32, options.grid_n / shrink);

    const QuadPass main =
        quad_pass(config, rc, gamma, source, thr, n, options.quad_nodes, options.skip_threshold);
    double margin = 0.0;
    if (options.node_margin) {
        const QuadPass half = quad_pass(config, rc, gamma, source, thr, n,
                                        std::max(8, options.quad_nodes / 2), options.skip_threshold);
        margin = std::abs(0.5 * (main.p_low + main.p_high) - 0.5 * (half.p_low + half.p_high));
    }

    OutageEstimate est;
    est.ci_low = std::max(0.0, main.p_low - margin);
    est.ci_high = std::min(1.0, main.p_high + main.skipped + margin);
    est.p_hat = 0.5 * (est.ci_low + est.ci_high);
    est.ci_half_width = 0.5 * (est.ci_high - est.ci_low);
    est.trials = 0;
    est.failures = 0;
    if (diag) {
        diag->skipped_mass = main.skipped;
        diag->bracket_low = main.p_low;
        diag->bracket_high = main.p_high;
        diag->events_evaluated = main.events_evaluated;
        diag->events_skipped = main.events_skipped;
    }
    return est;
}

OutageEstimate end_to_end_mc(const ScenarioConfig& config, double gamma,
                             std::uint64_t trials_per_event, SeedSpec seed, Source source,
                             const EndToEndOptions& options, EndToEndDiagnostics* diag) {
    const RateConfig rc = config.rates();
    const std::size_t nu = config.active.size();
    std::vector<RelayEventProbs> probs(nu);
    for (std::size_t j = 0; j < nu; ++j) {
        const int r = config.active[j];
        probs[j] = event_probs(config.h2_stats[r].rate, config.h1_stats[r].rate, rc, gamma);
    }
    const ConditioningMode mode = (options.method == SecondHopMethod::ConditionalMc)
                                      ? ConditioningMode::Conditional
                                      : ConditioningMode::Unconditional;
    const std::uint64_t total = 1ull << (2 * nu);
    double p = 0.0, var = 0.0, skipped = 0.0;
    std::uint64_t trials_total = 0, evaluated = 0, skipped_events = 0;
    EventVector events(nu);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        double p1 = 1.0;
        std::uint64_t code = idx;
        for (std::size_t j = 0; j < nu; ++j) {
            events[j] = static_cast<DecodeEvent>(code & 3u);
            code >>= 2;
            p1 *= probs[j][events[j]];
        }
        if (p1 < options.skip_threshold) {
            skipped += p1;
            ++skipped_events;
            continue;
        }
        const OutageEstimate e = second_hop_outage_given_events(
            config, events, gamma, trials_per_event,
            SeedSpec{seed.master_seed, seed.stream_index + (idx << 32)}, source, mode);
        p += p1 * e.p_hat;
        var += p1 * p1 * e.ci_half_width * e.ci_half_width;
        trials_total += e.trials;
        ++evaluated;
    }
    const double hw = std::sqrt(var) + skipped;
    OutageEstimate est;
    est.p_hat = p;
    est.trials = trials_total;
    est.ci_half_width = hw;
    est.ci_low = std::max(0.0, p - hw);
    est.ci_high = std::min(1.0, p + hw);
    if (diag) {
        diag->skipped_mass = skipped;
        diag->bracket_low = est.ci_low;
        diag->bracket_high = est.ci_high;
        diag->events_evaluated = evaluated;
        diag->events_skipped = skipped_events;
    }
    return est;
}

}  // namespace

OutageEstimate end_to_end_outage(const ScenarioConfig& config_in, double gamma,
                                 std::uint64_t trials_per_event, SeedSpec seed, Source source,
                                 const EndToEndOptions& options, EndToEndDiagnostics* diag) {
    ScenarioConfig config = config_in;
    validate_scenario(config);
    if (config.n_used > 8) {
        throw std::invalid_argument("end_to_end_outage: event enumeration supports at most 8 transmitting relays");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("end_to_end_outage: gamma must be positive and finite");
    }
    if (options.method == SecondHopMethod::Quadrature) {
        return end_to_end_quadrature(config, gamma, source, options, diag);
    }
    return end_to_end_mc(config, gamma, trials_per_event, seed, source, options, diag);
}

AsymptoticBounds asymptotic_bounds(const ScenarioConfig& config_in, double gamma, Source source) {
    ScenarioConfig config = config_in;
    validate_scenario(config);
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("asymptotic_bounds: gamma must be positive and finite");
    }
    const RateConfig rc = config.rates();
    const double k = (source == Source::S1) ? rc.k1 : rc.k2;
    const double base = std::pow(k / gamma, static_cast<double>(config.n_used));
    double c = 1.0;
    for (int r : config.active) {
        const RelayEventProbs limits =
            high_snr_constants(config.h2_stats[r].rate, config.h1_stats[r].rate, rc);
        c *= limits.p_both_ok * config.f_stats[r].rate;
    }
    return {c * base, base};
}

}  // namespace sicrelay
