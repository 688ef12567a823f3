#pragma once

#include <cstdint>
#include <vector>

#include "sicrelay/protocol.hpp"
#include "sicrelay/rng.hpp"
#include "sicrelay/scenario.hpp"

namespace sicrelay {

// Closed-form probabilities of the four decode outcomes at one relay.
// lambda and mu are the exponential rates of |h2|^2 and |h1|^2; gamma is the
// transmit SNR. The four values sum to one algebraically.
struct RelayEventProbs {
    double p_both_fail = 0.0;    // nothing decoded
    double p_s1fail_s2ok = 0.0;  // only source 2 decoded
    double p_s1ok_s2fail = 0.0;  // only source 1 decoded
    double p_both_ok = 0.0;      // both decoded

    double operator[](DecodeEvent e) const;
};

RelayEventProbs event_probs(double lambda, double mu, const RateConfig& rates, double gamma);

// gamma -> infinity limits: the failure probability tends to a rate-geometry
// constant C, full decoding to C', and the single-source outcomes vanish.
RelayEventProbs high_snr_constants(double lambda, double mu, const RateConfig& rates);

// One decode outcome per active relay, relay order matching config.active.
using EventVector = std::vector<DecodeEvent>;

// How the first-hop gains entering the relay coefficients are drawn when
// conditioning on a decode event vector.
enum class ConditioningMode {
    Conditional,    // rejection-sample (h1, h2) until the relay reproduces the event
    Unconditional,  // draw once, impose the event's coefficients regardless
};

// Monte Carlo estimate of the destination outage probability given the
// decode outcome at every transmitting relay. Relay->destination gains are
// always drawn unconditionally. Requires trials >= 1000; in conditional mode
// fails with a diagnostic when the requested event is rarer than 1e-6 at
// these parameters (rejection would stall).
OutageEstimate second_hop_outage_given_events(const ScenarioConfig& config,
                                              const EventVector& events, double gamma,
                                              std::uint64_t trials, SeedSpec seed,
                                              Source source = Source::S1,
                                              ConditioningMode mode = ConditioningMode::Conditional);

// Evaluation strategy for the per-event second-hop outage inside
// end_to_end_outage.
enum class SecondHopMethod {
    // Deterministic: the relay->destination fading dimension is integrated in
    // closed form and the first-hop conditional gain distributions by
    // Gauss-Legendre quadrature; the across-relay sum is convolved on a grid
    // with a rigorous rounding bracket. Resolves arbitrarily deep tails, so
    // it is the default (plain Monte Carlo cannot reach the high-SNR decades).
    Quadrature,
    ConditionalMc,
    UnconditionalMc,
};

struct EndToEndOptions {
    SecondHopMethod method = SecondHopMethod::Quadrature;
    int grid_n = 512;            // convolution grid resolution
    int quad_nodes = 48;         // Gauss-Legendre nodes per dimension
    bool node_margin = true;     // re-run at half the nodes and widen the bracket
    double skip_threshold = 1e-12;  // events rarer than this are skipped
};

struct EndToEndDiagnostics {
    double skipped_mass = 0.0;   // total first-hop probability of skipped events
    double bracket_low = 0.0;    // deterministic bounds (quadrature method)
    double bracket_high = 0.0;
    std::uint64_t events_evaluated = 0;
    std::uint64_t events_skipped = 0;
};

// End-to-end outage of one source: total-probability sum over all 4^n_used
// decode event vectors of (product of per-relay closed-form event
// probabilities) x (conditional second-hop outage). Events whose first-hop
// probability falls below skip_threshold are skipped and their mass added to
// the reported uncertainty. Requires n_used <= 8 (the enumeration is
// exponential). trials_per_event and seed only matter for the Monte Carlo
// methods.
OutageEstimate end_to_end_outage(const ScenarioConfig& config, double gamma,
                                 std::uint64_t trials_per_event, SeedSpec seed,
                                 Source source = Source::S1,
                                 const EndToEndOptions& options = {},
                                 EndToEndDiagnostics* diag = nullptr);

// High-SNR reference curves: both decay as (k/gamma)^n_used; the `upper`
// variant carries the product of the per-relay full-decode constants and
// relay->destination rates. Returned for diagnostics (slope references), not
// as strict bounds.
struct AsymptoticBounds {
    double upper = 0.0;
    double lower = 0.0;
};

AsymptoticBounds asymptotic_bounds(const ScenarioConfig& config, double gamma,
                                   Source source = Source::S1);

}  // namespace sicrelay
