#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace sicrelay {

// Identifies one reproducible random stream. Streams are keyed by
// (master_seed, stream_index); the mapping is stable across runs and worker
// counts, so trial N always consumes the same values no matter how trials
// are scheduled.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

// Domain tag mixed into the stream key so different consumers of the same
// SeedSpec never share a sequence.
enum class StreamDomain : std::uint64_t {
    Fading = 1,
    SecondHop = 2,
    Topology = 3,
    Generic = 4,
};

namespace rng_detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t avalanche(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

}  // namespace rng_detail

// Counter-based generator: the state walks a fixed-increment Weyl sequence
// and every output is a full 64-bit avalanche of the counter (splitmix64).
// Cheap to construct, which is what makes per-trial streams affordable.
class TrialStream {
public:
    explicit TrialStream(SeedSpec seed, StreamDomain domain = StreamDomain::Fading) noexcept {
        using rng_detail::avalanche;
        using rng_detail::kGolden;
        std::uint64_t h = avalanche(seed.master_seed + kGolden);
        h = avalanche(h ^ (static_cast<std::uint64_t>(domain) * 0xD6E8FEB86659FD93ull));
        state_ = avalanche(h ^ (seed.stream_index + kGolden));
    }

    std::uint64_t next_u64() noexcept {
        state_ += rng_detail::kGolden;
        return rng_detail::avalanche(state_);
    }

    // Uniform on the open interval (0, 1); never an endpoint, so log() of it
    // is always finite.
    double next_unit() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Exponential with the given mean (inverse-CDF method).
    double next_exponential(double mean) noexcept { return -mean * std::log(next_unit()); }

    // Zero-mean circularly symmetric complex Gaussian with E[|h|^2] equal to
    // mean_power: squared magnitude exponential, phase uniform. The magnitude
    // is always drawn before the phase.
    std::complex<double> next_gain(double mean_power) noexcept {
        const double mag = std::sqrt(next_exponential(mean_power));
        const double phase = 2.0 * M_PI * next_unit();
        return {mag * std::cos(phase), mag * std::sin(phase)};
    }

private:
    std::uint64_t state_;
};

}  // namespace sicrelay
