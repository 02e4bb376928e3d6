#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace rwg {

/// splitmix64 finalizer: bijective 64-bit mixing.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// Small, portable generator (splitmix64). Every stream is a pure function of
/// its seed, independent of platform and standard library, which is what the
/// bit-for-bit reproducibility contract rests on.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) noexcept {
        return lo + next_double() * (hi - lo);
    }

    /// Standard normal draw via Box-Muller; consumes two words per call.
    double next_gaussian() noexcept {
        const double u1 = 1.0 - next_double();  // (0, 1]
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

}  // namespace rwg
