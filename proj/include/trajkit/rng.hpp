#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace trajkit {

/// Seeded random number generator with portable output.
///
/// std::mt19937_64 produces a bit-exact stream on every conforming
/// implementation, but the standard distributions do not. The mappings below
/// are fixed here so that seeded runs give identical values everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller; consumes two uniforms per draw.
    double normal() {
        // u1 in (0, 1] so the log is finite.
        const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace trajkit
