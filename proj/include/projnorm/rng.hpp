#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace projnorm {

/**
 * Seedable 64-bit generator with platform-independent output.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the
 * standard. The library distributions are implementation-defined, so uniform
 * and Gaussian variates are derived here directly from raw engine words.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer on [lo, hi], unbiased by rejection.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        if (hi < lo) {
            throw std::invalid_argument("uniform_int: empty range");
        }
        const std::uint64_t span = hi - lo;
        if (span == std::numeric_limits<std::uint64_t>::max()) {
            return engine_();
        }
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return lo + draw % range;
    }

    /// Complex standard normal: independent N(0,1) real and imaginary parts via Box-Muller.
    std::complex<double> complex_normal() {
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace projnorm
