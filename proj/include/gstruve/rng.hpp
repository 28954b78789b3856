#pragma once

// Deterministic random draws for property checks. Values depend only on
// (seed, stream), and the double conversion is done here rather than through
// <random> distributions so output is identical across standard libraries.

#include <cmath>
#include <cstdint>
#include <random>

#include "gstruve/error.hpp"

namespace gstruve {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0) : engine_(mix(seed, stream)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    cplx uniform_complex(double re_lo, double re_hi, double im_lo, double im_hi) {
        const double re = uniform(re_lo, re_hi);
        return {re, uniform(im_lo, im_hi)};
    }
    /// Uniform over the disk |z| < radius.
    cplx in_disk(double radius) {
        const double r = radius * std::sqrt(uniform());
        return std::polar(r, 2.0 * 3.14159265358979323846 * uniform());
    }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        // splitmix64 finalizer over seed and stream index
        std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace gstruve
