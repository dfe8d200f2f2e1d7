#pragma once

#include <cstdint>
#include <random>

#include "qop/rational.hpp"

namespace qop {

/// Deterministic source of small rationals: numerator in [-height, height],
/// denominator in [1, height]. The mapping from engine output is fixed so
/// sequences are reproducible across standard libraries.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, int height = 10) : engine_(seed), height_(height) {}

    Rational next() {
        const auto span = static_cast<std::uint64_t>(2 * height_ + 1);
        const long num = static_cast<long>(engine_() % span) - height_;
        const long den = static_cast<long>(engine_() % static_cast<std::uint64_t>(height_)) + 1;
        return Rational(num, den);
    }

    Rational next_nonzero() {
        for (;;) {
            Rational r = next();
            if (!r.is_zero()) return r;
        }
    }

    /// Uniform-ish integer in [lo, hi].
    long integer(long lo, long hi) {
        return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
    int height_;
};

}  // namespace qop
