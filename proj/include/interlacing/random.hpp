#pragma once

#include "interlacing/rational.hpp"

#include <cstdint>

namespace interlacing {

/// SplitMix64 (Steele, Lea, Flood). The exact recurrence is part of the
/// file-level contract: any port must reproduce the same stream for a seed.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi] as lo + next() % (hi - lo + 1).
    /// The modulo bias is accepted; it keeps ports trivially bit-identical.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Numerator drawn from [-bound, bound] first, then denominator from [1, bound].
    Rational rational(std::int64_t bound) {
        const auto num = uniform_int(-bound, bound);
        const auto den = uniform_int(1, bound);
        Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
        r.canonicalize();
        return r;
    }

private:
    std::uint64_t state_;
};

/// Seed for trial `index` of a run: first output of SplitMix64(master ^ index).
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    return SplitMix64(master ^ index).next();
}

}  // namespace interlacing
