#pragma once

#include <cstdint>

#include "plgroup/rational.hpp"

namespace plgroup {

// splitmix64 stream.  Deterministic and platform-independent, unlike the
// standard distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t v = next();
            if (v >= threshold) return v % bound;
        }
    }

    // Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Stream-split rule: trial i of seed s draws from splitmix64 seeded with
    // mix(s, i), so trials are independent and order-insensitive.
    static Rng split(std::uint64_t seed, std::uint64_t index) {
        Rng mixer(seed ^ (0x2545f4914f6cdd1dULL * (index + 1)));
        return Rng(mixer.next());
    }

    // Random reduced fraction in (0,1): denominator uniform in [2, dbound],
    // numerator uniform in [1, q-1], then reduced.
    Rational unit_fraction(long dbound) {
        long q = range(2, dbound);
        long p = range(1, q - 1);
        return rat(p, q);
    }

private:
    std::uint64_t state_;
};

}  // namespace plgroup
