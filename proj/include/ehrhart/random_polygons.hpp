#pragma once

#include <cstdint>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

/**
 * 64-bit linear congruential generator, fixed so seeded runs reproduce
 * across languages:
 *
 *   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
 *
 * Draws use the top 32 bits of the new state; uniform(n) reduces modulo n.
 */
struct Lcg64 {
    uint64_t state;

    explicit Lcg64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }

    uint32_t next_u32() { return static_cast<uint32_t>(next() >> 32); }

    /// Uniform draw in [0, n), 1 <= n < 2^32.
    long uniform(long n) {
        return static_cast<long>(next_u32() % static_cast<uint32_t>(n));
    }
};

/**
 * Rejection-samples a rational polygon: 3..6 points with coordinates num/den,
 * den in 1..6, value in [-3, 3] (num drawn uniformly from [-3 den, 3 den]).
 * Draws are discarded until the points are in strictly convex position.
 */
inline Polytope random_polygon(Lcg64& gen) {
    for (;;) {
        long m = 3 + gen.uniform(4);
        std::vector<Point> pts;
        for (long i = 0; i < m; ++i) {
            Point v(2);
            for (int j = 0; j < 2; ++j) {
                long den = 1 + gen.uniform(6);
                long num = gen.uniform(6 * den + 1) - 3 * den;
                v[j] = Rational(num, den);
            }
            pts.push_back(std::move(v));
        }
        try {
            return build_polygon(std::move(pts));
        } catch (const Error&) {
            // not in convex position (or duplicates); redraw
        }
    }
}

} // namespace ehrhart
