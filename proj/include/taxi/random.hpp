#pragma once

#include "taxi/apollonius.hpp"
#include "taxi/geometry.hpp"
#include "taxi/inscription.hpp"

#include <cstdint>
#include <random>

namespace taxi::gen {

using Engine = std::mt19937_64;

/// p/q with p in [-50, 50] and q in [1, 50].
inline Rat rational(Engine& g, long bound = 50) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    const long p = num(g);
    return Rat(p, den(g));
}

/// Rational in the open interval (lo, hi).
inline Rat rational_between(Engine& g, const Rat& lo, const Rat& hi, long steps = 1000) {
    std::uniform_int_distribution<long> k(1, steps - 1);
    return lo + (hi - lo) * Rat(k(g), steps);
}

inline Triangle triangle(Engine& g) {
    for (;;) {
        Triangle t{{Point{rational(g), rational(g)}, Point{rational(g), rational(g)}, Point{rational(g), rational(g)}}};
        if (t.v[0] == t.v[1] || t.v[1] == t.v[2] || t.v[0] == t.v[2]) continue;
        if (orientation(t.v[0], t.v[1], t.v[2]) == 0) continue;
        return t;
    }
}

inline Triangle minimally_inscribed_triangle(Engine& g) {
    for (;;) {
        Triangle t = triangle(g);
        if (classify_triangle(t).minimally_inscribed) return t;
    }
}

/// A minimally inscribed triangle already in the canonical frame: C at the
/// origin, 0 < m_a < 1, -1 < m_b < m_a, |m_c| > 1 finite, A.x > 0.
inline Triangle canonical_minimal_triangle(Engine& g) {
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        const Rat ma = rational_between(g, Rat(0), Rat(1), 97);
        const Rat mb = rational_between(g, Rat(-1), ma, 89);
        const Rat mag = Rat(1) + rational_between(g, Rat(0), Rat(10), 101);
        const Rat mc = coin(g) ? mag : -mag;
        const Rat xa = rational_between(g, Rat(0), Rat(20), 53);
        Triangle t;
        try {
            t = realize_canonical(ma, mb, Slope::finite(mc), xa);
        } catch (const std::exception&) {
            continue;
        }
        if (!(Rat(0) < t.v[1].x)) continue;
        if (!classify_triangle(t).minimally_inscribed) continue;
        return t;
    }
}

}  // namespace taxi::gen
