#pragma once

#include "taxi/geometry.hpp"

#include <array>
#include <string_view>

namespace taxi {

/// The eight symmetries of the taxicab unit circle.
enum class D4 {
    Identity,
    ReflectX0,    // about x = 0: (x, y) -> (-x, y)
    ReflectY0,    // about y = 0: (x, y) -> (x, -y)
    ReflectDiag,  // about y = x: (x, y) -> (y, x)
    ReflectAnti,  // about y = -x: (x, y) -> (-y, -x)
    Rot90,        // (x, y) -> (-y, x)
    Rot180,       // (x, y) -> (-x, -y)
    Rot270,       // (x, y) -> (y, -x)
};

inline constexpr std::array<D4, 8> kAllD4 = {D4::Identity,    D4::ReflectX0, D4::ReflectY0, D4::ReflectDiag,
                                             D4::ReflectAnti, D4::Rot90,     D4::Rot180,    D4::Rot270};

namespace detail {

// Signed permutation matrix [[a, b], [c, d]].
struct D4Matrix {
    int a, b, c, d;
};

constexpr D4Matrix matrix_of(D4 g) {
    switch (g) {
        case D4::Identity: return {1, 0, 0, 1};
        case D4::ReflectX0: return {-1, 0, 0, 1};
        case D4::ReflectY0: return {1, 0, 0, -1};
        case D4::ReflectDiag: return {0, 1, 1, 0};
        case D4::ReflectAnti: return {0, -1, -1, 0};
        case D4::Rot90: return {0, -1, 1, 0};
        case D4::Rot180: return {-1, 0, 0, -1};
        case D4::Rot270: return {0, 1, -1, 0};
    }
    return {1, 0, 0, 1};
}

constexpr D4 element_of(const D4Matrix& m) {
    for (D4 g : kAllD4) {
        auto n = matrix_of(g);
        if (n.a == m.a && n.b == m.b && n.c == m.c && n.d == m.d) return g;
    }
    return D4::Identity;
}

}  // namespace detail

constexpr std::string_view name_of(D4 g) {
    switch (g) {
        case D4::Identity: return "identity";
        case D4::ReflectX0: return "reflect_x0";
        case D4::ReflectY0: return "reflect_y0";
        case D4::ReflectDiag: return "reflect_diag";
        case D4::ReflectAnti: return "reflect_anti";
        case D4::Rot90: return "rot90";
        case D4::Rot180: return "rot180";
        case D4::Rot270: return "rot270";
    }
    return "?";
}

inline Vec2 apply(D4 g, const Vec2& v) {
    const auto m = detail::matrix_of(g);
    return {Rat(m.a) * v.x + Rat(m.b) * v.y, Rat(m.c) * v.x + Rat(m.d) * v.y};
}

constexpr D4 compose(D4 outer, D4 inner) {
    const auto f = detail::matrix_of(outer);
    const auto g = detail::matrix_of(inner);
    return detail::element_of({f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c,
                               f.c * g.b + f.d * g.d});
}

constexpr D4 inverse(D4 g) {
    // Signed permutation matrices are orthogonal: the inverse is the transpose.
    const auto m = detail::matrix_of(g);
    return detail::element_of({m.a, m.c, m.b, m.d});
}

/// True when g exchanges the slope +1 and slope -1 diagonal directions.
constexpr bool swaps_diagonals(D4 g) {
    switch (g) {
        case D4::ReflectX0:
        case D4::ReflectY0:
        case D4::Rot90:
        case D4::Rot270: return true;
        default: return false;
    }
}

/// A D4 element followed by a translation; preserves d1 exactly.
struct Isometry {
    D4 g = D4::Identity;
    Vec2 shift{Rat(0), Rat(0)};

    [[nodiscard]] Point apply(const Point& p) const { return Point{} + taxi::apply(g, p - Point{}) + shift; }
    [[nodiscard]] Vec2 apply(const Vec2& v) const { return taxi::apply(g, v); }
    [[nodiscard]] Slope apply(const Slope& m) const {
        return Slope::of(apply(m.is_vertical() ? Vec2{Rat(0), Rat(1)} : Vec2{Rat(1), m.value()}));
    }
    [[nodiscard]] TaxiCircle apply(const TaxiCircle& c) const { return {apply(c.center()), c.radius()}; }

    [[nodiscard]] Isometry inverse() const {
        const D4 gi = taxi::inverse(g);
        return {gi, -taxi::apply(gi, shift)};
    }

    friend bool operator==(const Isometry&, const Isometry&) = default;
};

/// outer after inner.
inline Isometry compose(const Isometry& outer, const Isometry& inner) {
    return {compose(outer.g, inner.g), taxi::apply(outer.g, inner.shift) + outer.shift};
}

}  // namespace taxi
