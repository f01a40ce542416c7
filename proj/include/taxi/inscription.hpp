#pragma once

#include "taxi/error.hpp"
#include "taxi/geometry.hpp"
#include "taxi/linear_system.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace taxi {

/// How an angle sits against the diagonals through its vertex.
///
/// With the vertex at a vertex of a taxicab circle, a completely inscribed
/// angle lies inside the circle; a strictly positively inscribed angle
/// straddles the slope -1 side; a strictly negatively inscribed one the
/// slope +1 side; an angle that is not inscribed straddles both.
enum class AngleClass { CompletelyInscribed, StrictlyPositive, StrictlyNegative, NotInscribed };

constexpr std::string_view name_of(AngleClass c) {
    switch (c) {
        case AngleClass::CompletelyInscribed: return "completely_inscribed";
        case AngleClass::StrictlyPositive: return "strictly_positive";
        case AngleClass::StrictlyNegative: return "strictly_negative";
        case AngleClass::NotInscribed: return "not_inscribed";
    }
    return "?";
}

/// The slope +1 line through the vertex stays out of the open angle.
constexpr bool positively_inscribed(AngleClass c) {
    return c == AngleClass::CompletelyInscribed || c == AngleClass::StrictlyPositive;
}
/// The slope -1 line through the vertex stays out of the open angle.
constexpr bool negatively_inscribed(AngleClass c) {
    return c == AngleClass::CompletelyInscribed || c == AngleClass::StrictlyNegative;
}

namespace detail {

// d strictly inside the open angle swept from u to w (angle below pi).
inline bool strictly_inside(const Vec2& u, const Vec2& w, const Vec2& d) {
    const int s = cross(u, w).sign();
    return s != 0 && cross(u, d).sign() == s && cross(d, w).sign() == s;
}

}  // namespace detail

inline AngleClass classify_angle(const Point& /*vertex*/, const Vec2& dir1, const Vec2& dir2) {
    if (dir1.is_zero() || dir2.is_zero()) throw InvalidTriangle("angle with a zero-length ray");
    if (cross(dir1, dir2).is_zero()) throw InvalidTriangle("degenerate angle (zero or straight)");

    const Vec2 pp{Rat(1), Rat(1)}, mm{Rat(-1), Rat(-1)};
    const Vec2 pm{Rat(1), Rat(-1)}, mp{Rat(-1), Rat(1)};
    const bool plus_inside = detail::strictly_inside(dir1, dir2, pp) || detail::strictly_inside(dir1, dir2, mm);
    const bool minus_inside = detail::strictly_inside(dir1, dir2, pm) || detail::strictly_inside(dir1, dir2, mp);

    if (!plus_inside && !minus_inside) return AngleClass::CompletelyInscribed;
    if (plus_inside && !minus_inside) return AngleClass::StrictlyNegative;
    if (!plus_inside && minus_inside) return AngleClass::StrictlyPositive;
    return AngleClass::NotInscribed;
}

struct TriangleClassification {
    std::array<AngleClass, 3> angle;
    bool inscribed = false;
    int completely_count = 0;
    bool minimally_inscribed = false;
};

/// Angle i is the angle at vertex i, formed by the rays toward the other two.
inline TriangleClassification classify_triangle(const Triangle& t) {
    t.validate();
    TriangleClassification out;
    for (std::size_t i = 0; i < 3; ++i) out.angle[i] = classify_angle(t[i], t[i + 1] - t[i], t[i + 2] - t[i]);
    out.inscribed = std::none_of(out.angle.begin(), out.angle.end(),
                                 [](AngleClass c) { return c == AngleClass::NotInscribed; });
    out.completely_count = static_cast<int>(
        std::count(out.angle.begin(), out.angle.end(), AngleClass::CompletelyInscribed));
    out.minimally_inscribed = out.inscribed && out.completely_count == 1;
    return out;
}

/// A one-parameter run of circles through the same three points:
/// center(t) = start + t * direction, radius(t) = start_radius + t * radius_rate,
/// for t in [0, t_max], or t >= 0 when t_max is empty.
struct CircleFamily {
    Point start;
    Rat start_radius;
    Vec2 direction;
    Rat radius_rate;
    std::optional<Rat> t_max;

    [[nodiscard]] bool is_ray() const { return !t_max; }
    [[nodiscard]] Point center_at(const Rat& t) const { return start + t * direction; }
    [[nodiscard]] Rat radius_at(const Rat& t) const { return start_radius + t * radius_rate; }
    [[nodiscard]] Point end() const {
        if (!t_max) throw PreconditionError("ray family has no end point");
        return center_at(*t_max);
    }
    /// Parameter of p along the family, if p is on it.
    [[nodiscard]] std::optional<Rat> locate(const Point& p) const {
        const Vec2 off = p - start;
        if (!cross(direction, off).is_zero()) return std::nullopt;
        Rat t = direction.x.is_zero() ? off.y / direction.y : off.x / direction.x;
        if (t.sign() < 0 || (t_max && *t_max < t)) return std::nullopt;
        return t;
    }
    [[nodiscard]] bool contains(const TaxiCircle& c) const {
        auto t = locate(c.center());
        return t && radius_at(*t) == c.radius();
    }
    friend bool operator==(const CircleFamily&, const CircleFamily&) = default;
};

struct CircumcircleResult {
    std::vector<TaxiCircle> isolated;
    std::vector<CircleFamily> families;

    [[nodiscard]] bool empty() const { return isolated.empty() && families.empty(); }
    /// The circle through the points is one of the reported ones.
    [[nodiscard]] bool contains(const TaxiCircle& c) const {
        return std::find(isolated.begin(), isolated.end(), c) != isolated.end() ||
               std::any_of(families.begin(), families.end(), [&](const auto& f) { return f.contains(c); });
    }
};

namespace detail {

inline bool equidistant(const Point& c, const Rat& r, std::span<const Point> pts) {
    return std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return d1(c, p) == r; });
}

// Scale so the larger coordinate magnitude is one.
inline Vec2 unit_linf(const Vec2& v) {
    const Rat s = max(abs(v.x), abs(v.y));
    return {v.x / s, v.y / s};
}

inline void merge_families(std::vector<CircleFamily>& fams) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < fams.size() && !changed; ++i) {
            for (std::size_t j = 0; j < fams.size() && !changed; ++j) {
                if (i == j || !fams[i].t_max) continue;
                auto& a = fams[i];
                const auto& b = fams[j];
                // a ends where b starts, heading the same way.
                if (a.end() != b.start || cross(a.direction, b.direction).sign() != 0 ||
                    dot(a.direction, b.direction).sign() <= 0)
                    continue;
                const Rat k = a.direction.x.is_zero() ? b.direction.y / a.direction.y : b.direction.x / a.direction.x;
                if (b.radius_rate != k * a.radius_rate) continue;
                if (b.t_max)
                    a.t_max = *a.t_max + k * *b.t_max;
                else
                    a.t_max.reset();
                fams.erase(fams.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
            }
        }
    }
}

}  // namespace detail

/// All taxicab circles through three points. Enumerates the 64 sign
/// patterns of the absolute values in d1(c, p_i) = R, solves each linear
/// piece exactly and reports points and one-parameter runs separately.
inline CircumcircleResult circumcircles(const Point& p1, const Point& p2, const Point& p3) {
    const Triangle tri = Triangle::checked(p1, p2, p3);
    const std::array<Point, 3> pts = tri.v;
    constexpr std::size_t X = 0, Y = 1, R = 2;

    CircumcircleResult out;
    for (int pattern = 0; pattern < 64; ++pattern) {
        linear::System sys(3);
        for (std::size_t i = 0; i < 3; ++i) {
            const Rat sx = (pattern >> (2 * i)) & 1 ? Rat(-1) : Rat(1);
            const Rat sy = (pattern >> (2 * i + 1)) & 1 ? Rat(-1) : Rat(1);
            // sx (x - px) + sy (y - py) = R with both terms non-negative.
            sys.eq({sx, sy, Rat(-1)}, sx * pts[i].x + sy * pts[i].y);
            sys.ge({sx, Rat(0), Rat(0)}, sx * pts[i].x);
            sys.ge({Rat(0), sy, Rat(0)}, sy * pts[i].y);
        }
        const auto xr = sys.range(X);
        if (!xr) continue;
        const auto yr = sys.range(Y);
        if (xr->is_point() && yr->is_point()) {
            const Point c{xr->lo->value, yr->lo->value};
            const Rat r = d1(c, pts[0]);
            if (r.sign() > 0 && detail::equidistant(c, r, pts)) out.isolated.emplace_back(c, r);
            continue;
        }
        if (sys.equality_rank() < 2)
            throw InconsistencyError("two-dimensional set of circle centers for non-collinear points");

        // A segment or ray of centers; walk it along whichever coordinate varies.
        const std::size_t var = xr->is_point() ? Y : X;
        const std::array<std::size_t, 1> order{var};
        const auto& iv = var == X ? *xr : *yr;
        std::optional<std::vector<Rat>> lo, hi;
        if (iv.lo) lo = sys.lexmin(order);
        if (iv.hi) hi = sys.lexmax(order);
        if (!lo && !hi) throw InconsistencyError("unbounded line of circle centers");

        CircleFamily fam;
        if (lo && hi) {
            fam.start = {(*lo)[X], (*lo)[Y]};
            fam.start_radius = (*lo)[R];
            fam.direction = Point{(*hi)[X], (*hi)[Y]} - fam.start;
            fam.radius_rate = (*hi)[R] - (*lo)[R];
            fam.t_max = Rat(1);
        } else {
            const auto& end = lo ? *lo : *hi;
            linear::System probe = sys;
            // Step one unit into the unbounded side to read off the direction.
            probe.fix(var, end[var] + (lo ? Rat(1) : Rat(-1)));
            const auto further = probe.witness();
            if (!further) throw InconsistencyError("circle-center ray probe failed");
            fam.start = {end[X], end[Y]};
            fam.start_radius = end[R];
            const Vec2 step = Point{(*further)[X], (*further)[Y]} - fam.start;
            const Rat s = max(abs(step.x), abs(step.y));
            fam.direction = detail::unit_linf(step);
            fam.radius_rate = ((*further)[R] - end[R]) / s;
        }
        const Point a = fam.center_at(Rat(0));
        const Point b = fam.center_at(fam.t_max.value_or(Rat(1)));
        if (!detail::equidistant(a, fam.radius_at(Rat(0)), pts) ||
            !detail::equidistant(b, fam.radius_at(fam.t_max.value_or(Rat(1))), pts))
            throw InconsistencyError("circle family fails validation");
        if (std::find(out.families.begin(), out.families.end(), fam) == out.families.end())
            out.families.push_back(std::move(fam));
    }

    detail::merge_families(out.families);
    std::vector<TaxiCircle> iso;
    for (auto& c : out.isolated) {
        if (std::find(iso.begin(), iso.end(), c) != iso.end()) continue;
        if (std::any_of(out.families.begin(), out.families.end(), [&](const auto& f) { return f.contains(c); }))
            continue;
        iso.push_back(c);
    }
    out.isolated = std::move(iso);
    return out;
}

}  // namespace taxi
