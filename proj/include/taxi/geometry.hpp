#pragma once

#include "taxi/error.hpp"
#include "taxi/rational.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace taxi {

struct Vec2 {
    Rat x, y;
    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator-(const Vec2& v) { return {-v.x, -v.y}; }
    [[nodiscard]] bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

struct Point {
    Rat x, y;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
    friend Vec2 operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator+(const Point& p, const Vec2& v) { return {p.x + v.x, p.y + v.y}; }
    friend Point operator-(const Point& p, const Vec2& v) { return {p.x - v.x, p.y - v.y}; }
    friend std::ostream& operator<<(std::ostream& os, const Point& p) {
        return os << '(' << p.x << ',' << p.y << ')';
    }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Orientation of (a, b, c): +1 counter-clockwise, -1 clockwise, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a).sign(); }

inline Rat d1(const Point& p, const Point& q) { return abs(p.x - q.x) + abs(p.y - q.y); }
inline Rat linf(const Point& p, const Point& q) { return max(abs(p.x - q.x), abs(p.y - q.y)); }

/// Chebyshev transform (x, y) -> (x + y, x - y); maps d1 onto L-infinity.
inline Point cheb(const Point& p) { return {p.x + p.y, p.x - p.y}; }
inline Point cheb_inverse(const Point& q) { return {(q.x + q.y) / Rat(2), (q.x - q.y) / Rat(2)}; }

enum class SlopeKind { Shallow, Diagonal, Steep };

/// Slope of a line, with vertical lines as a first-class variant.
class Slope {
public:
    static Slope vertical() { return Slope(); }
    static Slope finite(Rat m) { return Slope(std::move(m)); }
    static Slope of(const Vec2& dir) {
        if (dir.is_zero()) throw PreconditionError("slope of zero vector");
        return dir.x.is_zero() ? vertical() : finite(dir.y / dir.x);
    }
    static Slope through(const Point& p, const Point& q) { return of(q - p); }

    [[nodiscard]] bool is_vertical() const { return !m_.has_value(); }
    /// Throws for vertical slopes; callers branch on is_vertical() first.
    [[nodiscard]] const Rat& value() const {
        if (!m_) throw PreconditionError("vertical slope has no finite value");
        return *m_;
    }
    [[nodiscard]] SlopeKind kind() const {
        if (!m_) return SlopeKind::Steep;
        const Rat a = abs(*m_);
        if (a < Rat(1)) return SlopeKind::Shallow;
        return a == Rat(1) ? SlopeKind::Diagonal : SlopeKind::Steep;
    }
    [[nodiscard]] std::string str() const { return m_ ? m_->str() : std::string("vertical"); }
    friend bool operator==(const Slope&, const Slope&) = default;

private:
    Slope() = default;
    explicit Slope(Rat m) : m_(std::move(m)) {}
    std::optional<Rat> m_;
};

/// Points anchor + t*dir with t ranging over all of R, [0, inf) or [0, 1].
struct Line {
    Point anchor;
    Vec2 dir;
};
struct Ray {
    Point origin;
    Vec2 dir;
};
struct Segment {
    Point p, q;
};
using LinearObject = std::variant<Line, Ray, Segment>;

inline Line line_through(const Point& p, const Point& q) { return {p, q - p}; }
inline Ray ray_through(const Point& from, const Point& toward) { return {from, toward - from}; }

namespace detail {

struct Param {
    Point base;
    Vec2 dir;
    std::optional<Rat> lo, hi;
};

inline Param param_of(const LinearObject& obj) {
    return std::visit(
        [](const auto& o) -> Param {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, Line>) {
                if (o.dir.is_zero()) throw PreconditionError("line with zero direction");
                return {o.anchor, o.dir, std::nullopt, std::nullopt};
            } else if constexpr (std::is_same_v<T, Ray>) {
                if (o.dir.is_zero()) throw PreconditionError("ray with zero direction");
                return {o.origin, o.dir, Rat(0), std::nullopt};
            } else {
                if (o.p == o.q) throw PreconditionError("segment with coincident endpoints");
                return {o.p, o.q - o.p, Rat(0), Rat(1)};
            }
        },
        obj);
}

// d1(p, base + t*dir) is convex and piecewise linear in t with kinks where
// one coordinate difference vanishes, so its minimum over the parameter
// range sits on a kink or a range endpoint.
inline std::vector<Rat> candidate_params(const Point& p, const Param& pr) {
    std::vector<Rat> ts;
    auto clamp_push = [&](Rat t) {
        if (pr.lo && t < *pr.lo) t = *pr.lo;
        if (pr.hi && t > *pr.hi) t = *pr.hi;
        ts.push_back(std::move(t));
    };
    if (!pr.dir.x.is_zero()) clamp_push((p.x - pr.base.x) / pr.dir.x);
    if (!pr.dir.y.is_zero()) clamp_push((p.y - pr.base.y) / pr.dir.y);
    if (pr.lo) ts.push_back(*pr.lo);
    if (pr.hi) ts.push_back(*pr.hi);
    return ts;
}

}  // namespace detail

/// A closest point of obj to p in the L1 metric (ties broken by the first
/// candidate found).
inline Point nearest_point(const Point& p, const LinearObject& obj) {
    const auto pr = detail::param_of(obj);
    std::optional<Point> best;
    std::optional<Rat> best_d;
    for (const auto& t : detail::candidate_params(p, pr)) {
        Point q = pr.base + t * pr.dir;
        Rat d = d1(p, q);
        if (!best_d || d < *best_d) {
            best_d = d;
            best = q;
        }
    }
    return *best;
}

inline Rat dist_to(const Point& p, const LinearObject& obj) { return d1(p, nearest_point(p, obj)); }

/// The set of points at d1-distance `radius` from `center`: a diamond whose
/// sides have slope +1 or -1.
class TaxiCircle {
public:
    TaxiCircle(Point center, Rat radius) : center_(std::move(center)), radius_(std::move(radius)) {
        if (radius_.sign() <= 0) throw PreconditionError("taxicab circle radius must be positive");
    }
    [[nodiscard]] const Point& center() const { return center_; }
    [[nodiscard]] const Rat& radius() const { return radius_; }

    /// Right, top, left, bottom.
    [[nodiscard]] std::array<Point, 4> vertices() const {
        const auto& c = center_;
        const auto& r = radius_;
        return {Point{c.x + r, c.y}, Point{c.x, c.y + r}, Point{c.x - r, c.y}, Point{c.x, c.y - r}};
    }
    [[nodiscard]] bool on_boundary(const Point& p) const { return d1(center_, p) == radius_; }
    [[nodiscard]] bool contains_open(const Point& p) const { return d1(center_, p) < radius_; }

    friend bool operator==(const TaxiCircle&, const TaxiCircle&) = default;

private:
    Point center_;
    Rat radius_;
};

/// Touches obj without crossing it. A slope +-1 object lying along a side of
/// the diamond counts as tangent.
inline bool tangent(const TaxiCircle& c, const LinearObject& obj) { return dist_to(c.center(), obj) == c.radius(); }

/// Maximum of d1(outer_center, p) over the inner circle; a circle about
/// outer_center of radius R encloses `inner` iff this is <= R and is
/// internally tangent to it iff it equals R.
inline Rat enclose_dist(const Point& outer_center, const TaxiCircle& inner) {
    return d1(outer_center, inner.center()) + inner.radius();
}

/// Non-degenerate triangle, vertices in caller order.
struct Triangle {
    std::array<Point, 3> v;

    [[nodiscard]] const Point& operator[](std::size_t i) const { return v[i % 3]; }

    /// Throws InvalidTriangle on duplicate or collinear vertices.
    void validate() const {
        if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) throw InvalidTriangle("duplicate triangle vertices");
        if (orientation(v[0], v[1], v[2]) == 0) throw InvalidTriangle("collinear triangle vertices");
    }
    static Triangle checked(Point a, Point b, Point c) {
        Triangle t{{std::move(a), std::move(b), std::move(c)}};
        t.validate();
        return t;
    }
    friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Interiors of two convex polygons are disjoint (touching allowed).
/// Separating-axis test over the edge normals of both polygons.
inline bool interiors_disjoint(std::span<const Point> a, std::span<const Point> b) {
    auto separated_by_edges = [](std::span<const Point> poly, std::span<const Point> other) {
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Vec2 e = poly[(i + 1) % poly.size()] - poly[i];
            const Vec2 n{-e.y, e.x};
            std::optional<Rat> amin, amax, bmin, bmax;
            for (const auto& p : poly) {
                Rat s = dot(n, p - Point{});
                if (!amin || s < *amin) amin = s;
                if (!amax || s > *amax) amax = s;
            }
            for (const auto& p : other) {
                Rat s = dot(n, p - Point{});
                if (!bmin || s < *bmin) bmin = s;
                if (!bmax || s > *bmax) bmax = s;
            }
            if (*amax <= *bmin || *bmax <= *amin) return true;
        }
        return false;
    };
    return separated_by_edges(a, b) || separated_by_edges(b, a);
}

}  // namespace taxi
