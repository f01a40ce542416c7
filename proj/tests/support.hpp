#pragma once

// Reference computations used by the tests. None of them call the library
// routine they are used to check.

#include "taxi/geometry.hpp"
#include "taxi/inscription.hpp"
#include "taxi/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace ref {

using taxi::Point;
using taxi::Rat;
using taxi::Vec2;

/// Exact L1 distance from p to {a + t d : t in [lo, hi]} (hi empty = unbounded).
/// The objective is convex piecewise linear in t with kinks where either
/// coordinate difference vanishes, so scanning kinks and ends suffices.
inline Rat dist_param(const Point& p, const Point& a, const Vec2& d, const Rat& lo, const std::optional<Rat>& hi) {
    std::vector<Rat> ts{lo};
    if (hi) ts.push_back(*hi);
    if (!d.x.is_zero()) ts.push_back((p.x - a.x) / d.x);
    if (!d.y.is_zero()) ts.push_back((p.y - a.y) / d.y);
    std::optional<Rat> best;
    for (Rat t : ts) {
        if (t < lo) t = lo;
        if (hi && *hi < t) t = *hi;
        const Rat v = taxi::abs(a.x + t * d.x - p.x) + taxi::abs(a.y + t * d.y - p.y);
        if (!best || v < *best) best = v;
    }
    return *best;
}

inline Rat dist_segment(const Point& p, const Point& a, const Point& b) { return dist_param(p, a, b - a, Rat(0), Rat(1)); }
inline Rat dist_ray(const Point& p, const Point& from, const Point& toward) {
    return dist_param(p, from, toward - from, Rat(0), std::nullopt);
}

/// Floating check of a convex 1-D minimum: dense sampling on [lo, hi] then
/// golden-section refinement. f is 2-Lipschitz in t for unit-L1 directions.
inline double sampled_min(const std::function<double(double)>& f, double lo, double hi, int samples = 4001) {
    double best_t = lo, best = f(lo);
    for (int i = 1; i <= samples; ++i) {
        const double t = lo + (hi - lo) * i / samples;
        const double v = f(t);
        if (v < best) best = v, best_t = t;
    }
    const double step = (hi - lo) / samples;
    double a = std::max(lo, best_t - step), b = std::min(hi, best_t + step);
    const double g = (std::sqrt(5.0) - 1) / 2;
    for (int it = 0; it < 200; ++it) {
        const double c = b - g * (b - a), d = a + g * (b - a);
        if (f(c) < f(d))
            b = d;
        else
            a = c;
    }
    return std::min(best, f((a + b) / 2));
}

/// Angle classification by polar angles: a diagonal direction is strictly
/// inside the convex angle when it is strictly between the two ray angles
/// measured the short way round.
inline taxi::AngleClass classify_by_atan2(const Vec2& u, const Vec2& w) {
    const double au = std::atan2(u.y.to_double(), u.x.to_double());
    const double aw = std::atan2(w.y.to_double(), w.x.to_double());
    auto norm = [](double x) {
        while (x < 0) x += 2 * std::numbers::pi;
        while (x >= 2 * std::numbers::pi) x -= 2 * std::numbers::pi;
        return x;
    };
    double start = au, span = norm(aw - au);
    if (span > std::numbers::pi) start = aw, span = 2 * std::numbers::pi - span;
    auto inside = [&](double dx, double dy) {
        const double off = norm(std::atan2(dy, dx) - start);
        return off > 1e-12 && off < span - 1e-12;
    };
    const bool plus = inside(1, 1) || inside(-1, -1);
    const bool minus = inside(1, -1) || inside(-1, 1);
    if (!plus && !minus) return taxi::AngleClass::CompletelyInscribed;
    if (plus && !minus) return taxi::AngleClass::StrictlyNegative;
    if (!plus && minus) return taxi::AngleClass::StrictlyPositive;
    return taxi::AngleClass::NotInscribed;
}

/// p strictly inside the triangle.
inline bool strictly_inside(const Point& p, const taxi::Triangle& t) {
    const int s0 = taxi::orientation(t[0], t[1], p), s1 = taxi::orientation(t[1], t[2], p),
              s2 = taxi::orientation(t[2], t[0], p);
    return (s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0);
}

/// d1 distance from p to the closed triangle region.
inline Rat dist_triangle(const Point& p, const taxi::Triangle& t) {
    if (strictly_inside(p, t)) return Rat(0);
    return taxi::min(dist_segment(p, t[0], t[1]), taxi::min(dist_segment(p, t[1], t[2]), dist_segment(p, t[2], t[0])));
}

/// Excircle predicates for side i (opposite vertex i): tangent to the side and
/// to both rays from vertex i, and the open diamond misses the triangle.
inline bool excircle_ok(const taxi::Triangle& t, std::size_t i, const taxi::TaxiCircle& c) {
    const Point& V = t[i];
    const Point& P = t[i + 1];
    const Point& Q = t[i + 2];
    const Rat& r = c.radius();
    return dist_segment(c.center(), P, Q) == r && dist_ray(c.center(), V, P) == r && dist_ray(c.center(), V, Q) == r &&
           dist_triangle(c.center(), t) == r;
}

/// L1 radius of the smallest diamond about `center` containing `inner`.
inline Rat enclose_by_vertices(const Point& center, const taxi::TaxiCircle& inner) {
    Rat best(0);
    for (const auto& v : inner.vertices()) best = taxi::max(best, taxi::d1(center, v));
    return best;
}

inline taxi::Triangle random_triangle(taxi::gen::Engine& g) { return taxi::gen::triangle(g); }

}  // namespace ref
