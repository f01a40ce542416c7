#pragma once

#include "taxi/error.hpp"
#include "taxi/geometry.hpp"
#include "taxi/inscription.hpp"
#include "taxi/isometry.hpp"
#include "taxi/linear_system.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace taxi {

/// Side a is opposite vertex 0 (A), side b opposite vertex 1, side c opposite vertex 2.
enum class Side { a = 0, b = 1, c = 2 };

inline constexpr std::array<Side, 3> kAllSides = {Side::a, Side::b, Side::c};

constexpr std::size_t index_of(Side s) { return static_cast<std::size_t>(s); }
constexpr char name_of(Side s) { return static_cast<char>('a' + static_cast<int>(s)); }
constexpr Side side_opposite(std::size_t vertex) { return static_cast<Side>(vertex % 3); }

/// The triangle in the normalised position used by the closed forms: the
/// completely inscribed angle at C = (0, 0), B on y = m_a x and A on
/// y = m_b x with both x > 0, and m_b < m_a, m_a > 0.
struct CanonicalTriangle {
    Point A, B, C;
    Slope m_a = Slope::vertical();  // side BC
    Slope m_b = Slope::vertical();  // side CA
    Slope m_c = Slope::vertical();  // side AB
    Isometry to_canonical;
    /// labels[k] is the input index of canonical vertex k (0 = A, 1 = B, 2 = C).
    std::array<std::size_t, 3> labels{};
    int completely_count = 0;

    [[nodiscard]] Triangle triangle() const { return Triangle{{A, B, C}}; }
};

namespace detail {

inline std::optional<CanonicalTriangle> frame_at(const Triangle& t, std::size_t ci, D4 g) {
    const Point& v = t[ci];
    const Isometry iso{g, -apply(g, v - Point{})};
    const Point p = iso.apply(t[ci + 1]);
    const Point q = iso.apply(t[ci + 2]);
    auto in_right_sector = [](const Point& r) { return r.x.sign() > 0 && abs(r.y) <= r.x; };
    if (!in_right_sector(p) || !in_right_sector(q)) return std::nullopt;
    const Rat sp = p.y / p.x;
    const Rat sq = q.y / q.x;
    const bool p_is_b = sq < sp;
    CanonicalTriangle ct;
    ct.B = p_is_b ? p : q;
    ct.A = p_is_b ? q : p;
    ct.C = Point{Rat(0), Rat(0)};
    ct.m_a = Slope::finite(p_is_b ? sp : sq);
    ct.m_b = Slope::finite(p_is_b ? sq : sp);
    if (ct.m_a.value().sign() <= 0) return std::nullopt;
    ct.m_c = Slope::through(ct.A, ct.B);
    ct.to_canonical = iso;
    ct.labels = {p_is_b ? (ci + 2) % 3 : (ci + 1) % 3, p_is_b ? (ci + 1) % 3 : (ci + 2) % 3, ci};
    return ct;
}

}  // namespace detail

/// Moves a triangle with one or two completely inscribed angles into the
/// canonical frame. With one, the frame with m_a >= |m_b| is preferred
/// (both reflections about y = 0 can qualify when m_b < 0). With two, C is a
/// completely inscribed endpoint of the diagonal side and m_a = 1.
inline CanonicalTriangle canonicalize(const Triangle& t) {
    const auto cls = classify_triangle(t);
    if (!cls.inscribed) throw PreconditionError("canonicalize: triangle is not inscribed");
    if (cls.completely_count == 3)
        throw PreconditionError("canonicalize: three completely inscribed angles have no canonical frame");
    if (cls.completely_count == 0) throw InconsistencyError("inscribed triangle without a completely inscribed angle");

    std::optional<CanonicalTriangle> fallback;
    for (std::size_t ci = 0; ci < 3; ++ci) {
        if (cls.angle[ci] != AngleClass::CompletelyInscribed) continue;
        for (D4 g : kAllD4) {
            auto ct = detail::frame_at(t, ci, g);
            if (!ct) continue;
            ct->completely_count = cls.completely_count;
            const Rat& ma = ct->m_a.value();
            const Rat& mb = ct->m_b.value();
            if (cls.completely_count == 2) {
                if (ma == Rat(1)) return *ct;
                continue;
            }
            if (!(ma < Rat(1)) || !(Rat(-1) < mb)) continue;
            if ((ma + mb).sign() >= 0) return *ct;
            if (!fallback) fallback = ct;
        }
    }
    if (fallback) return *fallback;
    throw InconsistencyError("no canonical frame found for an inscribed triangle");
}

enum class ComplementRule { NotInscribed, Minimal, TwoCompletely, ThreeCompletely };

constexpr std::string_view name_of(ComplementRule r) {
    switch (r) {
        case ComplementRule::NotInscribed: return "not_inscribed";
        case ComplementRule::Minimal: return "minimal";
        case ComplementRule::TwoCompletely: return "two_completely";
        case ComplementRule::ThreeCompletely: return "three_completely";
    }
    return "?";
}

struct FullComplementDecision {
    bool all_exist = false;
    ComplementRule rule = ComplementRule::NotInscribed;
    /// Whether each side (a, b, c) has an excircle.
    std::array<bool, 3> per_side{};
    TriangleClassification classification;
};

/// Decides from the angle classes alone whether all three excircles exist.
/// A side has no excircle when the opposite angle is not inscribed, or when
/// both its end angles are completely inscribed and it is not diagonal.
inline FullComplementDecision full_complement(const Triangle& t) {
    FullComplementDecision d;
    d.classification = classify_triangle(t);
    const auto& cls = d.classification;
    const auto completely = [&](std::size_t i) { return cls.angle[i % 3] == AngleClass::CompletelyInscribed; };

    for (std::size_t i = 0; i < 3; ++i) {
        const bool opposite_ok = cls.angle[i] != AngleClass::NotInscribed;
        const bool diagonal = Slope::through(t[i + 1], t[i + 2]).kind() == SlopeKind::Diagonal;
        d.per_side[i] = opposite_ok && !(completely(i + 1) && completely(i + 2) && !diagonal);
    }

    if (!cls.inscribed) {
        d.rule = ComplementRule::NotInscribed;
        d.all_exist = false;
    } else if (cls.completely_count == 1) {
        d.rule = ComplementRule::Minimal;
        d.all_exist = true;
    } else if (cls.completely_count == 3) {
        d.rule = ComplementRule::ThreeCompletely;
        d.all_exist = false;
    } else {
        d.rule = ComplementRule::TwoCompletely;
        int steep = 0, shallow = 0, diagonal = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            switch (Slope::through(t[i], t[i + 1]).kind()) {
                case SlopeKind::Steep: ++steep; break;
                case SlopeKind::Shallow: ++shallow; break;
                case SlopeKind::Diagonal: ++diagonal; break;
            }
        }
        d.all_exist = diagonal == 1 && steep == 1 && shallow == 1;
    }
    const bool every_side = std::all_of(d.per_side.begin(), d.per_side.end(), [](bool b) { return b; });
    if (every_side != d.all_exist) throw InconsistencyError("per-side excircle rule disagrees with the classification rule");
    return d;
}

/// Closed-form excircle for side AB of a minimally inscribed canonical
/// triangle. T1..T4 are the left, bottom, right and top vertices of the circle.
struct ExcircleSolution {
    Rat k, r;
    Point center;
    Point T1, T2, T3, T4;
};

inline ExcircleSolution excircle_opposite_closed_form(const CanonicalTriangle& ct) {
    if (ct.completely_count != 1) throw PreconditionError("closed form needs a minimally inscribed triangle");
    if (ct.m_c.is_vertical()) throw PreconditionError("closed form needs a finite m_c; use construct_excircle");
    const Rat& ma = ct.m_a.value();
    const Rat& mb = ct.m_b.value();
    const Rat& mc = ct.m_c.value();
    const Rat& xa = ct.A.x;
    const Rat& ya = ct.A.y;

    const Rat denom = ma + mb + ma * mc - mb * mc - Rat(2) * mc;
    if (denom.is_zero()) throw InconsistencyError("closed-form excircle: zero denominator");
    ExcircleSolution s;
    s.k = Rat(2) * (ya - xa * mc) / denom;
    if (s.k.sign() <= 0) throw InconsistencyError("closed-form excircle: non-positive k");
    const Rat half_k = s.k / Rat(2);
    s.r = half_k * (ma - mb);
    const Rat mid_y = half_k * (ma + mb);
    s.center = {s.k, mid_y};
    s.T1 = {s.k - s.r, mid_y};
    s.T2 = {s.k, mb * s.k};
    s.T3 = {s.k + s.r, mid_y};
    s.T4 = {s.k, ma * s.k};
    return s;
}

/// An excircle with the points where it meets the side and the two rays of
/// the opposite angle.
struct Excircle {
    Side side = Side::a;
    TaxiCircle circle{Point{Rat(0), Rat(0)}, Rat(1)};
    Point side_touch, ray1_touch, ray2_touch;
    Triangle triangle;
};

namespace detail {

struct SideGeometry {
    Point vertex;  // opposite the side
    Point p, q;    // side endpoints
};

inline SideGeometry side_geometry(const Triangle& t, Side s) {
    const std::size_t i = index_of(s);
    return {t[i], t[i + 1], t[i + 2]};
}

// Every vertex of the circle lies in the closed half-plane of line (a, b)
// that contains `ref`.
inline bool circle_on_side(const TaxiCircle& c, const Point& a, const Point& b, const Point& ref) {
    const int want = orientation(a, b, ref);
    const auto vs = c.vertices();
    return std::all_of(vs.begin(), vs.end(), [&](const Point& v) {
        const int o = orientation(a, b, v);
        return o == 0 || o == want;
    });
}

}  // namespace detail

/// Exact excircle test: tangent to the side segment and to both rays from
/// the opposite vertex, inside that vertex's angle, and clear of the
/// triangle's interior.
inline bool is_excircle(const Triangle& t, Side s, const TaxiCircle& c) {
    const auto g = detail::side_geometry(t, s);
    if (!tangent(c, Segment{g.p, g.q})) return false;
    if (!tangent(c, ray_through(g.vertex, g.p)) || !tangent(c, ray_through(g.vertex, g.q))) return false;
    if (!detail::circle_on_side(c, g.vertex, g.p, g.q) || !detail::circle_on_side(c, g.vertex, g.q, g.p)) return false;
    const auto vs = c.vertices();
    return interiors_disjoint(vs, t.v);
}

/// Every validated excircle for the side. Each of the three bounding lines
/// is touched by a slope +-1 side or a vertex of the diamond; which one is
/// fixed by the side of the line the center falls on, so the eight sign
/// hypotheses each give one exact linear system in (x, y, r).
inline std::vector<Excircle> excircle_candidates(const Triangle& t, Side s) {
    t.validate();
    const auto g = detail::side_geometry(t, s);

    struct LineEq {
        Rat a, b, c;  // a x + b y + c
    };
    auto line_of = [](const Point& p, const Point& q) {
        const Vec2 d = q - p;
        return LineEq{-d.y, d.x, d.y * p.x - d.x * p.y};
    };
    const std::array<LineEq, 3> lines = {line_of(g.vertex, g.p), line_of(g.vertex, g.q), line_of(g.p, g.q)};

    std::vector<Excircle> out;
    for (int pattern = 0; pattern < 8; ++pattern) {
        linear::System sys(3);
        for (std::size_t i = 0; i < 3; ++i) {
            const Rat sigma = (pattern >> i) & 1 ? Rat(-1) : Rat(1);
            const auto& l = lines[i];
            const Rat w = max(abs(l.a), abs(l.b));
            // sigma (a x + b y + c) = w r, i.e. the L1 distance to the line is r.
            sys.eq({sigma * l.a, sigma * l.b, -w}, -sigma * l.c);
            sys.ge({sigma * l.a, sigma * l.b, Rat(0)}, -sigma * l.c);
        }
        sys.gt({Rat(0), Rat(0), Rat(1)}, Rat(0));
        const auto sol = sys.witness();
        if (!sol) continue;
        TaxiCircle c{{(*sol)[0], (*sol)[1]}, (*sol)[2]};
        if (!is_excircle(t, s, c)) continue;
        if (std::any_of(out.begin(), out.end(), [&](const Excircle& e) { return e.circle == c; })) continue;
        Excircle e;
        e.side = s;
        e.circle = c;
        e.side_touch = nearest_point(c.center(), Segment{g.p, g.q});
        e.ray1_touch = nearest_point(c.center(), ray_through(g.vertex, g.p));
        e.ray2_touch = nearest_point(c.center(), ray_through(g.vertex, g.q));
        e.triangle = t;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const Excircle& x, const Excircle& y) {
        if (x.circle.radius() != y.circle.radius()) return x.circle.radius() < y.circle.radius();
        return x.circle.center() < y.circle.center();
    });
    return out;
}

inline std::optional<Excircle> construct_excircle(const Triangle& t, Side s) {
    auto all = excircle_candidates(t, s);
    if (all.empty()) return std::nullopt;
    return all.front();
}

/// The closed-form excircle mapped back into the input triangle's coordinates.
inline TaxiCircle closed_form_in_input_frame(const CanonicalTriangle& ct, const ExcircleSolution& s) {
    return ct.to_canonical.inverse().apply(TaxiCircle{s.center, s.r});
}

/// Side of the input triangle that the canonical side AB came from.
inline Side input_side_of_canonical_ab(const CanonicalTriangle& ct) { return side_opposite(ct.labels[2]); }

struct ConcurrencyReport {
    std::array<Point, 3> excenters;
    /// Intersections of cevian pairs (0,1), (1,2), (0,2); empty when parallel.
    std::array<std::optional<Point>, 3> intersections;
    bool concurrent = false;
};

namespace detail {

inline std::optional<Point> intersect_lines(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    const Vec2 r = p2 - p1;
    const Vec2 s = q2 - q1;
    const Rat den = cross(r, s);
    if (den.is_zero()) return std::nullopt;
    const Rat t = cross(q1 - p1, s) / den;
    return p1 + t * r;
}

}  // namespace detail

/// Lines from each vertex to the center of the excircle on the opposite side,
/// with their pairwise intersections. Exploratory; nothing is asserted.
inline ConcurrencyReport excenter_cevians(const Triangle& t) {
    ConcurrencyReport rep;
    for (Side s : kAllSides) {
        auto e = construct_excircle(t, s);
        if (!e) throw PreconditionError(std::string("no excircle on side ") + name_of(s));
        rep.excenters[index_of(s)] = e->circle.center();
    }
    constexpr std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto [i, j] = pairs[k];
        rep.intersections[k] = detail::intersect_lines(t[i], rep.excenters[i], t[j], rep.excenters[j]);
    }
    rep.concurrent = rep.intersections[0] && rep.intersections[1] && rep.intersections[2] &&
                     *rep.intersections[0] == *rep.intersections[1] && *rep.intersections[1] == *rep.intersections[2];
    return rep;
}

}  // namespace taxi
