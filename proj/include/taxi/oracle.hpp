#pragma once

// Brute-force validators. They search a square region with an adaptive grid
// (best-first, Lipschitz pruning) in floating point, then try to turn
// promising cells into exact rational witnesses with small Cramer solves.
// Only the exact-core primitives are shared with the solvers.

#include "taxi/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <variant>
#include <vector>

namespace taxi::oracle {

struct SearchRegion {
    Point lo, hi;
    /// "xy" for centers in the plane, "uv" for Chebyshev coordinates.
    std::string frame = "xy";

    [[nodiscard]] bool contains(const Point& p) const { return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y; }
};

struct ExistsWitness {
    TaxiCircle circle;
    Rat residual;  // always zero
    std::size_t cells = 0;
};

struct CertifiedNone {
    SearchRegion region;
    Rat inflate, pitch;
    std::size_t cells = 0;
};

struct Unknown {
    double best_residual = 0;
    std::size_t cells = 0;
    SearchRegion region;
    std::string reason;
};

using OracleVerdict = std::variant<ExistsWitness, CertifiedNone, Unknown>;

inline bool is_witness(const OracleVerdict& v) { return std::holds_alternative<ExistsWitness>(v); }
inline bool is_none(const OracleVerdict& v) { return std::holds_alternative<CertifiedNone>(v); }
inline bool is_unknown(const OracleVerdict& v) { return std::holds_alternative<Unknown>(v); }

inline constexpr std::size_t kDefaultMaxCells = 400000;

inline Rat default_inflate() { return Rat(8); }
inline Rat default_pitch(const Rat& diameter) { return diameter / Rat(256); }

namespace detail {

struct DPoint {
    double x, y;
};

inline DPoint to_d(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }
inline double d1d(DPoint p, DPoint q) { return std::abs(p.x - q.x) + std::abs(p.y - q.y); }

// An affine form alpha x + beta y + gamma.
struct Form {
    Rat alpha, beta, gamma;
    [[nodiscard]] Rat at(const Point& p) const { return alpha * p.x + beta * p.y + gamma; }
    friend Form operator-(const Form& f, const Form& g) { return {f.alpha - g.alpha, f.beta - g.beta, f.gamma - g.gamma}; }
};

// Solves f(p) = 0 and g(p) = 0; when singular, pins x to `x_hint`.
inline std::optional<Point> solve2(const Form& f, const Form& g, const Rat& x_hint) {
    const Rat det = f.alpha * g.beta - f.beta * g.alpha;
    if (!det.is_zero()) {
        const Rat x = (-f.gamma * g.beta + f.beta * g.gamma) / det;
        const Rat y = (-f.alpha * g.gamma + f.gamma * g.alpha) / det;
        return Point{x, y};
    }
    // Rank one or zero: fix x and solve for y from whichever row has a y term.
    const Form* row = !f.beta.is_zero() ? &f : (!g.beta.is_zero() ? &g : nullptr);
    if (!row) return std::nullopt;
    const Rat y = -(row->alpha * x_hint + row->gamma) / row->beta;
    const Point p{x_hint, y};
    if (!f.at(p).is_zero() || !g.at(p).is_zero()) return std::nullopt;
    return p;
}

struct Cell {
    double key;  // violation at the center over the cell's Lipschitz radius
    double f;
    int level;
    std::int64_t ix, iy;
    bool operator>(const Cell& o) const {
        if (key != o.key) return key > o.key;
        if (level != o.level) return level < o.level;
        if (ix != o.ix) return ix > o.ix;
        return iy > o.iy;
    }
};

// Cell center and corners, in floating point and (lazily) exactly.
class Samples {
public:
    Samples(const Point& lo, const Rat& side0, int level, std::int64_t ix, std::int64_t iy, double lo_x, double lo_y,
            double side)
        : lo_(lo), side0_(side0), level_(level), ix_(ix), iy_(iy) {
        static constexpr std::array<std::array<double, 2>, 5> kOffsets{{{0.5, 0.5}, {0, 0}, {0, 1}, {1, 0}, {1, 1}}};
        for (std::size_t i = 0; i < 5; ++i)
            d_[i] = {lo_x + (static_cast<double>(ix) + kOffsets[i][0]) * side,
                     lo_y + (static_cast<double>(iy) + kOffsets[i][1]) * side};
    }
    [[nodiscard]] static constexpr std::size_t size() { return 5; }
    [[nodiscard]] DPoint approx(std::size_t i) const { return d_[i]; }
    [[nodiscard]] Point exact(std::size_t i) const {
        static const std::array<std::array<Rat, 2>, 5> kOffsets{
            {{Rat(1, 2), Rat(1, 2)}, {Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}}};
        const mpz_class scale = mpz_class(1) << level_;
        const Rat s(mpq_class(side0_.raw() / scale));
        return {lo_.x + (Rat(static_cast<long>(ix_)) + kOffsets[i][0]) * s,
                lo_.y + (Rat(static_cast<long>(iy_)) + kOffsets[i][1]) * s};
    }

private:
    Point lo_;
    Rat side0_;
    int level_;
    std::int64_t ix_, iy_;
    std::array<DPoint, 5> d_;
};

// Remembers which sign patterns were already solved. Non-singular patterns
// have a single candidate and are tried once; singular ones pin a
// coordinate to the sample and get a bounded number of retries.
class PatternMemo {
public:
    bool should_try(const std::vector<int>& key) {
        auto [it, fresh] = seen_.try_emplace(key, 0);
        if (fresh) return true;
        return it->second > 0 && it->second < kSingularRetries;
    }
    void record(const std::vector<int>& key, bool singular) {
        auto& n = seen_[key];
        n = singular ? n + 1 : 0;
    }

private:
    static constexpr int kSingularRetries = 64;
    std::map<std::vector<int>, int> seen_;
};

// Generic best-first branch and bound. `eval(x, y)` gives the violation at
// a point; `prunable(level, ix, iy, side)` rejects cells that cannot hold a
// solution for structural reasons; `lipschitz_radius(side)` bounds how much
// the violation can drop inside a cell of that side; `refine(samples)`
// attempts an exact witness from the cell's sample points.
template <class Eval, class Prunable, class Radius, class Refine>
OracleVerdict search(const SearchRegion& region, const Rat& inflate, const Rat& pitch, double margin, Eval eval,
                     Prunable prunable, Radius lipschitz_radius, Refine refine, std::size_t max_cells) {
    const Rat side0 = region.hi.x - region.lo.x;
    int finest = 0;
    for (Rat s = side0, target = pitch / Rat(2); target < s; s /= Rat(2)) ++finest;
    const double lo_x = region.lo.x.to_double(), lo_y = region.lo.y.to_double();
    const double side0_d = side0.to_double();
    auto side_at = [&](int level) { return std::ldexp(side0_d, -level); };

    std::priority_queue<Cell, std::vector<Cell>, std::greater<>> open;
    auto push = [&](int level, std::int64_t ix, std::int64_t iy) {
        const double s = side_at(level);
        if (prunable(level, ix, iy, s)) return;
        const double f = eval(lo_x + (static_cast<double>(ix) + 0.5) * s, lo_y + (static_cast<double>(iy) + 0.5) * s);
        open.push({f / lipschitz_radius(s), f, level, ix, iy});
    };
    push(0, 0, 0);

    std::size_t visited = 0;
    bool unresolved = false;
    double best = std::numeric_limits<double>::infinity();
    while (!open.empty()) {
        const Cell cell = open.top();
        open.pop();
        if (++visited > max_cells) return Unknown{best, visited, region, "cell budget exhausted"};
        best = std::min(best, cell.f);
        const double s = side_at(cell.level);
        if (cell.f > lipschitz_radius(s) + margin) continue;

        const Samples samples(region.lo, side0, cell.level, cell.ix, cell.iy, lo_x, lo_y, s);
        if (auto w = refine(samples)) {
            std::get<ExistsWitness>(*w).cells = visited;
            return *w;
        }
        if (cell.level >= finest) {
            unresolved = true;
            continue;
        }
        for (int dx = 0; dx <= 1; ++dx)
            for (int dy = 0; dy <= 1; ++dy) push(cell.level + 1, 2 * cell.ix + dx, 2 * cell.iy + dy);
    }
    if (unresolved) return Unknown{best, visited, region, "finest cells not resolved"};
    return CertifiedNone{region, inflate, pitch, visited};
}

inline SearchRegion square_around(const std::vector<Point>& pts, const Rat& half, std::string frame) {
    Rat xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const auto& p : pts) {
        xmin = min(xmin, p.x);
        xmax = max(xmax, p.x);
        ymin = min(ymin, p.y);
        ymax = max(ymax, p.y);
    }
    const Point c{(xmin + xmax) / Rat(2), (ymin + ymax) / Rat(2)};
    return {{c.x - half, c.y - half}, {c.x + half, c.y + half}, std::move(frame)};
}

inline double scale_of(const SearchRegion& r) {
    return std::max({std::abs(r.lo.x.to_double()), std::abs(r.lo.y.to_double()), std::abs(r.hi.x.to_double()),
                     std::abs(r.hi.y.to_double())});
}

inline int sgn_at(const Rat& v) { return v.sign() < 0 ? -1 : 1; }
inline int sgn_at(double v) { return v < 0 ? -1 : 1; }

// a x + b y + c = 0
struct DLine {
    double a, b, c;
};

// Lower bound for max_i g_i - min_j g_j over the closed cell when every g_i
// is affine on each face of the arrangement of `kinks`. Each g_i - g_j then
// attains its minimum over the cell at an arrangement vertex: a cell corner,
// a kink crossing a cell edge, or two kinks crossing inside the cell.
// With `keep`, the bound is over the part of the cell where keep holds; keep
// must describe an intersection of half-planes whose lines are in `kinks`.
template <class G, class Keep>
double piecewise_affine_bound(G g, const std::vector<DLine>& kinks, double x0, double y0, double side, double eps,
                              Keep keep) {
    const double x1 = x0 + side, y1 = y0 + side;
    auto inside = [&](double x, double y) { return x >= x0 - eps && x <= x1 + eps && y >= y0 - eps && y <= y1 + eps; };
    std::vector<DPoint> pts{{x0, y0}, {x1, y0}, {x0, y1}, {x1, y1}};
    std::vector<const DLine*> active;
    for (const auto& l : kinks) {
        const double v00 = l.a * x0 + l.b * y0 + l.c, v10 = l.a * x1 + l.b * y0 + l.c;
        const double v01 = l.a * x0 + l.b * y1 + l.c, v11 = l.a * x1 + l.b * y1 + l.c;
        if (std::min({v00, v10, v01, v11}) > eps || std::max({v00, v10, v01, v11}) < -eps) continue;
        active.push_back(&l);
        if (l.b != 0) {
            for (double x : {x0, x1}) {
                const double y = -(l.a * x + l.c) / l.b;
                if (inside(x, y)) pts.push_back({x, std::clamp(y, y0, y1)});
            }
        }
        if (l.a != 0) {
            for (double y : {y0, y1}) {
                const double x = -(l.b * y + l.c) / l.a;
                if (inside(x, y)) pts.push_back({std::clamp(x, x0, x1), y});
            }
        }
    }
    for (std::size_t i = 0; i < active.size(); ++i)
        for (std::size_t j = i + 1; j < active.size(); ++j) {
            const DLine& p = *active[i];
            const DLine& q = *active[j];
            const double det = p.a * q.b - p.b * q.a;
            if (det == 0) continue;
            const double x = (p.b * q.c - p.c * q.b) / det, y = (p.c * q.a - p.a * q.c) / det;
            if (inside(x, y)) pts.push_back({std::clamp(x, x0, x1), std::clamp(y, y0, y1)});
        }

    std::vector<std::array<double, 3>> at;
    at.reserve(pts.size());
    for (const auto& pt : pts)
        if (keep(pt.x, pt.y)) at.push_back({g(pt.x, pt.y, 0), g(pt.x, pt.y, 1), g(pt.x, pt.y, 2)});
    if (at.empty()) return std::numeric_limits<double>::infinity();
    double bound = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            double m = std::numeric_limits<double>::infinity();
            for (const auto& row : at) m = std::min(m, row[i] - row[j]);
            bound = std::max(bound, m);
        }
    return bound;
}

template <class G>
double piecewise_affine_bound(G g, const std::vector<DLine>& kinks, double x0, double y0, double side, double eps) {
    return piecewise_affine_bound(g, kinks, x0, y0, side, eps, [](double, double) { return true; });
}

}  // namespace detail

inline Rat diameter(const std::array<Point, 3>& p) {
    return max(d1(p[0], p[1]), max(d1(p[1], p[2]), d1(p[0], p[2])));
}

/// Circles through three points: minimises max_i d1(c, p_i) - min_i d1(c, p_i),
/// which is 2-Lipschitz in d1, over centers in the inflated box.
inline OracleVerdict oracle_circumcircle(const Point& p1, const Point& p2, const Point& p3, const Rat& inflate,
                                         const Rat& pitch, std::size_t max_cells = kDefaultMaxCells) {
    using namespace detail;
    const std::array<Point, 3> P{p1, p2, p3};
    const Rat D = diameter(P);
    const auto region = square_around({p1, p2, p3}, inflate * D, "xy");
    const std::array<DPoint, 3> Pd{to_d(p1), to_d(p2), to_d(p3)};
    const double margin = 1e-9 * (scale_of(region) + 1);

    auto eval = [&](double x, double y) {
        const DPoint c{x, y};
        const double a = d1d(c, Pd[0]), b = d1d(c, Pd[1]), e = d1d(c, Pd[2]);
        return std::max({a, b, e}) - std::min({a, b, e});
    };
    const double lo_x = region.lo.x.to_double(), lo_y = region.lo.y.to_double();
    // Each distance is affine off the lines x = p_i.x and y = p_i.y.
    std::vector<DLine> kinks;
    for (const auto& p : Pd) {
        kinks.push_back({1, 0, -p.x});
        kinks.push_back({0, 1, -p.y});
    }
    auto g = [&](double x, double y, std::size_t i) { return d1d({x, y}, Pd[i]); };
    auto prunable = [&](int, std::int64_t ix, std::int64_t iy, double side) {
        const double x0 = lo_x + static_cast<double>(ix) * side, y0 = lo_y + static_cast<double>(iy) * side;
        return piecewise_affine_bound(g, kinks, x0, y0, side, margin) > margin;
    };
    auto radius = [](double side) { return 2.0 * side; };

    PatternMemo memo;
    auto refine = [&](const Samples& samples) -> std::optional<OracleVerdict> {
        for (std::size_t k = 0; k < Samples::size(); ++k) {
            const DPoint sd = samples.approx(k);
            std::vector<int> key;
            for (std::size_t i = 0; i < 3; ++i) {
                key.push_back(sgn_at(sd.x - Pd[i].x));
                key.push_back(sgn_at(sd.y - Pd[i].y));
            }
            if (!memo.should_try(key)) continue;
            std::array<Form, 3> forms;
            for (std::size_t i = 0; i < 3; ++i) {
                const Rat sx(key[2 * i]), sy(key[2 * i + 1]);
                forms[i] = {sx, sy, -(sx * P[i].x + sy * P[i].y)};
            }
            const Form g = forms[0] - forms[1], h = forms[0] - forms[2];
            memo.record(key, (g.alpha * h.beta - g.beta * h.alpha).is_zero());
            const auto c = solve2(g, h, samples.exact(k).x);
            if (!c || !region.contains(*c)) continue;
            const Rat r = d1(*c, P[0]);
            if (r.sign() > 0 && d1(*c, P[1]) == r && d1(*c, P[2]) == r)
                return OracleVerdict{ExistsWitness{TaxiCircle{*c, r}, Rat(0)}};
        }
        return std::nullopt;
    };
    return search(region, inflate, pitch, margin, eval, prunable, radius, refine, max_cells);
}

namespace detail {

// L1 distance from a point to base + t*dir, t in [lo, hi] (hi < 0 meaning unbounded).
struct DObject {
    DPoint base, dir;
    double lo, hi;
    bool bounded;
};

inline double dist_d(DPoint p, const DObject& o) {
    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](double t) {
        if (t < o.lo) t = o.lo;
        if (o.bounded && t > o.hi) t = o.hi;
        best = std::min(best, d1d(p, {o.base.x + t * o.dir.x, o.base.y + t * o.dir.y}));
    };
    if (o.dir.x != 0) consider((p.x - o.base.x) / o.dir.x);
    if (o.dir.y != 0) consider((p.y - o.base.y) / o.dir.y);
    consider(o.lo);
    if (o.bounded) consider(o.hi);
    return best;
}

// Halfplane a x + b y + c >= 0.
struct Half {
    Rat a, b, c;
    double ad, bd, cd;
};

inline Half half_toward(const Point& p, const Point& q, const Point& ref) {
    const Vec2 d = q - p;
    Rat a = -d.y, b = d.x, c = d.y * p.x - d.x * p.y;
    if ((a * ref.x + b * ref.y + c).sign() < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    return {a, b, c, a.to_double(), b.to_double(), c.to_double()};
}

}  // namespace detail

/// Excircle for the side opposite vertex index(side) (0, 1, 2): centers in the
/// region W bounded by the two rays of the opposite angle and the far side
/// of the side's line; violation max_i dist_i - min_i dist_i is 2-Lipschitz.
inline OracleVerdict oracle_excircle(const Point& A, const Point& B, const Point& C, std::size_t side,
                                     const Rat& inflate, const Rat& pitch,
                                     std::size_t max_cells = kDefaultMaxCells) {
    using namespace detail;
    const std::array<Point, 3> T{A, B, C};
    const Point& V = T[side % 3];
    const Point& P = T[(side + 1) % 3];
    const Point& Q = T[(side + 2) % 3];
    const std::array<LinearObject, 3> objs{ray_through(V, P), ray_through(V, Q), Segment{P, Q}};
    const std::array<DObject, 3> objs_d{DObject{to_d(V), to_d(Point{} + (P - V)), 0.0, 0.0, false},
                                        DObject{to_d(V), to_d(Point{} + (Q - V)), 0.0, 0.0, false},
                                        DObject{to_d(P), to_d(Point{} + (Q - P)), 0.0, 1.0, true}};
    // W: inside the angle at V and beyond line PQ.
    const std::array<Half, 3> W{half_toward(V, P, Q), half_toward(V, Q, P), half_toward(P, Q, V)};
    const Half beyond{-W[2].a, -W[2].b, -W[2].c, -W[2].ad, -W[2].bd, -W[2].cd};
    const std::array<Half, 3> walls{W[0], W[1], beyond};

    const Rat D = diameter(T);
    const auto region = square_around({A, B, C}, inflate * D, "xy");
    const double margin = 1e-9 * (scale_of(region) + 1);
    const double lo_x = region.lo.x.to_double(), lo_y = region.lo.y.to_double();

    auto eval = [&](double x, double y) {
        const DPoint c{x, y};
        const double a = dist_d(c, objs_d[0]), b = dist_d(c, objs_d[1]), e = dist_d(c, objs_d[2]);
        return std::max({a, b, e}) - std::min({a, b, e});
    };
    // The distances are affine off the side lines and off the horizontal and
    // vertical lines through the vertices.
    std::vector<DLine> kinks;
    for (const auto& [p, q] : {std::pair{V, P}, std::pair{V, Q}, std::pair{P, Q}}) {
        const DPoint pd = to_d(p), qd = to_d(q);
        kinks.push_back({-(qd.y - pd.y), qd.x - pd.x, (qd.y - pd.y) * pd.x - (qd.x - pd.x) * pd.y});
    }
    for (const auto& p : T) {
        const DPoint pd = to_d(p);
        kinks.push_back({1, 0, -pd.x});
        kinks.push_back({0, 1, -pd.y});
    }
    // The walls of W are side lines, so they are already among the kinks.
    auto prunable = [&](int, std::int64_t ix, std::int64_t iy, double side_len) {
        const double x0 = lo_x + static_cast<double>(ix) * side_len, y0 = lo_y + static_cast<double>(iy) * side_len;
        for (const auto& h : walls) {
            bool all_out = true;
            for (int cx = 0; cx <= 1 && all_out; ++cx)
                for (int cy = 0; cy <= 1 && all_out; ++cy) {
                    const double v = h.ad * (x0 + cx * side_len) + h.bd * (y0 + cy * side_len) + h.cd;
                    if (v >= -margin * (std::abs(h.ad) + std::abs(h.bd) + 1)) all_out = false;
                }
            if (all_out) return true;
        }
        auto g = [&](double x, double y, std::size_t i) { return dist_d({x, y}, objs_d[i]); };
        auto in_w = [&](double x, double y) {
            return std::all_of(walls.begin(), walls.end(), [&](const Half& h) {
                return h.ad * x + h.bd * y + h.cd >= -margin * (std::abs(h.ad) + std::abs(h.bd) + 1);
            });
        };
        return piecewise_affine_bound(g, kinks, x0, y0, side_len, margin, in_w) > margin;
    };
    auto radius = [](double side_len) { return 2.0 * side_len; };

    // Which piece of dist_to(., obj) is active around s: the interior of the
    // line (0), the start point (1) or the end point (2), plus its signs.
    auto local_key = [&](DPoint sd, std::size_t i, std::vector<int>& key) {
        const auto& o = objs_d[i];
        double best = std::numeric_limits<double>::infinity();
        int which = 0;
        auto consider = [&](double t, int kind) {
            const double d = d1d(sd, {o.base.x + t * o.dir.x, o.base.y + t * o.dir.y});
            if (d < best - 1e-12 * (1 + std::abs(d))) {
                best = d;
                which = kind;
            }
        };
        consider(0.0, 1);
        if (o.bounded) consider(1.0, 2);
        if (o.dir.x != 0) {
            const double t = (sd.x - o.base.x) / o.dir.x;
            if (t > 0 && (!o.bounded || t < 1)) consider(t, 0);
        }
        if (o.dir.y != 0) {
            const double t = (sd.y - o.base.y) / o.dir.y;
            if (t > 0 && (!o.bounded || t < 1)) consider(t, 0);
        }
        key.push_back(which);
        if (which != 0) {
            const DPoint q = which == 1 ? o.base : DPoint{o.base.x + o.dir.x, o.base.y + o.dir.y};
            key.push_back(sgn_at(sd.x - q.x));
            key.push_back(sgn_at(sd.y - q.y));
        } else {
            key.push_back(sgn_at(-o.dir.y * (sd.x - o.base.x) + o.dir.x * (sd.y - o.base.y)));
        }
    };
    // The affine form for a piece chosen by local_key; `at` indexes into key.
    auto local_form = [&](std::size_t i, const std::vector<int>& key, std::size_t& at) -> Form {
        const Point base = i == 2 ? P : V;
        const Point far = i == 0 ? P : Q;
        const int which = key[at++];
        if (which != 0) {
            const Point& q = which == 1 ? base : far;
            const Rat sx(key[at++]), sy(key[at++]);
            return {sx, sy, -(sx * q.x + sy * q.y)};
        }
        const Vec2 dir = far - base;
        const Rat a = -dir.y, b = dir.x, c = dir.y * base.x - dir.x * base.y;
        const Rat w = max(abs(a), abs(b));
        const Rat sg(key[at++]);
        return {sg * a / w, sg * b / w, sg * c / w};
    };

    auto verify = [&](const Point& c) -> std::optional<OracleVerdict> {
        if (!region.contains(c)) return std::nullopt;
        const Rat r = dist_to(c, objs[0]);
        if (r.sign() <= 0 || dist_to(c, objs[1]) != r || dist_to(c, objs[2]) != r) return std::nullopt;
        const TaxiCircle circle{c, r};
        for (const auto& v : circle.vertices())
            for (const auto& h : walls)
                if ((h.a * v.x + h.b * v.y + h.c).sign() < 0) return std::nullopt;
        if (!interiors_disjoint(circle.vertices(), T)) return std::nullopt;
        return OracleVerdict{ExistsWitness{circle, Rat(0)}};
    };

    PatternMemo memo;
    auto refine = [&](const Samples& samples) -> std::optional<OracleVerdict> {
        for (std::size_t k = 0; k < Samples::size(); ++k) {
            std::vector<int> key;
            for (std::size_t i = 0; i < 3; ++i) local_key(samples.approx(k), i, key);
            if (!memo.should_try(key)) continue;
            std::array<Form, 3> f;
            std::size_t at = 0;
            for (std::size_t i = 0; i < 3; ++i) f[i] = local_form(i, key, at);
            const Form g = f[0] - f[1], h = f[0] - f[2];
            memo.record(key, (g.alpha * h.beta - g.beta * h.alpha).is_zero());
            if (auto c = solve2(g, h, samples.exact(k).x)) {
                if (auto w = verify(*c)) return w;
            }
        }
        return std::nullopt;
    };
    return search(region, inflate, pitch, margin, eval, prunable, radius, refine, max_cells);
}

/// Apollonius circles of three circles, searched in Chebyshev coordinates
/// where each circle is a square: g_i = Linf((u, v), (u_i, v_i)) + r_i and the
/// violation max g_i - min g_i is 2-Lipschitz in Linf.
inline OracleVerdict oracle_apollonius(const TaxiCircle& c1, const TaxiCircle& c2, const TaxiCircle& c3,
                                       const Rat& inflate, const Rat& pitch,
                                       std::size_t max_cells = kDefaultMaxCells) {
    using namespace detail;
    const std::array<TaxiCircle, 3> cs{c1, c2, c3};
    std::array<Point, 3> uv;
    std::array<DPoint, 3> uvd;
    std::array<double, 3> rd;
    std::vector<Point> extent;
    for (std::size_t i = 0; i < 3; ++i) {
        uv[i] = cheb(cs[i].center());
        uvd[i] = to_d(uv[i]);
        rd[i] = cs[i].radius().to_double();
        extent.push_back({uv[i].x - cs[i].radius(), uv[i].y - cs[i].radius()});
        extent.push_back({uv[i].x + cs[i].radius(), uv[i].y + cs[i].radius()});
    }
    Rat D(0);
    for (const auto& p : extent)
        for (const auto& q : extent) D = max(D, linf(p, q));
    const auto region = square_around(extent, inflate * D, "uv");
    const double margin = 1e-9 * (scale_of(region) + 1);
    const Rat r_max = max(cs[0].radius(), max(cs[1].radius(), cs[2].radius()));

    auto g = [&](double u, double v, std::size_t i) {
        return std::max(std::abs(u - uvd[i].x), std::abs(v - uvd[i].y)) + rd[i];
    };
    auto eval = [&](double u, double v) {
        const double a = g(u, v, 0), b = g(u, v, 1), e = g(u, v, 2);
        return std::max({a, b, e}) - std::min({a, b, e});
    };
    const double lo_u = region.lo.x.to_double(), lo_v = region.lo.y.to_double();
    // Each g_i is affine off the two diagonals through (u_i, v_i).
    std::vector<DLine> kinks;
    for (const auto& c : uvd) {
        kinks.push_back({1, -1, c.y - c.x});
        kinks.push_back({1, 1, -c.x - c.y});
    }
    auto gi = [&](double u, double v, std::size_t i) { return g(u, v, i); };
    auto prunable = [&](int, std::int64_t ix, std::int64_t iy, double side_len) {
        const double u0 = lo_u + static_cast<double>(ix) * side_len, v0 = lo_v + static_cast<double>(iy) * side_len;
        return piecewise_affine_bound(gi, kinks, u0, v0, side_len, margin) > margin;
    };
    auto radius = [](double side_len) { return side_len; };

    PatternMemo memo;
    auto refine = [&](const Samples& samples) -> std::optional<OracleVerdict> {
        for (std::size_t k = 0; k < Samples::size(); ++k) {
            const DPoint sd = samples.approx(k);
            std::vector<int> key;
            for (std::size_t i = 0; i < 3; ++i) {
                const double du = sd.x - uvd[i].x, dv = sd.y - uvd[i].y;
                const bool on_u = std::abs(dv) <= std::abs(du);
                key.push_back(on_u ? 0 : 1);
                key.push_back(sgn_at(on_u ? du : dv));
            }
            if (!memo.should_try(key)) continue;
            std::array<Form, 3> f;
            for (std::size_t i = 0; i < 3; ++i) {
                const Rat sg(key[2 * i + 1]);
                if (key[2 * i] == 0)
                    f[i] = {sg, Rat(0), cs[i].radius() - sg * uv[i].x};
                else
                    f[i] = {Rat(0), sg, cs[i].radius() - sg * uv[i].y};
            }
            const Form a = f[0] - f[1], b = f[0] - f[2];
            memo.record(key, (a.alpha * b.beta - a.beta * b.alpha).is_zero());
            const auto w = solve2(a, b, samples.exact(k).x);
            if (!w || !region.contains(*w)) continue;
            const Point center = cheb_inverse(*w);
            const Rat R = enclose_dist(center, cs[0]);
            if (!(r_max < R) || enclose_dist(center, cs[1]) != R || enclose_dist(center, cs[2]) != R) continue;
            return OracleVerdict{ExistsWitness{TaxiCircle{center, R}, Rat(0)}};
        }
        return std::nullopt;
    };
    return search(region, inflate, pitch, margin, eval, prunable, radius, refine, max_cells);
}

}  // namespace taxi::oracle
