#pragma once

#include "taxi/error.hpp"
#include "taxi/excircles.hpp"
#include "taxi/geometry.hpp"
#include "taxi/linear_system.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace taxi {

/// Canonical triangle with the given slopes: C at the origin, A = (x_a, m_b x_a),
/// B where y = m_a x meets the line through A of slope m_c.
inline Triangle realize_canonical(const Rat& m_a, const Rat& m_b, const Slope& m_c, const Rat& x_a = Rat(1)) {
    const Point A{x_a, m_b * x_a};
    Point B;
    if (m_c.is_vertical()) {
        B = {x_a, m_a * x_a};
    } else {
        const Rat& mc = m_c.value();
        if (mc == m_a) throw PreconditionError("side AB parallel to side BC");
        const Rat xb = (mc * x_a - A.y) / (mc - m_a);
        B = {xb, m_a * xb};
    }
    return Triangle::checked(A, B, Point{Rat(0), Rat(0)});
}

struct ConditionValue {
    Rat lhs, rhs;
    bool holds = false;
};

/// The minimally inscribed existence conditions evaluated on canonical slopes.
/// For finite m_c: cond1 is  m_b/m_c + 2m_a - m_b - 1 >= 1/m_c  and cond2 is
/// 1 - m_a + 2m_b - m_a/m_c <= 1/m_c. For vertical AB: 2m_a - m_b >= 1.
struct Lemma7Evaluation {
    std::optional<ConditionValue> cond1, cond2, vertical;

    [[nodiscard]] bool exists() const {
        if (vertical) return vertical->holds;
        return cond1->holds || cond2->holds;
    }
};

inline Lemma7Evaluation evaluate_lemma7(const Rat& m_a, const Rat& m_b, const Slope& m_c) {
    if (!(Rat(0) < m_a && m_a < Rat(1) && Rat(-1) < m_b && m_b < m_a))
        throw PreconditionError("slopes outside 0 < m_a < 1, -1 < m_b < m_a");
    if (m_c.kind() != SlopeKind::Steep) throw PreconditionError("m_c must be steep");

    Lemma7Evaluation ev;
    if (m_c.is_vertical()) {
        const Rat lhs = Rat(2) * m_a - m_b;
        ev.vertical = ConditionValue{lhs, Rat(1), lhs >= Rat(1)};
        return ev;
    }
    const Rat& mc = m_c.value();
    const Rat rhs = Rat(1) / mc;
    const Rat lhs1 = m_b / mc + Rat(2) * m_a - m_b - Rat(1);
    const Rat lhs2 = Rat(1) - m_a + Rat(2) * m_b - m_a / mc;
    ev.cond1 = ConditionValue{lhs1, rhs, lhs1 >= rhs};
    ev.cond2 = ConditionValue{lhs2, rhs, lhs2 <= rhs};
    return ev;
}

enum class ApolloniusRule { NoExcircles, Lemma7Cond1, Lemma7Cond2, Lemma7Neither, Lemma7Vertical, TwoCompletely };

constexpr std::string_view name_of(ApolloniusRule r) {
    switch (r) {
        case ApolloniusRule::NoExcircles: return "NoExcircles";
        case ApolloniusRule::Lemma7Cond1: return "Lemma7Cond1";
        case ApolloniusRule::Lemma7Cond2: return "Lemma7Cond2";
        case ApolloniusRule::Lemma7Neither: return "Lemma7Neither";
        case ApolloniusRule::Lemma7Vertical: return "Lemma7Vertical";
        case ApolloniusRule::TwoCompletely: return "TwoCompletely";
    }
    return "?";
}

struct ApolloniusDecision {
    bool exists = false;
    ApolloniusRule rule = ApolloniusRule::NoExcircles;
    /// Exact sides of the inequality that decided, when a single one did.
    std::optional<Rat> lhs, rhs;
    Lemma7Evaluation conditions;
    std::optional<CanonicalTriangle> frame;
    FullComplementDecision complement;
};

/// Closed-form existence test. Never calls the constructive solver.
inline ApolloniusDecision exists_closed_form(const Triangle& t) {
    ApolloniusDecision d;
    d.complement = full_complement(t);
    if (!d.complement.all_exist) {
        d.rule = ApolloniusRule::NoExcircles;
        return d;
    }
    if (d.complement.classification.completely_count == 2) {
        d.rule = ApolloniusRule::TwoCompletely;
        d.exists = true;
        return d;
    }
    d.frame = canonicalize(t);
    const auto& ct = *d.frame;
    if (ct.m_c.kind() != SlopeKind::Steep) throw InconsistencyError("minimally inscribed triangle with non-steep m_c");
    d.conditions = evaluate_lemma7(ct.m_a.value(), ct.m_b.value(), ct.m_c);
    d.exists = d.conditions.exists();
    const ConditionValue* applied = nullptr;
    if (d.conditions.vertical) {
        d.rule = ApolloniusRule::Lemma7Vertical;
        applied = &*d.conditions.vertical;
    } else if (d.conditions.cond1->holds) {
        d.rule = ApolloniusRule::Lemma7Cond1;
        applied = &*d.conditions.cond1;
    } else if (d.conditions.cond2->holds) {
        d.rule = ApolloniusRule::Lemma7Cond2;
        applied = &*d.conditions.cond2;
    } else {
        d.rule = ApolloniusRule::Lemma7Neither;
    }
    if (applied) {
        d.lhs = applied->lhs;
        d.rhs = applied->rhs;
    }
    return d;
}

/// Right triangle with horizontal and vertical legs: an Apollonius circle
/// exists iff the hypotenuse slope satisfies 1/2 <= |m| < 1 or 1 < |m| <= 2.
inline bool hor_vert_exists(const Slope& m) {
    if (m.is_vertical() || m.value().is_zero()) throw PreconditionError("hypotenuse cannot be horizontal or vertical");
    const Rat a = abs(m.value());
    return (Rat(1, 2) <= a && a < Rat(1)) || (Rat(1) < a && a <= Rat(2));
}

/// Points and lines behind the two finite-m_c conditions. D and E are where
/// line AB meets y = x and y = -x; the green line has slope -1 through D,
/// the red line slope +1 through E.
struct ConditionTrace {
    Point D, E;
    Rat green_intercept, red_intercept;
    Rat k;
    Point T2, T3, T4;
    bool cond1_holds = false;  // T4 on or above the green line
    bool cond2_holds = false;  // T2 on or below the red line
};

inline ConditionTrace condition_trace(const CanonicalTriangle& ct) {
    if (ct.m_c.is_vertical()) throw PreconditionError("vertical m_c: use the vertical limit condition");
    const auto sol = excircle_opposite_closed_form(ct);
    const Rat& mc = ct.m_c.value();
    const Rat num = ct.A.y - ct.A.x * mc;
    ConditionTrace tr;
    const Rat d = num / (Rat(1) - mc);
    tr.D = {d, d};
    tr.E = {-num / (mc + Rat(1)), num / (mc + Rat(1))};
    tr.green_intercept = Rat(2) * num / (Rat(1) - mc);
    tr.red_intercept = Rat(2) * num / (mc + Rat(1));
    tr.k = sol.k;
    tr.T2 = sol.T2;
    tr.T3 = sol.T3;
    tr.T4 = sol.T4;
    tr.cond1_holds = tr.T4.y >= -tr.T4.x + tr.green_intercept;
    tr.cond2_holds = tr.T2.y <= tr.T2.x + tr.red_intercept;
    return tr;
}

/// A circle enclosing all three excircles and internally tangent to each.
struct ApolloniusCircle {
    TaxiCircle circle;
    /// enclose_dist(center, excircle_i) - radius; zero for every excircle.
    std::array<Rat, 3> tight;
    /// The representative of a set of solutions with more than one point.
    bool in_family = false;
};

/// All Apollonius circles of three excircles, one representative (the
/// lexicographically smallest (R, u, v) in Chebyshev coordinates) per
/// linear piece. In Chebyshev coordinates each tangency condition reads
/// max(|u - u_i|, |v - v_i|) = R - r_i; the 4^3 choices of which term
/// attains the max give linear systems in (u, v, R).
inline std::vector<ApolloniusCircle> construct_apollonius(const Excircle& e1, const Excircle& e2, const Excircle& e3) {
    const std::array<const Excircle*, 3> es{&e1, &e2, &e3};
    for (const auto* e : es) {
        if (!(e->triangle == e1.triangle)) throw PreconditionError("excircles belong to different triangles");
        if (!is_excircle(e->triangle, e->side, e->circle)) throw PreconditionError("not an excircle of its triangle");
    }
    if (e1.side == e2.side || e2.side == e3.side || e1.side == e3.side)
        throw PreconditionError("excircles must be on three different sides");

    constexpr std::size_t U = 0, V = 1, R = 2;
    std::array<Point, 3> uv;
    std::array<Rat, 3> r;
    for (std::size_t i = 0; i < 3; ++i) {
        uv[i] = cheb(es[i]->circle.center());
        r[i] = es[i]->circle.radius();
    }
    const Rat r_max = max(r[0], max(r[1], r[2]));

    struct Found {
        Rat R, u, v;
        bool family;
    };
    std::vector<Found> found;
    for (int pattern = 0; pattern < 64; ++pattern) {
        linear::System sys(3);
        for (std::size_t i = 0; i < 3; ++i) {
            const int c = (pattern >> (2 * i)) & 3;
            const bool on_u = c < 2;
            const Rat s = (c % 2 == 0) ? Rat(1) : Rat(-1);
            const Rat& main_c = on_u ? uv[i].x : uv[i].y;
            const Rat& other_c = on_u ? uv[i].y : uv[i].x;
            std::vector<Rat> main_coef(3), other_coef(3);
            main_coef[on_u ? U : V] = s;
            main_coef[R] = Rat(-1);
            // s (main - main_i) = R - r_i
            sys.eq(main_coef, s * main_c - r[i]);
            // |other - other_i| <= R - r_i
            other_coef[on_u ? V : U] = Rat(1);
            other_coef[R] = Rat(-1);
            sys.le(other_coef, other_c - r[i]);
            other_coef[on_u ? V : U] = Rat(-1);
            sys.le(other_coef, -other_c - r[i]);
        }
        const std::array<std::size_t, 3> order{R, U, V};
        const auto best = sys.lexmin(order);
        if (!best) continue;
        const bool family = !(sys.range(R)->is_point() && sys.range(U)->is_point() && sys.range(V)->is_point());
        found.push_back({(*best)[R], (*best)[U], (*best)[V], family});
    }

    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
        if (a.R != b.R) return a.R < b.R;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    std::vector<ApolloniusCircle> out;
    for (const auto& f : found) {
        if (!out.empty()) {
            auto& last = out.back();
            if (last.circle.radius() == f.R && cheb(last.circle.center()) == Point{f.u, f.v}) {
                last.in_family = last.in_family || f.family;
                continue;
            }
        }
        if (!(r_max < f.R)) continue;
        const Point center = cheb_inverse({f.u, f.v});
        ApolloniusCircle ac{TaxiCircle{center, f.R}, {}, f.family};
        for (std::size_t i = 0; i < 3; ++i) ac.tight[i] = enclose_dist(center, es[i]->circle) - f.R;
        if (std::any_of(ac.tight.begin(), ac.tight.end(), [](const Rat& x) { return !x.is_zero(); }))
            throw InconsistencyError("Apollonius candidate fails tangency validation");
        out.push_back(std::move(ac));
    }
    return out;
}

/// Whether every steep m_c (and vertical AB) gives an Apollonius circle for
/// the shallow slope pair (m_a, m_b).
struct RegionVerdict {
    bool inside = false;
    /// (1 - m_b) / (2m_a - m_b - 1) and (m_a + 1) / (1 - m_a + 2m_b), when defined.
    std::optional<Rat> lhs, rhs;
    Rat slack;  // 2m_a - m_b - 1
    bool slack_ok = false;
    Rat cond2_denominator;  // 1 - m_a + 2m_b
};

/// For m_c > 1 the first condition holds from m_c = lhs upward and the
/// second up to m_c = rhs (for every m_c when its denominator is not
/// positive); for m_c < -1 the first holds whenever slack > 0.
inline RegionVerdict universal_region(const Rat& m_a, const Rat& m_b) {
    if (!(Rat(0) < m_a && m_a < Rat(1) && Rat(-1) < m_b && m_b < m_a))
        throw PreconditionError("slopes outside 0 < m_a < 1, -1 < m_b < m_a");
    RegionVerdict v;
    v.slack = Rat(2) * m_a - m_b - Rat(1);
    v.slack_ok = v.slack.sign() > 0;
    v.cond2_denominator = Rat(1) - m_a + Rat(2) * m_b;
    if (!v.slack.is_zero()) v.lhs = (Rat(1) - m_b) / v.slack;
    if (!v.cond2_denominator.is_zero()) v.rhs = (m_a + Rat(1)) / v.cond2_denominator;

    const bool cond2_everywhere = v.cond2_denominator.sign() <= 0;
    if (v.slack.sign() > 0)
        v.inside = cond2_everywhere || *v.lhs <= *v.rhs;
    else if (v.slack.is_zero())
        v.inside = cond2_everywhere;
    return v;
}

/// n steep slopes, ceil(n/2) positive and floor(n/2) negative, with
/// magnitudes 1 + 2^(j - 10): from just above the diagonal to nearly vertical.
inline std::vector<Rat> steep_sweep(std::size_t n) {
    std::vector<Rat> out;
    const std::size_t neg = n / 2, pos = n - neg;
    auto mag = [](std::size_t j) {
        const mpz_class one(1);
        if (j >= 10) return Rat(1) + Rat(mpq_class(one << static_cast<mp_bitcnt_t>(j - 10)));
        return Rat(1) + Rat(mpq_class(one, one << static_cast<mp_bitcnt_t>(10 - j)));
    };
    for (std::size_t j = 0; j < pos; ++j) out.push_back(mag(j));
    for (std::size_t j = 0; j < neg; ++j) out.push_back(-mag(j));
    return out;
}

}  // namespace taxi
