#pragma once

// Exact feasibility and lexicographic optimisation for small systems of
// linear equalities and (strict or non-strict) inequalities over Rat.
// Equalities are eliminated by substitution, inequalities by
// Fourier-Motzkin; intended for a handful of variables.

#include "taxi/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace taxi::linear {

enum class Rel { Le, Lt, Eq };

/// a . x  rel  b
struct Constraint {
    std::vector<Rat> a;
    Rel rel;
    Rat b;
};

struct Bound {
    Rat value;
    bool strict = false;
};

struct Interval {
    std::optional<Bound> lo, hi;

    [[nodiscard]] bool is_point() const { return lo && hi && lo->value == hi->value; }
    [[nodiscard]] bool bounded() const { return lo && hi; }
    [[nodiscard]] bool contains(const Rat& x) const {
        if (lo && (lo->strict ? !(lo->value < x) : x < lo->value)) return false;
        if (hi && (hi->strict ? !(x < hi->value) : hi->value < x)) return false;
        return true;
    }
};

namespace detail {

inline bool is_trivial(const Constraint& c) {
    return std::all_of(c.a.begin(), c.a.end(), [](const Rat& v) { return v.is_zero(); });
}

inline bool trivially_holds(const Constraint& c) {
    switch (c.rel) {
        case Rel::Le: return Rat(0) <= c.b;
        case Rel::Lt: return Rat(0) < c.b;
        case Rel::Eq: return c.b.is_zero();
    }
    return false;
}

// Scale so the first nonzero coefficient has magnitude one (and is positive
// for equalities) so duplicates compare equal.
inline void normalize(Constraint& c) {
    auto it = std::find_if(c.a.begin(), c.a.end(), [](const Rat& v) { return !v.is_zero(); });
    if (it == c.a.end()) return;
    Rat s = abs(*it);
    if (c.rel == Rel::Eq && it->sign() < 0) s = -s;
    for (auto& v : c.a) v /= s;
    c.b /= s;
}

inline bool same(const Constraint& x, const Constraint& y) { return x.rel == y.rel && x.b == y.b && x.a == y.a; }

// Returns false when the system is detected infeasible.
inline bool tidy(std::vector<Constraint>& cs) {
    std::vector<Constraint> out;
    out.reserve(cs.size());
    for (auto& c : cs) {
        if (is_trivial(c)) {
            if (!trivially_holds(c)) return false;
            continue;
        }
        normalize(c);
        bool dup = false;
        for (const auto& o : out) {
            if (same(o, c)) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(std::move(c));
    }
    cs = std::move(out);
    return true;
}

// Removes variable j from every constraint; false if infeasibility shows up.
inline bool eliminate(std::vector<Constraint>& cs, std::size_t j) {
    auto eq = std::find_if(cs.begin(), cs.end(), [j](const Constraint& c) { return c.rel == Rel::Eq && !c.a[j].is_zero(); });
    if (eq != cs.end()) {
        Constraint pivot = *eq;
        cs.erase(eq);
        for (auto& c : cs) {
            if (c.a[j].is_zero()) continue;
            const Rat f = c.a[j] / pivot.a[j];
            for (std::size_t k = 0; k < c.a.size(); ++k) c.a[k] -= f * pivot.a[k];
            c.b -= f * pivot.b;
            c.a[j] = Rat(0);
        }
        return tidy(cs);
    }

    std::vector<Constraint> upper, lower, rest;
    for (auto& c : cs) {
        const int s = c.a[j].sign();
        if (s > 0)
            upper.push_back(std::move(c));
        else if (s < 0)
            lower.push_back(std::move(c));
        else
            rest.push_back(std::move(c));
    }
    for (const auto& u : upper) {
        for (const auto& l : lower) {
            const Rat fu = -l.a[j];
            const Rat fl = u.a[j];
            Constraint n{std::vector<Rat>(u.a.size()), (u.rel == Rel::Lt || l.rel == Rel::Lt) ? Rel::Lt : Rel::Le,
                         fu * u.b + fl * l.b};
            for (std::size_t k = 0; k < u.a.size(); ++k) n.a[k] = fu * u.a[k] + fl * l.a[k];
            n.a[j] = Rat(0);
            rest.push_back(std::move(n));
        }
    }
    cs = std::move(rest);
    return tidy(cs);
}

}  // namespace detail

class System {
public:
    explicit System(std::size_t n) : n_(n) {}

    [[nodiscard]] std::size_t dim() const { return n_; }
    [[nodiscard]] const std::vector<Constraint>& constraints() const { return cs_; }

    void add(std::vector<Rat> a, Rel rel, Rat b) {
        if (a.size() != n_) throw std::invalid_argument("constraint arity mismatch");
        cs_.push_back({std::move(a), rel, std::move(b)});
    }
    void eq(std::vector<Rat> a, Rat b) { add(std::move(a), Rel::Eq, std::move(b)); }
    void le(std::vector<Rat> a, Rat b) { add(std::move(a), Rel::Le, std::move(b)); }
    void lt(std::vector<Rat> a, Rat b) { add(std::move(a), Rel::Lt, std::move(b)); }
    void ge(std::vector<Rat> a, Rat b) { add(negated(std::move(a)), Rel::Le, -b); }
    void gt(std::vector<Rat> a, Rat b) { add(negated(std::move(a)), Rel::Lt, -b); }

    /// Projection of the feasible set onto one variable; nullopt if empty.
    [[nodiscard]] std::optional<Interval> range(std::size_t var) const {
        auto cs = cs_;
        if (!detail::tidy(cs)) return std::nullopt;
        for (std::size_t j = 0; j < n_; ++j) {
            if (j == var) continue;
            if (!detail::eliminate(cs, j)) return std::nullopt;
        }
        Interval iv;
        auto tighten_lo = [&](Rat v, bool strict) {
            if (!iv.lo || iv.lo->value < v || (iv.lo->value == v && strict)) iv.lo = Bound{std::move(v), strict};
        };
        auto tighten_hi = [&](Rat v, bool strict) {
            if (!iv.hi || v < iv.hi->value || (iv.hi->value == v && strict)) iv.hi = Bound{std::move(v), strict};
        };
        for (const auto& c : cs) {
            const Rat& a = c.a[var];
            const Rat v = c.b / a;
            const bool strict = c.rel == Rel::Lt;
            if (c.rel == Rel::Eq) {
                tighten_lo(v, false);
                tighten_hi(v, false);
            } else if (a.sign() > 0) {
                tighten_hi(v, strict);
            } else {
                tighten_lo(v, strict);
            }
        }
        if (iv.lo && iv.hi) {
            if (iv.hi->value < iv.lo->value) return std::nullopt;
            if (iv.hi->value == iv.lo->value && (iv.lo->strict || iv.hi->strict)) return std::nullopt;
        }
        return iv;
    }

    [[nodiscard]] bool feasible() const { return n_ == 0 ? tidy_ok() : range(0).has_value(); }

    /// Some feasible point, or nullopt when the system is infeasible.
    [[nodiscard]] std::optional<std::vector<Rat>> witness() const {
        System s = *this;
        std::vector<Rat> x(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            auto iv = s.range(k);
            if (!iv) return std::nullopt;
            x[k] = pick(*iv);
            s.fix(k, x[k]);
        }
        return x;
    }

    /// Lexicographic minimum over the variables in `order` (remaining
    /// variables get any feasible value). nullopt when infeasible; throws
    /// std::domain_error when a minimum is not attained.
    [[nodiscard]] std::optional<std::vector<Rat>> lexmin(std::span<const std::size_t> order) const {
        return lexopt(order, false);
    }
    [[nodiscard]] std::optional<std::vector<Rat>> lexmax(std::span<const std::size_t> order) const {
        return lexopt(order, true);
    }

    /// Rank of the equality rows.
    [[nodiscard]] std::size_t equality_rank() const {
        std::vector<std::vector<Rat>> rows;
        for (const auto& c : cs_)
            if (c.rel == Rel::Eq) rows.push_back(c.a);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n_ && rank < rows.size(); ++col) {
            auto piv = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                    [col](const auto& r) { return !r[col].is_zero(); });
            if (piv == rows.end()) continue;
            std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), piv);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col].is_zero()) continue;
                const Rat f = rows[r][col] / rows[rank][col];
                for (std::size_t k = 0; k < n_; ++k) rows[r][k] -= f * rows[rank][k];
            }
            ++rank;
        }
        return rank;
    }

    /// Adds x[var] == value.
    void fix(std::size_t var, const Rat& value) {
        std::vector<Rat> a(n_);
        a[var] = Rat(1);
        eq(std::move(a), value);
    }

private:
    static std::vector<Rat> negated(std::vector<Rat> a) {
        for (auto& v : a) v = -v;
        return a;
    }

    [[nodiscard]] bool tidy_ok() const {
        auto cs = cs_;
        return detail::tidy(cs);
    }

    static Rat pick(const Interval& iv) {
        if (iv.lo && !iv.lo->strict) return iv.lo->value;
        if (iv.hi && !iv.hi->strict) return iv.hi->value;
        if (iv.lo && iv.hi) return (iv.lo->value + iv.hi->value) / Rat(2);
        if (iv.lo) return iv.lo->value + Rat(1);
        if (iv.hi) return iv.hi->value - Rat(1);
        return Rat(0);
    }

    [[nodiscard]] std::optional<std::vector<Rat>> lexopt(std::span<const std::size_t> order, bool maximize) const {
        System s = *this;
        for (std::size_t var : order) {
            auto iv = s.range(var);
            if (!iv) return std::nullopt;
            const auto& b = maximize ? iv->hi : iv->lo;
            if (!b || b->strict) throw std::domain_error("lexicographic optimum not attained");
            s.fix(var, b->value);
        }
        return s.witness();
    }

    std::size_t n_;
    std::vector<Constraint> cs_;
};

}  // namespace taxi::linear
