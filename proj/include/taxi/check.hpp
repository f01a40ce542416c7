#pragma once

// Three-way agreement between the closed-form rules, the constructive solvers
// and the search oracles. An oracle comparison is skipped (not counted as a
// disagreement) when the oracle returns Unknown or when every exact solution
// lies outside the box the oracle searched.

#include "taxi/apollonius.hpp"
#include "taxi/excircles.hpp"
#include "taxi/inscription.hpp"
#include "taxi/io.hpp"
#include "taxi/oracle.hpp"
#include "taxi/random.hpp"

#include <map>
#include <string>
#include <vector>

namespace taxi::check {

struct Options {
    Rat inflate = oracle::default_inflate();
    /// Search pitch as a fraction of the triangle's d1 diameter.
    Rat pitch = Rat(1, 256);
    std::size_t max_cells = oracle::kDefaultMaxCells;
};

struct Counts {
    std::size_t agree = 0, unknown_skipped = 0, mismatches = 0;
    [[nodiscard]] std::size_t total() const { return agree + unknown_skipped + mismatches; }
};

struct Tally {
    std::size_t triangles = 0;
    std::size_t full_complements = 0;
    Counts circumcircle, excircle, apollonius;
    /// Closed form against construction, no oracle involved.
    std::size_t exact_checks = 0, exact_mismatches = 0;
    std::vector<std::string> details;

    [[nodiscard]] Counts overall() const {
        Counts c;
        for (const auto* k : {&circumcircle, &excircle, &apollonius}) {
            c.agree += k->agree;
            c.unknown_skipped += k->unknown_skipped;
            c.mismatches += k->mismatches;
        }
        return c;
    }
    [[nodiscard]] std::size_t mismatches() const { return overall().mismatches + exact_mismatches; }
};

namespace detail {

// Some center of the family lies in the closed box.
inline bool family_meets(const CircleFamily& f, const oracle::SearchRegion& r) {
    std::optional<Rat> lo = Rat(0), hi = f.t_max;
    auto axis = [&](const Rat& p, const Rat& d, const Rat& mn, const Rat& mx) {
        if (d.is_zero()) return mn <= p && p <= mx;
        Rat a = (mn - p) / d, b = (mx - p) / d;
        if (b < a) std::swap(a, b);
        if (*lo < a) lo = a;
        if (!hi || b < *hi) hi = b;
        return *lo <= *hi;
    };
    return axis(f.start.x, f.direction.x, r.lo.x, r.hi.x) && axis(f.start.y, f.direction.y, r.lo.y, r.hi.y);
}

inline std::string label(const Triangle& t) { return io::triangle_text(t); }

}  // namespace detail

/// Runs every comparison for one triangle and adds the outcomes to `tally`.
inline void run_triangle(const Triangle& t, const Options& opt, Tally& tally) {
    ++tally.triangles;
    const Rat pitch = opt.pitch * oracle::diameter(t.v);
    auto fail = [&](Counts* c, const std::string& what) {
        if (c)
            ++c->mismatches;
        else
            ++tally.exact_mismatches;
        tally.details.push_back(detail::label(t) + ": " + what);
    };

    // Circles through the vertices.
    const auto cls = classify_triangle(t);
    const auto cc = circumcircles(t[0], t[1], t[2]);
    ++tally.exact_checks;
    if (cc.empty() == cls.inscribed) fail(nullptr, "circumcircle existence disagrees with inscription");
    {
        const auto v = oracle::oracle_circumcircle(t[0], t[1], t[2], opt.inflate, pitch, opt.max_cells);
        if (oracle::is_unknown(v)) {
            ++tally.circumcircle.unknown_skipped;
        } else if (const auto* w = std::get_if<oracle::ExistsWitness>(&v)) {
            if (cc.contains(w->circle))
                ++tally.circumcircle.agree;
            else
                fail(&tally.circumcircle, "oracle circumcircle not among the exact solutions");
        } else if (cc.empty()) {
            ++tally.circumcircle.agree;
        } else {
            const auto& region = std::get<oracle::CertifiedNone>(v).region;
            const bool reachable =
                std::any_of(cc.isolated.begin(), cc.isolated.end(),
                            [&](const TaxiCircle& c) { return region.contains(c.center()); }) ||
                std::any_of(cc.families.begin(), cc.families.end(),
                            [&](const CircleFamily& f) { return detail::family_meets(f, region); });
            if (reachable)
                fail(&tally.circumcircle, "oracle certified no circumcircle but one exists in its box");
            else
                ++tally.circumcircle.unknown_skipped;
        }
    }

    // Excircles.
    const auto fc = full_complement(t);
    std::vector<Excircle> found;
    for (Side s : kAllSides) {
        const auto e = construct_excircle(t, s);
        ++tally.exact_checks;
        if (fc.per_side[index_of(s)] != e.has_value())
            fail(nullptr, std::string("excircle rule disagrees with construction on side ") + name_of(s));
        if (e) {
            found.push_back(*e);
            ++tally.exact_checks;
            if (!is_excircle(t, s, e->circle)) fail(nullptr, std::string("constructed excircle invalid on side ") + name_of(s));
        }
        const auto v = oracle::oracle_excircle(t[0], t[1], t[2], index_of(s), opt.inflate, pitch, opt.max_cells);
        if (oracle::is_unknown(v)) {
            ++tally.excircle.unknown_skipped;
        } else if (const auto* w = std::get_if<oracle::ExistsWitness>(&v)) {
            if (!e)
                fail(&tally.excircle, std::string("oracle found an excircle the solver missed on side ") + name_of(s));
            else if (!is_excircle(t, s, w->circle))
                fail(&tally.excircle, std::string("oracle excircle fails validation on side ") + name_of(s));
            else
                ++tally.excircle.agree;
        } else if (!e) {
            ++tally.excircle.agree;
        } else if (std::get<oracle::CertifiedNone>(v).region.contains(e->circle.center())) {
            fail(&tally.excircle, std::string("oracle certified no excircle but one exists on side ") + name_of(s));
        } else {
            ++tally.excircle.unknown_skipped;
        }
    }
    ++tally.exact_checks;
    if (fc.all_exist != (found.size() == 3)) fail(nullptr, "full complement rule disagrees with construction");

    if (cls.minimally_inscribed) {
        const auto ct = canonicalize(t);
        if (!ct.m_c.is_vertical()) {
            ++tally.exact_checks;
            const auto cf = closed_form_in_input_frame(ct, excircle_opposite_closed_form(ct));
            const auto e = construct_excircle(t, input_side_of_canonical_ab(ct));
            if (!e || e->circle != cf) fail(nullptr, "closed-form excircle differs from construction");
        }
    }

    if (found.size() != 3) return;
    ++tally.full_complements;

    // Apollonius circle.
    const auto d = exists_closed_form(t);
    std::vector<ApolloniusCircle> ap;
    ++tally.exact_checks;
    try {
        ap = construct_apollonius(found[0], found[1], found[2]);
    } catch (const InconsistencyError& e) {
        fail(nullptr, std::string("Apollonius construction: ") + e.what());
    }
    if (d.exists == ap.empty()) fail(nullptr, "Apollonius rule disagrees with construction");
    const auto v = oracle::oracle_apollonius(found[0].circle, found[1].circle, found[2].circle, opt.inflate, pitch,
                                             opt.max_cells);
    if (oracle::is_unknown(v)) {
        ++tally.apollonius.unknown_skipped;
    } else if (oracle::is_witness(v)) {
        if (ap.empty())
            fail(&tally.apollonius, "oracle found an Apollonius circle the solver missed");
        else
            ++tally.apollonius.agree;
    } else if (ap.empty()) {
        ++tally.apollonius.agree;
    } else {
        const auto& region = std::get<oracle::CertifiedNone>(v).region;
        const bool reachable = std::any_of(ap.begin(), ap.end(),
                                           [&](const ApolloniusCircle& a) { return region.contains(cheb(a.circle.center())); });
        if (reachable)
            fail(&tally.apollonius, "oracle certified no Apollonius circle but one exists in its box");
        else
            ++tally.apollonius.unknown_skipped;
    }
}

/// `count` triangles from gen::triangle with the given seed.
inline Tally run_random(std::size_t count, std::uint64_t seed, const Options& opt) {
    gen::Engine g(seed);
    Tally tally;
    for (std::size_t i = 0; i < count; ++i) run_triangle(gen::triangle(g), opt, tally);
    return tally;
}

inline io::Json counts_json(const Counts& c) {
    return io::Json{{"agree", c.agree}, {"unknown_skipped", c.unknown_skipped}, {"mismatches", c.mismatches}};
}

inline io::Json to_json(const Tally& t) {
    const Counts all = t.overall();
    const std::size_t n = all.total();
    io::Json j;
    j["triangles"] = t.triangles;
    j["full_complements"] = t.full_complements;
    j["comparisons"] = n;
    j["agree"] = all.agree;
    j["unknown_skipped"] = all.unknown_skipped;
    j["mismatches"] = t.mismatches();
    j["unknown_rate"] = n ? io::rat(Rat(static_cast<long>(all.unknown_skipped), static_cast<long>(n))) : io::Json("0");
    j["by_oracle"] = io::Json{{"circumcircle", counts_json(t.circumcircle)},
                              {"excircle", counts_json(t.excircle)},
                              {"apollonius", counts_json(t.apollonius)}};
    j["exact_checks"] = t.exact_checks;
    j["exact_mismatches"] = t.exact_mismatches;
    j["details"] = t.details;
    return j;
}

}  // namespace taxi::check
