#pragma once

// taxi <command> [TRIANGLE] [options]
// Exit codes: 0 computed, 1 bad input or unmet precondition, 2 internal
// inconsistency (solver/oracle disagreement).

#include "taxi/apollonius.hpp"
#include "taxi/check.hpp"
#include "taxi/error.hpp"
#include "taxi/excircles.hpp"
#include "taxi/inscription.hpp"
#include "taxi/io.hpp"
#include "taxi/random.hpp"
#include "taxi/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace taxi::cli {

using io::Json;

struct Args {
    std::string triangle;
    std::string json_path, svg_path;
    std::size_t random = 0;
    std::uint64_t seed = 1;
    std::string inflate, pitch;
    std::size_t mc_sweep = 0;
    std::string ma, mb;
    std::size_t raster = 0;
    bool no_apollonius = false, no_guides = false, no_conditions = false;
};

namespace detail {

inline Json envelope(const std::string& command) { return Json{{"schema", io::kSchema}, {"command", command}}; }

inline Json circumcircles_json(const CircumcircleResult& r) {
    Json iso = Json::array(), fam = Json::array();
    for (const auto& c : r.isolated) iso.push_back(io::circle(c));
    for (const auto& f : r.families) {
        Json j{{"start", io::point(f.start)},
               {"start_radius", io::rat(f.start_radius)},
               {"direction", Json{{"x", io::rat(f.direction.x)}, {"y", io::rat(f.direction.y)}}},
               {"radius_rate", io::rat(f.radius_rate)}};
        j["t_max"] = f.t_max ? io::rat(*f.t_max) : Json(nullptr);
        fam.push_back(j);
    }
    return Json{{"isolated", iso}, {"families", fam}};
}

inline Json excircles_json(const Triangle& t) {
    Json per = Json::object();
    for (Side s : kAllSides) {
        const auto e = construct_excircle(t, s);
        per[std::string(1, name_of(s))] = e ? io::excircle(*e) : Json(nullptr);
    }
    return per;
}

inline Json closed_form_json(const Triangle& t) {
    if (!classify_triangle(t).minimally_inscribed) return nullptr;
    const auto ct = canonicalize(t);
    Json j{{"frame", io::canonical(ct)}};
    if (ct.m_c.is_vertical()) {
        j["opposite_ab"] = nullptr;
        return j;
    }
    const auto sol = excircle_opposite_closed_form(ct);
    j["opposite_ab"] = Json{{"side", std::string(1, name_of(input_side_of_canonical_ab(ct)))},
                            {"k", io::rat(sol.k)},
                            {"center", io::point(sol.center)},
                            {"radius", io::rat(sol.r)},
                            {"T1", io::point(sol.T1)},
                            {"T2", io::point(sol.T2)},
                            {"T3", io::point(sol.T3)},
                            {"T4", io::point(sol.T4)},
                            {"input_frame", io::circle(closed_form_in_input_frame(ct, sol))}};
    return j;
}

inline Rat rat_option(const std::string& text, const std::string& name) {
    try {
        return Rat::parse(text);
    } catch (const std::exception&) {
        throw io::InputError("malformed number '" + text + "' for " + name);
    }
}

inline Triangle need_triangle(const Args& a) {
    if (a.triangle.empty()) throw io::InputError("missing TRIANGLE argument \"x1,y1 x2,y2 x3,y3\"");
    return io::parse_triangle(a.triangle);
}

inline Json cmd_classify(const Args& a) {
    const Triangle t = need_triangle(a);
    const auto cls = classify_triangle(t);
    Json j = envelope("classify");
    j["input"] = io::triangle(t);
    j["classification"] = io::classification(cls);
    j["circumcircles"] = circumcircles_json(circumcircles(t[0], t[1], t[2]));
    j["frame"] = cls.minimally_inscribed ? io::canonical(canonicalize(t)) : Json(nullptr);
    return j;
}

inline Json cmd_excircles(const Args& a) {
    const Triangle t = need_triangle(a);
    const auto fc = full_complement(t);
    Json j = envelope("excircles");
    j["input"] = io::triangle(t);
    j["classification"] = io::classification(fc.classification);
    Json ex = io::complement(fc);
    ex["circles"] = excircles_json(t);
    ex["closed_form"] = closed_form_json(t);
    for (Side s : kAllSides)
        if (fc.per_side[index_of(s)] == ex["circles"][std::string(1, name_of(s))].is_null())
            throw InconsistencyError(std::string("excircle rule disagrees with construction on side ") + name_of(s));
    j["excircles"] = ex;
    return j;
}

inline Json cmd_apollonius(const Args& a) {
    const Triangle t = need_triangle(a);
    const auto d = exists_closed_form(t);
    Json j = envelope("apollonius");
    j["input"] = io::triangle(t);
    j["classification"] = io::classification(d.complement.classification);
    j["excircles"] = io::complement(d.complement);
    j["excircles"]["circles"] = excircles_json(t);
    Json ap = io::decision(d);
    Json circles = Json::array();
    if (d.complement.all_exist) {
        std::vector<Excircle> es;
        for (Side s : kAllSides) es.push_back(*construct_excircle(t, s));
        const auto found = construct_apollonius(es[0], es[1], es[2]);
        for (const auto& c : found) circles.push_back(io::apollonius_circle(c));
        if (d.exists == found.empty())
            throw InconsistencyError("closed-form Apollonius verdict disagrees with construction");
    }
    ap["circles"] = circles;
    if (d.frame && !d.frame->m_c.is_vertical()) ap["trace"] = io::trace(condition_trace(*d.frame));
    j["apollonius"] = ap;
    return j;
}

inline Json cmd_region(const Args& a) {
    if (a.ma.empty() || a.mb.empty()) throw io::InputError("region needs --ma and --mb");
    const Rat ma = rat_option(a.ma, "--ma"), mb = rat_option(a.mb, "--mb");
    const auto v = universal_region(ma, mb);
    Json j = envelope("region");
    j["input"] = Json{{"m_a", io::rat(ma)}, {"m_b", io::rat(mb)}};
    Json r = io::region(v);
    if (a.mc_sweep) {
        Json sweep = Json::array();
        bool all = true;
        auto one = [&](const Slope& mc) {
            const Triangle t = realize_canonical(ma, mb, mc);
            const auto d = exists_closed_form(t);
            all = all && d.exists;
            sweep.push_back(Json{{"m_c", io::slope(mc)}, {"exists", d.exists}, {"rule", std::string(name_of(d.rule))}});
        };
        for (const auto& mc : steep_sweep(a.mc_sweep)) one(Slope::finite(mc));
        one(Slope::vertical());
        r["sweep"] = sweep;
        r["sweep_all_exist"] = all;
        if (v.inside && !all) throw InconsistencyError("region verdict inside but a swept m_c has no Apollonius circle");
    }
    if (a.raster) {
        const long n = static_cast<long>(a.raster);
        Json rows = Json::array();
        std::size_t inside = 0;
        for (long jb = n - 1; jb >= 0; --jb) {
            std::string row;
            const Rat b = Rat(-1) + Rat(2 * jb + 1, n);
            for (long ia = 0; ia < n; ++ia) {
                const Rat av(2 * ia + 1, 2 * n);
                if (!(Rat(-1) < b && b < av)) {
                    row += ' ';
                    continue;
                }
                const bool in = universal_region(av, b).inside;
                inside += in;
                row += in ? '#' : '.';
            }
            rows.push_back(row);
        }
        r["raster"] = Json{{"n", a.raster},
                           {"m_a", Json::array({"0", "1"})},
                           {"m_b", Json::array({"-1", "1"})},
                           {"legend", "# inside, . outside, blank outside the slope domain; first row is the largest m_b"},
                           {"inside_cells", inside},
                           {"rows", rows}};
    }
    j["region"] = r;
    return j;
}

inline check::Options check_options(const Args& a) {
    check::Options o;
    if (!a.inflate.empty()) o.inflate = rat_option(a.inflate, "--inflate");
    if (!a.pitch.empty()) o.pitch = rat_option(a.pitch, "--pitch");
    if (o.inflate.sign() <= 0 || o.pitch.sign() <= 0) throw io::InputError("--inflate and --pitch must be positive");
    return o;
}

inline Json cmd_check(const Args& a, bool& failed) {
    const auto opt = check_options(a);
    Json j = envelope("check");
    check::Tally tally;
    if (a.random) {
        tally = check::run_random(a.random, a.seed, opt);
        j["input"] = Json{{"random", a.random}, {"seed", a.seed}};
    } else {
        const Triangle t = need_triangle(a);
        check::run_triangle(t, opt, tally);
        j["input"] = io::triangle(t);
    }
    j["check"] = check::to_json(tally);
    j["check"]["inflate"] = io::rat(opt.inflate);
    j["check"]["pitch"] = io::rat(opt.pitch);
    failed = tally.mismatches() > 0;
    return j;
}

inline Json concurrency_entry(const Triangle& t) {
    const auto rep = excenter_cevians(t);
    Json inter = Json::array();
    for (const auto& p : rep.intersections) inter.push_back(p ? io::point(*p) : Json(nullptr));
    Json ex = Json::array();
    for (const auto& p : rep.excenters) ex.push_back(io::point(p));
    return Json{{"input", io::triangle(t)}, {"excenters", ex}, {"intersections", inter}, {"concurrent", rep.concurrent}};
}

inline Json cmd_concurrency(const Args& a) {
    Json j = envelope("concurrency");
    if (a.random) {
        gen::Engine g(a.seed);
        Json list = Json::array();
        long hits = 0;
        for (std::size_t i = 0; i < a.random; ++i) {
            auto e = concurrency_entry(gen::minimally_inscribed_triangle(g));
            hits += e["concurrent"].get<bool>();
            list.push_back(std::move(e));
        }
        j["input"] = Json{{"random", a.random}, {"seed", a.seed}};
        j["concurrency"] = Json{{"triangles", list},
                                {"concurrent", hits},
                                {"fraction", io::rat(Rat(hits, static_cast<long>(a.random)))}};
    } else {
        const Triangle t = need_triangle(a);
        j["input"] = io::triangle(t);
        j["concurrency"] = concurrency_entry(t);
    }
    return j;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io::InputError("cannot write '" + path + "'");
    f << text;
}

}  // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact taxicab triangle geometry: excircles and Apollonius circles", "taxi"};
    app.require_subcommand(1);
    Args a;

    auto add_common = [&](CLI::App* sub, bool triangle) {
        if (triangle) sub->add_option("triangle", a.triangle, "\"x1,y1 x2,y2 x3,y3\" with exact rational tokens");
        sub->add_option("--json", a.json_path, "also write the JSON result to this file");
    };
    auto* classify = app.add_subcommand("classify", "angle classes, inscription, circles through the vertices");
    add_common(classify, true);
    auto* excircles = app.add_subcommand("excircles", "full-complement decision and the excircles");
    add_common(excircles, true);
    auto* apollonius = app.add_subcommand("apollonius", "Apollonius circle verdict and construction");
    add_common(apollonius, true);
    auto* region = app.add_subcommand("region", "slope pairs whose every steep m_c admits an Apollonius circle");
    add_common(region, false);
    region->add_option("--ma", a.ma, "shallow slope m_a in (0, 1)");
    region->add_option("--mb", a.mb, "shallow slope m_b in (-1, m_a)");
    region->add_option("--raster", a.raster, "N x N raster over (m_a, m_b)");
    region->add_option("--mc-sweep", a.mc_sweep, "evaluate N steep values of m_c plus vertical");
    auto* chk = app.add_subcommand("check", "closed form vs construction vs search oracle");
    add_common(chk, true);
    chk->add_option("--random", a.random, "check N random triangles instead of TRIANGLE");
    chk->add_option("--seed", a.seed, "random seed");
    chk->add_option("--inflate", a.inflate, "search box half-width as a multiple of the diameter (default 8)");
    chk->add_option("--pitch", a.pitch, "finest search cell as a fraction of the diameter (default 1/256)");
    auto* render = app.add_subcommand("render", "SVG figure of the triangle and its circles");
    add_common(render, true);
    render->add_option("--svg", a.svg_path, "output file (default stdout)");
    render->add_flag("--no-apollonius", a.no_apollonius);
    render->add_flag("--no-guides", a.no_guides);
    render->add_flag("--no-conditions", a.no_conditions);
    auto* conc = app.add_subcommand("concurrency", "lines from vertices through opposite excenters");
    add_common(conc, true);
    conc->add_option("--random", a.random, "N random minimally inscribed triangles instead of TRIANGLE");
    conc->add_option("--seed", a.seed, "random seed");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "taxi: " << e.what() << "\n";
        return 1;
    }

    try {
        if (render->parsed()) {
            render::SceneOptions so;
            so.apollonius = !a.no_apollonius;
            so.guides = !a.no_guides;
            so.conditions = !a.no_conditions;
            const std::string svg = render::render_svg(render::build_scene(detail::need_triangle(a), so));
            if (a.svg_path.empty())
                out << svg;
            else
                detail::write_file(a.svg_path, svg);
            return 0;
        }
        Json j;
        bool failed = false;
        if (classify->parsed()) j = detail::cmd_classify(a);
        if (excircles->parsed()) j = detail::cmd_excircles(a);
        if (apollonius->parsed()) j = detail::cmd_apollonius(a);
        if (region->parsed()) j = detail::cmd_region(a);
        if (chk->parsed()) j = detail::cmd_check(a, failed);
        if (conc->parsed()) j = detail::cmd_concurrency(a);
        const std::string text = j.dump(2) + "\n";
        out << text;
        if (!a.json_path.empty()) detail::write_file(a.json_path, text);
        if (failed) {
            err << "taxi: check found disagreements\n";
            return 2;
        }
        return 0;
    } catch (const InconsistencyError& e) {
        err << "taxi: internal inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "taxi: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "taxi: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "taxi: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace taxi::cli
