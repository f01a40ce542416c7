#pragma once

/// \file
/// \brief SVG figures of a triangle with its excircles, Apollonius circles
/// and diagnostic layers. Output depends only on the SceneSpec.

#include "taxi/apollonius.hpp"
#include "taxi/excircles.hpp"
#include "taxi/geometry.hpp"
#include "taxi/inscription.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace taxi::render {

/// An infinite line through `through` with direction `dir`, clipped to the viewport.
struct GuideLine {
    Point through;
    Vec2 dir;
    std::string color;
};

struct Label {
    Point at;
    std::string text;
};

struct SceneSpec {
    Triangle triangle;
    std::array<std::optional<TaxiCircle>, 3> excircles;
    std::vector<TaxiCircle> apollonius;
    std::vector<GuideLine> guides;
    std::vector<Label> labels;
};

namespace palette {
inline constexpr const char* triangle = "#000000";
inline constexpr std::array<const char*, 3> excircle = {"#1f77b4", "#9467bd", "#8c564b"};
inline constexpr const char* apollonius = "#ff7f0e";
inline constexpr const char* guide = "#999999";
inline constexpr const char* green = "#2ca02c";
inline constexpr const char* red = "#d62728";
inline constexpr const char* label = "#333333";
}  // namespace palette

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

struct Box {
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -std::numeric_limits<double>::infinity(), y1 = x1;
    void add(const Point& p) {
        const double x = p.x.to_double(), y = p.y.to_double();
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
};

inline std::string polygon(const std::vector<Point>& pts, const char* stroke, double width, const char* extra = "") {
    std::string s = "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ' ';
        s += num(pts[i].x.to_double()) + "," + num(-pts[i].y.to_double());
    }
    s += "\" fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + num(width) + "\"" + extra + "/>\n";
    return s;
}

inline std::string diamond(const TaxiCircle& c, const char* stroke, double width) {
    const auto v = c.vertices();
    return polygon({v.begin(), v.end()}, stroke, width);
}

// Liang-Barsky on the infinite line.
inline std::optional<std::array<double, 4>> clip(const GuideLine& g, const Box& b) {
    const double px = g.through.x.to_double(), py = g.through.y.to_double();
    const double dx = g.dir.x.to_double(), dy = g.dir.y.to_double();
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    auto axis = [&](double p, double d, double mn, double mx) {
        if (d == 0) return mn <= p && p <= mx;
        double a = (mn - p) / d, c = (mx - p) / d;
        if (a > c) std::swap(a, c);
        lo = std::max(lo, a);
        hi = std::min(hi, c);
        return lo <= hi;
    };
    if (!axis(px, dx, b.x0, b.x1) || !axis(py, dy, b.y0, b.y1)) return std::nullopt;
    return std::array<double, 4>{px + lo * dx, py + lo * dy, px + hi * dx, py + hi * dy};
}

}  // namespace detail

/// Bounding box of the triangle, circles, labels and guide anchors, grown by
/// 10% of its extent on every side.
inline std::array<double, 4> viewport(const SceneSpec& s) {
    detail::Box b;
    for (const auto& p : s.triangle.v) b.add(p);
    for (const auto& c : s.excircles)
        if (c)
            for (const auto& p : c->vertices()) b.add(p);
    for (const auto& c : s.apollonius)
        for (const auto& p : c.vertices()) b.add(p);
    for (const auto& g : s.guides) b.add(g.through);
    for (const auto& l : s.labels) b.add(l.at);
    const double w = b.x1 - b.x0, h = b.y1 - b.y0;
    const double px = 0.1 * (w > 0 ? w : 1), py = 0.1 * (h > 0 ? h : 1);
    return {b.x0 - px, b.y0 - py, b.x1 + px, b.y1 + py};
}

/// Element order: triangle, excircles a, b, c, Apollonius circles, guides, labels.
inline std::string render_svg(const SceneSpec& s) {
    using detail::num;
    const auto vp = viewport(s);
    const double w = vp[2] - vp[0], h = vp[3] - vp[1];
    const double stroke = std::max(w, h) / 400;
    const double font = std::max(w, h) / 40;
    const double px_w = 800, px_h = 800 * h / w;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(px_w) + "\" height=\"" + num(px_h) +
           "\" viewBox=\"" + num(vp[0]) + " " + num(-vp[3]) + " " + num(w) + " " + num(h) + "\">\n";
    out += "<rect x=\"" + num(vp[0]) + "\" y=\"" + num(-vp[3]) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
           "\" fill=\"#ffffff\"/>\n";

    out += detail::polygon({s.triangle.v.begin(), s.triangle.v.end()}, palette::triangle, stroke * 1.5);
    for (std::size_t i = 0; i < 3; ++i)
        if (s.excircles[i]) out += detail::diamond(*s.excircles[i], palette::excircle[i], stroke);
    for (const auto& c : s.apollonius) out += detail::diamond(c, palette::apollonius, stroke);

    const detail::Box box{vp[0], vp[1], vp[2], vp[3]};
    const std::string dash = num(stroke * 4) + "," + num(stroke * 3);
    for (const auto& g : s.guides) {
        const auto seg = detail::clip(g, box);
        if (!seg) continue;
        out += "<line x1=\"" + num((*seg)[0]) + "\" y1=\"" + num(-(*seg)[1]) + "\" x2=\"" + num((*seg)[2]) +
               "\" y2=\"" + num(-(*seg)[3]) + "\" stroke=\"" + g.color + "\" stroke-width=\"" + num(stroke * 0.75) +
               "\" stroke-dasharray=\"" + dash + "\"/>\n";
    }
    for (const auto& l : s.labels) {
        const double x = l.at.x.to_double(), y = l.at.y.to_double();
        out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(-y) + "\" r=\"" + num(stroke * 1.5) + "\" fill=\"" +
               palette::label + "\"/>\n";
        out += "<text x=\"" + num(x + font * 0.3) + "\" y=\"" + num(-y - font * 0.3) + "\" font-family=\"sans-serif\" "
               "font-size=\"" + num(font) + "\" fill=\"" + palette::label + "\">" + l.text + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

struct SceneOptions {
    bool excircles = true;
    bool apollonius = true;
    bool guides = true;
    bool conditions = true;
};

/// Everything the library can compute for t, as a scene. Condition lines and
/// the D/E/T labels are computed in the canonical frame and mapped back.
inline SceneSpec build_scene(const Triangle& t, const SceneOptions& opt = {}) {
    t.validate();
    SceneSpec s;
    s.triangle = t;
    std::vector<Excircle> found;
    if (opt.excircles)
        for (Side side : kAllSides)
            if (auto e = construct_excircle(t, side)) {
                s.excircles[index_of(side)] = e->circle;
                found.push_back(*e);
            }
    if (opt.apollonius && found.size() == 3)
        for (const auto& a : construct_apollonius(found[0], found[1], found[2])) s.apollonius.push_back(a.circle);
    if (opt.guides)
        for (const auto& p : t.v) {
            s.guides.push_back({p, Vec2{Rat(1), Rat(1)}, palette::guide});
            s.guides.push_back({p, Vec2{Rat(1), Rat(-1)}, palette::guide});
        }
    const char* names[3] = {"A", "B", "C"};
    if (opt.conditions && classify_triangle(t).minimally_inscribed) {
        const auto ct = canonicalize(t);
        for (std::size_t k = 0; k < 3; ++k) s.labels.push_back({t.v[ct.labels[k]], names[k]});
        if (!ct.m_c.is_vertical()) {
            const auto tr = condition_trace(ct);
            const Isometry back = ct.to_canonical.inverse();
            s.guides.push_back({back.apply(tr.D), back.apply(Vec2{Rat(1), Rat(-1)}), palette::green});
            s.guides.push_back({back.apply(tr.E), back.apply(Vec2{Rat(1), Rat(1)}), palette::red});
            s.labels.push_back({back.apply(tr.D), "D"});
            s.labels.push_back({back.apply(tr.E), "E"});
            s.labels.push_back({back.apply(tr.T2), "T2"});
            s.labels.push_back({back.apply(tr.T3), "T3"});
            s.labels.push_back({back.apply(tr.T4), "T4"});
        }
    } else {
        for (std::size_t k = 0; k < 3; ++k) s.labels.push_back({t.v[k], names[k]});
    }
    return s;
}

}  // namespace taxi::render
