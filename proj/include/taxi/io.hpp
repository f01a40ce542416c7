#pragma once

// Text and JSON forms of the library's values. Rationals travel as "p/q"
// strings ("p" for integers) so that no verdict depends on float rounding.

#include "taxi/apollonius.hpp"
#include "taxi/excircles.hpp"
#include "taxi/geometry.hpp"
#include "taxi/inscription.hpp"
#include "taxi/isometry.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace taxi::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "v1";

/// Malformed command-line input; the message names the offending token.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

inline Rat parse_rat(const std::string& token, const std::string& context) {
    try {
        return Rat::parse(token);
    } catch (const std::exception&) {
        throw InputError("malformed number '" + token + "' in '" + context + "'");
    }
}

inline Point parse_point(const std::string& token) {
    const auto comma = token.find(',');
    if (comma == std::string::npos || token.find(',', comma + 1) != std::string::npos)
        throw InputError("expected x,y but got '" + token + "'");
    return {parse_rat(token.substr(0, comma), token), parse_rat(token.substr(comma + 1), token)};
}

/// "x1,y1 x2,y2 x3,y3" with integer, p/q or finite decimal coordinates.
inline Triangle parse_triangle(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.size() != 3)
        throw InputError("expected three points \"x1,y1 x2,y2 x3,y3\", got " + std::to_string(tokens.size()) +
                         " token(s) in '" + text + "'");
    Triangle t{{parse_point(tokens[0]), parse_point(tokens[1]), parse_point(tokens[2])}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (t.v[i] == t.v[j]) throw InputError("duplicate point '" + tokens[j] + "'");
    if (orientation(t.v[0], t.v[1], t.v[2]) == 0)
        throw InputError("collinear points '" + tokens[0] + "' '" + tokens[1] + "' '" + tokens[2] + "'");
    return t;
}

inline std::string triangle_text(const Triangle& t) {
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) s += ' ';
        s += t.v[i].x.str() + "," + t.v[i].y.str();
    }
    return s;
}

inline Json rat(const Rat& r) { return r.str(); }
inline Rat rat_from(const Json& j) { return Rat::parse(j.get<std::string>()); }

inline Json point(const Point& p) { return Json{{"x", rat(p.x)}, {"y", rat(p.y)}}; }
inline Point point_from(const Json& j) { return {rat_from(j.at("x")), rat_from(j.at("y"))}; }

inline Json slope(const Slope& m) { return m.str(); }

inline Json circle(const TaxiCircle& c) { return Json{{"center", point(c.center())}, {"radius", rat(c.radius())}}; }

inline Json triangle(const Triangle& t) {
    Json arr = Json::array();
    for (const auto& p : t.v) arr.push_back(point(p));
    return arr;
}

inline Json classification(const TriangleClassification& c) {
    Json angles = Json::array();
    for (auto a : c.angle) angles.push_back(std::string(name_of(a)));
    return Json{{"angles", angles},
                {"inscribed", c.inscribed},
                {"completely_count", c.completely_count},
                {"minimally_inscribed", c.minimally_inscribed}};
}

inline Json isometry(const Isometry& g) {
    return Json{{"d4", std::string(name_of(g.g))}, {"shift", Json{{"x", rat(g.shift.x)}, {"y", rat(g.shift.y)}}}};
}

inline Json canonical(const CanonicalTriangle& ct) {
    return Json{{"A", point(ct.A)},
                {"B", point(ct.B)},
                {"C", point(ct.C)},
                {"m_a", slope(ct.m_a)},
                {"m_b", slope(ct.m_b)},
                {"m_c", slope(ct.m_c)},
                {"to_canonical", isometry(ct.to_canonical)},
                {"labels", Json::array({ct.labels[0], ct.labels[1], ct.labels[2]})}};
}

inline Json excircle(const Excircle& e) {
    return Json{{"side", std::string(1, name_of(e.side))},
                {"circle", circle(e.circle)},
                {"side_touch", point(e.side_touch)},
                {"ray1_touch", point(e.ray1_touch)},
                {"ray2_touch", point(e.ray2_touch)}};
}

inline Json complement(const FullComplementDecision& d) {
    Json per = Json::object();
    for (Side s : kAllSides) per[std::string(1, name_of(s))] = d.per_side[index_of(s)];
    return Json{{"all_exist", d.all_exist}, {"rule", std::string(name_of(d.rule))}, {"per_side", per}};
}

inline Json condition(const std::optional<ConditionValue>& c) {
    if (!c) return nullptr;
    return Json{{"lhs", rat(c->lhs)}, {"rhs", rat(c->rhs)}, {"holds", c->holds}};
}

inline Json decision(const ApolloniusDecision& d) {
    Json j{{"exists", d.exists}, {"rule", std::string(name_of(d.rule))}};
    j["lhs"] = d.lhs ? rat(*d.lhs) : Json(nullptr);
    j["rhs"] = d.rhs ? rat(*d.rhs) : Json(nullptr);
    j["conditions"] = Json{{"cond1", condition(d.conditions.cond1)},
                           {"cond2", condition(d.conditions.cond2)},
                           {"vertical", condition(d.conditions.vertical)}};
    j["frame"] = d.frame ? canonical(*d.frame) : Json(nullptr);
    return j;
}

inline Json apollonius_circle(const ApolloniusCircle& a) {
    return Json{{"circle", circle(a.circle)},
                {"tight", Json::array({rat(a.tight[0]), rat(a.tight[1]), rat(a.tight[2])})},
                {"in_family", a.in_family}};
}

inline Json trace(const ConditionTrace& t) {
    return Json{{"D", point(t.D)},
                {"E", point(t.E)},
                {"green_intercept", rat(t.green_intercept)},
                {"red_intercept", rat(t.red_intercept)},
                {"k", rat(t.k)},
                {"T2", point(t.T2)},
                {"T3", point(t.T3)},
                {"T4", point(t.T4)},
                {"cond1_holds", t.cond1_holds},
                {"cond2_holds", t.cond2_holds}};
}

inline Json region(const RegionVerdict& v) {
    return Json{{"inside", v.inside},
                {"lhs", v.lhs ? rat(*v.lhs) : Json(nullptr)},
                {"rhs", v.rhs ? rat(*v.rhs) : Json(nullptr)},
                {"slack", rat(v.slack)},
                {"slack_ok", v.slack_ok},
                {"cond2_denominator", rat(v.cond2_denominator)}};
}

}  // namespace taxi::io
