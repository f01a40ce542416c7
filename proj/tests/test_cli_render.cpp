#include "taxi/cli.hpp"
#include "taxi/io.hpp"
#include "taxi/render.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <sstream>

using namespace taxi;

namespace {

Point P(const Rat& x, const Rat& y) { return {x, y}; }

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

io::Json run_json(std::vector<std::string> args) {
    const auto r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return io::Json::parse(r.out);
}

render::SceneSpec canonical_scene() {
    render::SceneOptions o;
    o.apollonius = false;
    return render::build_scene(realize_canonical(Rat(3, 4), Rat(1, 5), Slope::finite(Rat(5, 2)), Rat(5)), o);
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST(ParseTriangle, Examples) {
    const auto a = io::parse_triangle("0,0 5,1 3,4");
    EXPECT_EQ(a[1], P(5, 1));
    const auto b = io::parse_triangle("0,0 1/3,2 0.25,−1");
    EXPECT_EQ(b[1], P(Rat(1, 3), 2));
    EXPECT_EQ(b[2], P(Rat(1, 4), -1));
    EXPECT_EQ(io::parse_triangle("0,0 0.35,1 2,0")[1].x, Rat(7, 20));
    EXPECT_THROW(io::parse_triangle("0,0 1,1 2,2"), io::InputError);
}

TEST(ParseTriangle, DiagnosticsNameTheToken) {
    auto message = [](const std::string& text) {
        try {
            io::parse_triangle(text);
        } catch (const io::InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(message("0,0 1,x7 2,3").find("x7"), std::string::npos);
    EXPECT_NE(message("0,0 1;2 2,3").find("1;2"), std::string::npos);
    EXPECT_NE(message("0,0 2,3 2,3").find("2,3"), std::string::npos);
    EXPECT_NE(message("0,0 1,1 2,2").find("collinear"), std::string::npos);
    EXPECT_NE(message("0,0 1,1").find("three points"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"classify", "0,0 5,1 3,4"}).code, 0);
    const auto bad = run({"classify", "0,0 1,1 2,2"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("collinear"), std::string::npos);
    const auto malformed = run({"excircles", "0,0 1,q 2,2"});
    EXPECT_EQ(malformed.code, 1);
    EXPECT_NE(malformed.err.find("'q'"), std::string::npos);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"classify"}).code, 1);
    EXPECT_EQ(run({"region", "--ma", "1/2", "--mb", "3/4"}).code, 1);
    EXPECT_EQ(run({"concurrency", "0,0 1,2 1,-2"}).code, 1);
    EXPECT_EQ(run({"check", "0,0 5,1 3,4"}).code, 0);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ApolloniusMinimalExample) {
    const auto j = run_json({"apollonius", "0,0 5,1 3,4"});
    EXPECT_EQ(j["schema"], "v1");
    const auto& a = j["apollonius"];
    EXPECT_EQ(a["exists"], true);
    EXPECT_EQ(a["rule"], "Lemma7Cond1");
    EXPECT_EQ(a["lhs"], "31/30");
    EXPECT_EQ(a["rhs"], "1/5");
    EXPECT_EQ(a["frame"]["m_a"], "3/4");
    EXPECT_EQ(a["frame"]["m_b"], "-2/3");
    EXPECT_EQ(a["frame"]["m_c"], "5");
    EXPECT_EQ(a["circles"][0]["circle"]["radius"], "57/4");
}

TEST(Cli, ApolloniusNeitherCondition) {
    const auto t = realize_canonical(Rat(3, 5), Rat(3, 10), Slope::finite(Rat(-8)));
    const auto j = run_json({"apollonius", io::triangle_text(t)});
    const auto& a = j["apollonius"];
    EXPECT_EQ(a["exists"], false);
    EXPECT_EQ(a["conditions"]["cond1"]["lhs"], "-11/80");
    EXPECT_EQ(a["conditions"]["cond1"]["rhs"], "-1/8");
    EXPECT_EQ(a["conditions"]["cond2"]["lhs"], "43/40");
    EXPECT_EQ(a["conditions"]["cond2"]["rhs"], "-1/8");
    EXPECT_TRUE(a["circles"].empty());
}

TEST(Cli, RegionRasterAndSweep) {
    const auto j = run_json({"region", "--ma", "3/4", "--mb", "1/5", "--raster", "201", "--mc-sweep", "64"});
    const auto& r = j["region"];
    EXPECT_EQ(r["inside"], true);
    EXPECT_EQ(r["lhs"], "8/3");
    EXPECT_EQ(r["rhs"], "35/13");
    EXPECT_EQ(r["raster"]["rows"].size(), 201u);
    EXPECT_EQ(r["raster"]["rows"][0].get<std::string>().size(), 201u);
    EXPECT_EQ(r["sweep"].size(), 65u);
    EXPECT_EQ(r["sweep_all_exist"], true);
}

TEST(Cli, ExcirclesWritesJsonFile) {
    const std::string path = ::testing::TempDir() + "excircles.json";
    const auto r = run({"excircles", "0,0 5,1 3,4", "--json", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(read_file(path), r.out);
    const auto j = io::Json::parse(r.out);
    EXPECT_EQ(j["excircles"]["circles"]["a"]["circle"]["center"]["x"], "35/6");
    EXPECT_EQ(j["excircles"]["closed_form"]["opposite_ab"]["side"], "c");
}

TEST(Json, EveryRationalRoundTrips) {
    std::size_t seen = 0;
    std::function<void(const io::Json&)> walk = [&](const io::Json& j) {
        if (j.is_structured()) {
            for (const auto& x : j) walk(x);
            return;
        }
        if (!j.is_string()) return;
        const auto s = j.get<std::string>();
        try {
            const Rat r = Rat::parse(s);
            EXPECT_EQ(r.str(), s);
            EXPECT_EQ(io::rat_from(io::rat(r)), r);
            ++seen;
        } catch (const std::invalid_argument&) {
        }
    };
    walk(run_json({"apollonius", "0,0 5,1 3,4"}));
    walk(run_json({"excircles", "-7/3,1/9 4,-5/6 11/2,13/7"}));
    walk(run_json({"classify", "1,0 0,1 -1,0"}));
    EXPECT_GT(seen, 50u);
    gen::Engine g(51);
    for (int i = 0; i < 200; ++i) {
        const Point p{gen::rational(g, 1000), gen::rational(g, 1000)};
        EXPECT_EQ(io::point_from(io::point(p)), p);
    }
}

TEST(Render, DeterministicAndGolden) {
    const auto scene = canonical_scene();
    const std::string a = render::render_svg(scene), b = render::render_svg(canonical_scene());
    EXPECT_EQ(a, b);
    EXPECT_EQ(count(a, "<polygon"), 4u);
    EXPECT_GE(count(a, "<line"), 6u);
    EXPECT_NE(a.find("stroke-dasharray"), std::string::npos);
    const std::string golden = read_file(std::string(TAXI_GOLDEN_DIR) + "/canonical_frame.svg");
    ASSERT_FALSE(golden.empty()) << "missing golden file";
    EXPECT_EQ(a, golden);
}

TEST(Render, ElementOrder) {
    const auto s = render::render_svg(render::build_scene(Triangle::checked(P(0, 0), P(5, 1), P(3, 4))));
    const auto tri = s.find("stroke=\"#000000\"");
    const auto ex_a = s.find(render::palette::excircle[0]);
    const auto ex_c = s.find(render::palette::excircle[2]);
    const auto ap = s.find(render::palette::apollonius);
    const auto line = s.find("<line");
    const auto text = s.find("<text");
    EXPECT_LT(tri, ex_a);
    EXPECT_LT(ex_a, ex_c);
    EXPECT_LT(ex_c, ap);
    EXPECT_LT(ap, line);
    EXPECT_LT(line, text);
    EXPECT_EQ(count(s, "<polygon"), 5u);
}

TEST(Render, TriangleOnly) {
    render::SceneSpec s;
    s.triangle = Triangle::checked(P(0, 0), P(5, 1), P(3, 4));
    const auto svg = render::render_svg(s);
    EXPECT_EQ(count(svg, "<polygon"), 1u);
    EXPECT_EQ(count(svg, "<line"), 0u);
    EXPECT_EQ(count(svg, "<text"), 0u);
    // Bounding box [0,5]x[0,4] grown by 10% per side.
    EXPECT_NE(svg.find("viewBox=\"-0.5 -4.4 6 4.8\""), std::string::npos);
}

TEST(Render, CliMatchesLibrary) {
    const auto t = realize_canonical(Rat(3, 4), Rat(1, 5), Slope::finite(Rat(5, 2)), Rat(5));
    const auto r = run({"render", io::triangle_text(t), "--no-apollonius"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, render::render_svg(canonical_scene()));
}
