#include "support.hpp"

#include "taxi/geometry.hpp"
#include "taxi/isometry.hpp"
#include "taxi/linear_system.hpp"
#include "taxi/rational.hpp"

#include <gtest/gtest.h>

using namespace taxi;

namespace {

Point P(const Rat& x, const Rat& y) { return {x, y}; }

}  // namespace

TEST(Rational, ParsesIntegersFractionsAndDecimalsExactly) {
    EXPECT_EQ(Rat::parse("7"), Rat(7));
    EXPECT_EQ(Rat::parse("-3/6"), Rat(-1, 2));
    EXPECT_EQ(Rat::parse("0.35"), Rat(7, 20));
    EXPECT_EQ(Rat::parse("-1.25"), Rat(-5, 4));
    EXPECT_EQ(Rat::parse("−2"), Rat(-2));
    EXPECT_EQ(Rat::parse("1.075"), Rat(43, 40));
    EXPECT_EQ(Rat::parse("010/08"), Rat(5, 4));
    EXPECT_THROW(Rat::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rat::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rat::parse("1e5"), std::invalid_argument);
}

TEST(Rational, ArithmeticIsExact) {
    EXPECT_EQ(Rat(1, 3) + Rat(1, 6), Rat(1, 2));
    EXPECT_EQ((Rat(2, 3) * Rat(9, 4)).str(), "3/2");
    EXPECT_EQ(Rat(-4, 2).str(), "-2");
    EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
    EXPECT_LT(Rat(7, 20), Rat(2, 5));
}

TEST(D1, Examples) {
    EXPECT_EQ(d1(P(0, 0), P(0, 0)), Rat(0));
    EXPECT_EQ(d1(P(0, 0), P(3, 4)), Rat(7));
    const Point b{Rat(46, 7), Rat(69, 14)};
    const Rat expected = (Rat(46, 7) - Rat(5)) + (Rat(69, 14) - Rat(1));
    EXPECT_EQ(expected, Rat(11, 7) + Rat(55, 14));
    EXPECT_EQ(d1(P(5, 1), b), expected);
    EXPECT_EQ(d1(P(5, 1), b), Rat(77, 14));
}

TEST(DistTo, LineMatchesSamplingOracle) {
    const Line l = line_through(P(0, 1), P(2, 2));  // y = x/2 + 1
    EXPECT_EQ(dist_to(P(0, 0), l), Rat(1));
    const double m = ref::sampled_min([](double t) { return std::abs(2 * t) + std::abs(1 + t); }, -50, 50);
    EXPECT_NEAR(m, 1.0, 1e-9);
}

TEST(DistTo, VerticalLineAndSegment) {
    EXPECT_EQ(dist_to(P(0, 0), line_through(P(2, 0), P(2, 5))), Rat(2));
    const Segment s{P(1, 1), P(2, 2)};
    EXPECT_EQ(dist_to(P(0, 0), s), Rat(2));
    EXPECT_EQ(nearest_point(P(0, 0), s), P(1, 1));
    const double m = ref::sampled_min([](double t) { return std::abs(1 + t) + std::abs(1 + t); }, 0, 1);
    EXPECT_NEAR(m, 2.0, 1e-9);
}

TEST(Tangent, Examples) {
    const TaxiCircle c{P(0, 0), Rat(2)};
    EXPECT_TRUE(tangent(c, line_through(P(2, 0), P(2, 1))));
    EXPECT_TRUE(tangent(c, line_through(P(0, 2), P(1, 3))));  // y = x + 2 lies along a side
    EXPECT_FALSE(tangent(c, line_through(P(1, 0), P(1, 1))));
}

TEST(EncloseDist, Examples) {
    EXPECT_EQ(enclose_dist(P(0, 0), TaxiCircle{P(0, 0), Rat(3)}), Rat(3));
    EXPECT_EQ(enclose_dist(P(0, 0), TaxiCircle{P(4, 0), Rat(1)}), Rat(5));
    const TaxiCircle inner{P(-2, 3), Rat(1, 2)};
    EXPECT_EQ(enclose_dist(P(1, 1), inner), Rat(11, 2));
    EXPECT_EQ(ref::enclose_by_vertices(P(1, 1), inner), Rat(11, 2));
}

TEST(Cheb, Examples) {
    EXPECT_EQ(cheb(P(0, 0)), P(0, 0));
    EXPECT_EQ(cheb(P(3, 4)), P(7, -1));
    EXPECT_EQ(linf(P(0, 0), P(7, -1)), Rat(7));
    const Point p{Rat(5, 3), Rat(-7, 2)};
    EXPECT_EQ(cheb_inverse(cheb(p)), p);
}

TEST(Isometry, Examples) {
    EXPECT_EQ(Isometry{}.apply(P(2, 3)), P(2, 3));
    EXPECT_EQ((Isometry{D4::ReflectDiag, {}}).apply(P(2, 3)), P(3, 2));
    EXPECT_EQ((Isometry{D4::ReflectX0, Vec2{Rat(1), Rat(0)}}).apply(P(2, 3)), P(-1, 3));
}

TEST(Isometry, InverseAndComposeRoundTrip) {
    gen::Engine g(3);
    for (D4 a : kAllD4)
        for (D4 b : kAllD4) {
            const Isometry f{a, Vec2{gen::rational(g), gen::rational(g)}};
            const Isometry h{b, Vec2{gen::rational(g), gen::rational(g)}};
            const Point p{gen::rational(g), gen::rational(g)};
            EXPECT_EQ(f.inverse().apply(f.apply(p)), p);
            EXPECT_EQ(compose(f, h).apply(p), f.apply(h.apply(p)));
        }
}

TEST(Slope, VerticalIsFirstClass) {
    EXPECT_TRUE(Slope::through(P(1, 0), P(1, 5)).is_vertical());
    EXPECT_EQ(Slope::through(P(0, 0), P(2, 1)).value(), Rat(1, 2));
    EXPECT_EQ(Slope::vertical().kind(), SlopeKind::Steep);
    EXPECT_EQ(Slope::finite(Rat(-1)).kind(), SlopeKind::Diagonal);
    EXPECT_EQ(Slope::finite(Rat(1, 3)).kind(), SlopeKind::Shallow);
    EXPECT_THROW((void)Slope::vertical().value(), PreconditionError);
}

TEST(TaxiCircle, RejectsNonPositiveRadius) { EXPECT_THROW(TaxiCircle(P(0, 0), Rat(0)), PreconditionError); }

TEST(Triangle, Validation) {
    EXPECT_THROW(Triangle::checked(P(0, 0), P(1, 1), P(2, 2)), InvalidTriangle);
    EXPECT_THROW(Triangle::checked(P(0, 0), P(0, 0), P(2, 1)), InvalidTriangle);
    EXPECT_NO_THROW(Triangle::checked(P(0, 0), P(5, 1), P(3, 4)));
}

TEST(Property, MetricAxioms) {
    gen::Engine g(11);
    for (int i = 0; i < 500; ++i) {
        const Point p{gen::rational(g), gen::rational(g)}, q{gen::rational(g), gen::rational(g)},
            r{gen::rational(g), gen::rational(g)};
        EXPECT_GE(d1(p, q), Rat(0));
        EXPECT_EQ(d1(p, q).is_zero(), p == q);
        EXPECT_EQ(d1(p, q), d1(q, p));
        EXPECT_LE(d1(p, r), d1(p, q) + d1(q, r));
    }
}

TEST(Property, IsometriesPreserveD1) {
    gen::Engine g(12);
    for (D4 e : kAllD4)
        for (int i = 0; i < 50; ++i) {
            const Isometry f{e, Vec2{gen::rational(g), gen::rational(g)}};
            const Point p{gen::rational(g), gen::rational(g)}, q{gen::rational(g), gen::rational(g)};
            EXPECT_EQ(d1(f.apply(p), f.apply(q)), d1(p, q));
        }
}

TEST(Property, ChebMapsD1ToLinf) {
    gen::Engine g(13);
    for (int i = 0; i < 500; ++i) {
        const Point p{gen::rational(g), gen::rational(g)}, q{gen::rational(g), gen::rational(g)};
        EXPECT_EQ(linf(cheb(p), cheb(q)), d1(p, q));
    }
}

TEST(Property, DistToAgreesWithReferenceAndSampling) {
    gen::Engine g(14);
    for (int i = 0; i < 300; ++i) {
        const Point c{gen::rational(g), gen::rational(g)}, a{gen::rational(g), gen::rational(g)},
            b{gen::rational(g), gen::rational(g)};
        if (a == b) continue;
        const Rat ds = dist_to(c, Segment{a, b});
        const Rat dr = dist_to(c, ray_through(a, b));
        EXPECT_EQ(ds, ref::dist_segment(c, a, b));
        EXPECT_EQ(dr, ref::dist_ray(c, a, b));
        const double ax = a.x.to_double(), ay = a.y.to_double(), dx = (b - a).x.to_double(), dy = (b - a).y.to_double();
        const double cx = c.x.to_double(), cy = c.y.to_double();
        auto f = [&](double t) { return std::abs(ax + t * dx - cx) + std::abs(ay + t * dy - cy); };
        EXPECT_NEAR(ref::sampled_min(f, 0, 1), ds.to_double(), 1e-7);

        const TaxiCircle circ{c, ds};
        EXPECT_TRUE(tangent(circ, Segment{a, b}));
        EXPECT_FALSE(tangent(TaxiCircle{c, ds + Rat(1, 7)}, Segment{a, b}));
    }
}

TEST(Property, EncloseDistIsMaxOverVertices) {
    gen::Engine g(15);
    for (int i = 0; i < 300; ++i) {
        const Point c{gen::rational(g), gen::rational(g)};
        const TaxiCircle inner{{gen::rational(g), gen::rational(g)}, abs(gen::rational(g)) + Rat(1, 3)};
        EXPECT_EQ(enclose_dist(c, inner), ref::enclose_by_vertices(c, inner));
    }
}

TEST(LinearSystem, FeasibilityAndLexmin) {
    linear::System s(2);
    s.ge({Rat(1), Rat(0)}, Rat(1));   // x >= 1
    s.ge({Rat(0), Rat(1)}, Rat(2));   // y >= 2
    s.le({Rat(1), Rat(1)}, Rat(10));  // x + y <= 10
    ASSERT_TRUE(s.feasible());
    const std::size_t order[] = {0, 1};
    const auto m = s.lexmin(order);
    ASSERT_TRUE(m);
    EXPECT_EQ((*m)[0], Rat(1));
    EXPECT_EQ((*m)[1], Rat(2));
    s.gt({Rat(1), Rat(1)}, Rat(10));
    EXPECT_FALSE(s.feasible());
}

TEST(LinearSystem, EqualityRank) {
    linear::System s(3);
    s.eq({Rat(1), Rat(1), Rat(0)}, Rat(1));
    s.eq({Rat(2), Rat(2), Rat(0)}, Rat(2));
    s.eq({Rat(0), Rat(1), Rat(-1)}, Rat(0));
    EXPECT_EQ(s.equality_rank(), 2u);
    const auto w = s.witness();
    ASSERT_TRUE(w);
    EXPECT_EQ((*w)[0] + (*w)[1], Rat(1));
    EXPECT_EQ((*w)[1], (*w)[2]);
}
