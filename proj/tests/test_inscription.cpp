#include "support.hpp"

#include "taxi/inscription.hpp"
#include "taxi/isometry.hpp"
#include "taxi/oracle.hpp"

#include <gtest/gtest.h>

using namespace taxi;

namespace {

Point P(const Rat& x, const Rat& y) { return {x, y}; }
Vec2 V(const Rat& x, const Rat& y) { return {x, y}; }

AngleClass swapped(AngleClass c) {
    if (c == AngleClass::StrictlyPositive) return AngleClass::StrictlyNegative;
    if (c == AngleClass::StrictlyNegative) return AngleClass::StrictlyPositive;
    return c;
}

}  // namespace

TEST(ClassifyAngle, Examples) {
    EXPECT_EQ(classify_angle(P(0, 0), V(2, 1), V(2, -1)), AngleClass::CompletelyInscribed);
    EXPECT_EQ(classify_angle(P(0, 0), V(1, 2), V(1, -2)), AngleClass::NotInscribed);
    EXPECT_EQ(classify_angle(P(0, 0), V(1, 0), V(0, 1)), AngleClass::StrictlyNegative);
}

TEST(ClassifyAngle, RayOnDiagonalDoesNotStraddle) {
    EXPECT_EQ(classify_angle(P(0, 0), V(1, 1), V(1, 0)), AngleClass::CompletelyInscribed);
    EXPECT_EQ(classify_angle(P(0, 0), V(1, 1), V(1, -1)), AngleClass::CompletelyInscribed);
}

TEST(ClassifyTriangle, MinimallyInscribedExample) {
    const auto t = Triangle::checked(P(0, 0), P(5, 1), P(3, 4));
    const auto c = classify_triangle(t);
    EXPECT_EQ(c.angle[0], AngleClass::StrictlyNegative);
    EXPECT_EQ(c.angle[1], AngleClass::StrictlyPositive);
    EXPECT_EQ(c.angle[2], AngleClass::CompletelyInscribed);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(c.angle[i], ref::classify_by_atan2(t[i + 1] - t[i], t[i + 2] - t[i]));
    EXPECT_TRUE(c.inscribed);
    EXPECT_EQ(c.completely_count, 1);
    EXPECT_TRUE(c.minimally_inscribed);
}

TEST(ClassifyTriangle, RightTriangleWithShallowHypotenuse) {
    const auto t = Triangle::checked(P(0, 0), P(4, 0), P(4, -2));
    const auto c = classify_triangle(t);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(c.angle[i], ref::classify_by_atan2(t[i + 1] - t[i], t[i + 2] - t[i]));
    EXPECT_TRUE(c.inscribed);
    EXPECT_EQ(c.completely_count, 1);
    EXPECT_EQ(c.angle[0], AngleClass::CompletelyInscribed);
}

TEST(ClassifyTriangle, NotInscribedExample) {
    const auto t = Triangle::checked(P(0, 0), P(1, 2), P(1, -2));
    const auto c = classify_triangle(t);
    EXPECT_EQ(c.angle[0], AngleClass::NotInscribed);
    EXPECT_EQ(ref::classify_by_atan2(t[1] - t[0], t[2] - t[0]), AngleClass::NotInscribed);
    EXPECT_FALSE(c.inscribed);
}

TEST(Circumcircles, UnitDiamondVertices) {
    const auto r = circumcircles(P(1, 0), P(0, 1), P(-1, 0));
    EXPECT_TRUE(r.contains(TaxiCircle{P(0, 0), Rat(1)}));
    // The unit circle starts a run: moving the center down keeps all three equidistant.
    ASSERT_EQ(r.families.size(), 1u);
    EXPECT_EQ(r.families[0].start, P(0, 0));
    EXPECT_TRUE(r.families[0].is_ray());
    EXPECT_TRUE(r.contains(TaxiCircle{P(0, -3), Rat(4)}));
    const auto v = oracle::oracle_circumcircle(P(1, 0), P(0, 1), P(-1, 0), Rat(8), Rat(2, 256));
    ASSERT_TRUE(oracle::is_witness(v));
    EXPECT_TRUE(r.contains(std::get<oracle::ExistsWitness>(v).circle));
}

TEST(Circumcircles, NotInscribedIsEmpty) {
    EXPECT_TRUE(circumcircles(P(0, 0), P(1, 2), P(1, -2)).empty());
    const auto v = oracle::oracle_circumcircle(P(0, 0), P(1, 2), P(1, -2), Rat(8), Rat(4, 256));
    EXPECT_TRUE(oracle::is_none(v));
}

TEST(Circumcircles, InscribedIsNonempty) {
    const auto r = circumcircles(P(0, 0), P(5, 1), P(3, 4));
    ASSERT_FALSE(r.empty());
    for (const auto& c : r.isolated)
        for (const auto& p : {P(0, 0), P(5, 1), P(3, 4)}) EXPECT_EQ(d1(c.center(), p), c.radius());
    const auto v = oracle::oracle_circumcircle(P(0, 0), P(5, 1), P(3, 4), Rat(8), Rat(9, 256));
    ASSERT_TRUE(oracle::is_witness(v));
    EXPECT_TRUE(r.contains(std::get<oracle::ExistsWitness>(v).circle));
}

TEST(Circumcircles, EveryReportedCircleIsEquidistant) {
    gen::Engine g(21);
    for (int i = 0; i < 300; ++i) {
        const auto t = gen::triangle(g);
        const auto r = circumcircles(t[0], t[1], t[2]);
        for (const auto& c : r.isolated)
            for (const auto& p : t.v) EXPECT_EQ(d1(c.center(), p), c.radius());
        for (const auto& f : r.families)
            for (const Rat& s : {Rat(0), Rat(1, 3), Rat(5)}) {
                if (f.t_max && *f.t_max < s) continue;
                for (const auto& p : t.v) EXPECT_EQ(d1(f.center_at(s), p), f.radius_at(s));
            }
    }
}

TEST(Property, SwapAndScaleInvariance) {
    gen::Engine g(22);
    for (int i = 0; i < 500; ++i) {
        const Vec2 u{gen::rational(g), gen::rational(g)}, w{gen::rational(g), gen::rational(g)};
        if (u.is_zero() || w.is_zero() || cross(u, w).is_zero()) continue;
        const auto c = classify_angle(P(0, 0), u, w);
        EXPECT_EQ(classify_angle(P(0, 0), w, u), c);
        EXPECT_EQ(classify_angle(P(0, 0), Rat(7, 3) * u, Rat(1, 5) * w), c);
        EXPECT_EQ(ref::classify_by_atan2(u, w), c);
    }
}

TEST(Property, IsometryEquivariance) {
    gen::Engine g(23);
    for (int i = 0; i < 100; ++i) {
        const auto t = gen::triangle(g);
        const Vec2 u = t[1] - t[0], w = t[2] - t[0];
        const auto c = classify_angle(t[0], u, w);
        for (D4 e : kAllD4) {
            const Isometry f{e, Vec2{gen::rational(g), gen::rational(g)}};
            const auto image = classify_angle(f.apply(t[0]), f.apply(u), f.apply(w));
            EXPECT_EQ(image, swaps_diagonals(e) ? swapped(c) : c);
        }
    }
}

TEST(Property, StrictAngleForcesOthersToOppositeSense) {
    gen::Engine g(24);
    for (int i = 0; i < 1000; ++i) {
        const auto c = classify_triangle(gen::triangle(g));
        for (std::size_t k = 0; k < 3; ++k) {
            for (std::size_t j : {(k + 1) % 3, (k + 2) % 3}) {
                if (c.angle[k] == AngleClass::StrictlyPositive) {
                    EXPECT_TRUE(negatively_inscribed(c.angle[j]));
                }
                if (c.angle[k] == AngleClass::StrictlyNegative) {
                    EXPECT_TRUE(positively_inscribed(c.angle[j]));
                }
            }
        }
    }
}

TEST(Property, InscribedHasACompletelyInscribedAngle) {
    gen::Engine g(25);
    for (int i = 0; i < 1000; ++i) {
        const auto c = classify_triangle(gen::triangle(g));
        if (c.inscribed) {
            EXPECT_GE(c.completely_count, 1);
        }
    }
}

TEST(Property, TwoOrThreeCompletelyInscribedNeedDiagonalSides) {
    // Random triangles rarely have diagonal sides; build them on purpose.
    gen::Engine g(26);
    int twos = 0, threes = 0;
    for (int i = 0; i < 3000; ++i) {
        const Point a{gen::rational(g, 6), gen::rational(g, 6)};
        const Rat s = gen::rational(g, 6);
        const Point b = a + Vec2{s, g() % 2 ? s : -s};
        const Rat q = gen::rational(g, 6);
        const Point c = g() % 2 ? Point{gen::rational(g, 6), gen::rational(g, 6)} : a + Vec2{q, g() % 2 ? q : -q};
        Triangle t{{a, b, c}};
        if (a == b || orientation(a, b, c) == 0) continue;
        const auto cls = classify_triangle(t);
        int diagonal = 0;
        for (std::size_t k = 0; k < 3; ++k) diagonal += Slope::through(t[k], t[k + 1]).kind() == SlopeKind::Diagonal;
        if (cls.completely_count == 2) {
            ++twos;
            EXPECT_GE(diagonal, 1);
        }
        if (cls.completely_count == 3) {
            ++threes;
            EXPECT_GE(diagonal, 2);
        }
    }
    EXPECT_GT(twos, 0);
    EXPECT_GT(threes, 0);
}

TEST(Property, CircumcirclesExistIffInscribed) {
    gen::Engine g(27);
    for (int i = 0; i < 1000; ++i) {
        const auto t = gen::triangle(g);
        EXPECT_EQ(!circumcircles(t[0], t[1], t[2]).empty(), classify_triangle(t).inscribed) << t.v[0] << t.v[1] << t.v[2];
    }
}
