#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "quadratica/geometry.hpp"

using namespace quadratica;

namespace {

struct Reference {
    double area;
    double apothem;
    double volume;
};

// textbook closed forms for unit edge
Reference reference(Solid s)
{
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0), r6 = std::sqrt(6.0);
    switch (s) {
    case Solid::Tetrahedron: return {r3, 1 / (2 * r6), 1 / (6 * r2)};
    case Solid::Octahedron: return {2 * r3, 1 / r6, r2 / 3};
    case Solid::Icosahedron: return {5 * r3, (3 * r3 + std::sqrt(15.0)) / 12, 5 * (3 + r5) / 12};
    case Solid::Hexahedron: return {6, 0.5, 1};
    case Solid::Dodecahedron:
        return {3 * std::sqrt(25 + 10 * r5), 0.5 * std::sqrt((25 + 11 * r5) / 10), (15 + 7 * r5) / 4};
    }
    return {};
}

int face_count(Solid s)
{
    switch (s) {
    case Solid::Tetrahedron: return 4;
    case Solid::Octahedron: return 8;
    case Solid::Icosahedron: return 20;
    case Solid::Hexahedron: return 6;
    case Solid::Dodecahedron: return 12;
    }
    return 0;
}

} // namespace

TEST(GoldenCut, UnitLength)
{
    const GoldenCut c = golden_cut(BigRational(1));
    EXPECT_EQ(c.a, golden_ratio() - BigRational(1));
    EXPECT_EQ(c.a * golden_ratio(), BigRational(1));
    EXPECT_NEAR(c.a.to_double(), 0.6180339887, 1e-10);
    EXPECT_NEAR(c.b.to_double(), 0.3819660113, 1e-10);
    EXPECT_TRUE(c.proportion && c.multiplicative);
}

TEST(GoldenCut, OnePlusPhi)
{
    const GoldenCut c = golden_cut(golden_ratio() + BigRational(1));
    EXPECT_EQ(c.a, golden_ratio());
    EXPECT_EQ(c.b, BigRational(1));
    EXPECT_EQ((c.a + c.b) / c.a, c.a / c.b);
}

TEST(GoldenCut, RationalLengths)
{
    for (long n = 1; n <= 40; ++n) {
        for (long d = 1; d <= 7; ++d) {
            const GoldenCut c = golden_cut(BigRational(n, d));
            ASSERT_TRUE(c.proportion && c.multiplicative);
            EXPECT_EQ(c.a + c.b, BigRational(n, d));
        }
    }
    try {
        golden_cut(BigRational(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonPositiveLength);
    }
    EXPECT_THROW(golden_cut(BigRational(-3)), Error);
}

TEST(Platonic, Examples)
{
    const PlatonicRow t = platonic(Solid::Tetrahedron, 1);
    EXPECT_EQ(t.volume.squared(), BigRational(2, 144));
    EXPECT_NEAR(t.volume.value(), std::sqrt(2.0) / 12, 1e-15);

    const PlatonicRow h = platonic(Solid::Hexahedron, 2);
    EXPECT_EQ(h.total_area.squared(), BigRational(24 * 24));
    EXPECT_EQ(h.volume.squared(), BigRational(64));

    const PlatonicRow o = platonic(Solid::Octahedron, 1);
    EXPECT_NEAR(o.volume.value(), std::sqrt(2.0) / 3, 1e-15);
    EXPECT_NEAR(o.volume.value(), 2 * std::sqrt(3.0) * (std::sqrt(6.0) / 6) / 3, 1e-15);
    EXPECT_TRUE(o.volume_identity_exact());

    EXPECT_THROW(platonic(Solid::Icosahedron, 0), Error);
    EXPECT_THROW(platonic(Solid::Icosahedron, BigRational(-1, 2)), Error);
}

TEST(Platonic, MatchesTextbookFormulas)
{
    for (Solid s : kAllSolids) {
        const PlatonicRow r = platonic(s, 1);
        const Reference ref = reference(s);
        EXPECT_NEAR(r.total_area.value(), ref.area, 1e-12 * ref.area) << solid_name(s);
        EXPECT_NEAR(r.apothem.value(), ref.apothem, 1e-12) << solid_name(s);
        EXPECT_NEAR(r.volume.value(), ref.volume, 1e-12 * ref.volume) << solid_name(s);
        EXPECT_EQ(r.total_area.squared(), r.face_area.squared() * BigRational(face_count(s) * face_count(s)));
    }
}

TEST(Platonic, VolumeIsAreaTimesApothemOverThree)
{
    for (Solid s : kAllSolids) {
        for (long n = 1; n <= 12; ++n) {
            const PlatonicRow r = platonic(s, BigRational(n, 5));
            EXPECT_TRUE(r.volume_identity_exact()) << solid_name(s);
            EXPECT_LE(r.volume_identity_residual(), 1e-12);
        }
    }
}

TEST(Platonic, ScalingLaws)
{
    for (Solid s : kAllSolids) {
        const PlatonicRow unit = platonic(s, 1);
        for (long n = 1; n <= 9; ++n) {
            const BigRational lam(n, 3);
            const PlatonicRow r = platonic(s, lam);
            const BigRational l2 = lam * lam, l3 = l2 * lam;
            EXPECT_EQ(r.volume.squared(), unit.volume.squared() * (l3 * l3));
            EXPECT_EQ(r.total_area.squared(), unit.total_area.squared() * (l2 * l2));
            EXPECT_EQ(r.apothem.squared(), unit.apothem.squared() * l2);
        }
    }
}

TEST(Platonic, ApothemSquaredExact)
{
    // squared table entries worked by hand
    EXPECT_EQ(platonic(Solid::Tetrahedron, 1).apothem.squared(), BigRational(1, 24));
    EXPECT_EQ(platonic(Solid::Octahedron, 1).apothem.squared(), BigRational(1, 6));
    EXPECT_EQ(platonic(Solid::Hexahedron, 1).apothem.squared(), BigRational(1, 4));
    EXPECT_EQ(platonic(Solid::Icosahedron, 1).apothem.squared(),
              QuadElem::make(BigRational(7, 24), BigRational(3, 24), 5));
    EXPECT_EQ(platonic(Solid::Dodecahedron, 1).apothem.squared(),
              QuadElem::make(BigRational(25, 40), BigRational(11, 40), 5));
}

TEST(Platonic, ParseSolid)
{
    EXPECT_EQ(parse_solid("cube"), Solid::Hexahedron);
    EXPECT_EQ(parse_solid("dodeca"), Solid::Dodecahedron);
    EXPECT_EQ(parse_solid("icosahedron"), Solid::Icosahedron);
    EXPECT_THROW(parse_solid("sphere"), Error);
}

TEST(Trajectory, FortyFiveDegrees)
{
    const Trajectory t = trajectory(10, std::numbers::pi / 4, 9.8);
    EXPECT_NEAR(t.range, 10.204081632653061, 1e-9);
    EXPECT_TRUE(t.cross_checked);
    EXPECT_NEAR(t.apex_y, -t.b * t.b / (4 * t.a), 1e-12);
    EXPECT_NEAR(t.y(t.range), 0.0, 1e-9);
    // vertex from the exact solver on a rational approximation
    const VertexForm v = vertex(Quadratic(BigRational::parse("-0.098"), 1, 0));
    EXPECT_NEAR(v.h.to_double(), t.apex_x, 1e-9);
    EXPECT_NEAR(v.k.to_double(), t.apex_y, 1e-9);
}

TEST(Trajectory, ShallowAngle)
{
    const Trajectory t = trajectory(10, 0.01, 9.8);
    EXPECT_LT(t.apex_y, 0.001);
    EXPECT_TRUE(t.cross_checked);
}

TEST(Trajectory, Errors)
{
    try {
        trajectory(10, 0, 9.8);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidAngle);
    }
    EXPECT_THROW(trajectory(10, std::numbers::pi / 2, 9.8), Error);
    EXPECT_THROW(trajectory(-1, 0.5, 9.8), Error);
    EXPECT_THROW(trajectory(10, 0.5, 0), Error);
}

TEST(Trajectory, SamplesIncreaseAndLand)
{
    for (double beta = 0.05; beta < 1.55; beta += 0.1) {
        const Trajectory t = trajectory(25, beta, 9.81);
        ASSERT_TRUE(t.cross_checked) << beta;
        const auto pts = sample_trajectory(t, 101);
        ASSERT_EQ(pts.size(), 101u);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            EXPECT_GT(pts[i].first, pts[i - 1].first);
            EXPECT_GE(pts[i].second, -1e-9);
        }
        EXPECT_NEAR(pts.back().second, 0.0, 1e-9);
    }
    EXPECT_THROW(sample_trajectory(trajectory(1, 0.5, 1), 1), Error);
}
