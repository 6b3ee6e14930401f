#include <gtest/gtest.h>

#include "tanvar/parse.hpp"
#include "tanvar/polytope2d.hpp"
#include "tanvar/zero_dim.hpp"

using namespace tanvar;

namespace {

const Rationals Q;
const std::vector<std::string> XY{"x", "y"};

Polygon random_polygon(Xorshift64Star& rng) {
  std::vector<LatticePoint> pts;
  const int count = 1 + static_cast<int>(rng.below(6));
  for (int i = 0; i < count; ++i) pts.push_back({rng.between(-5, 5), rng.between(-5, 5)});
  return Polygon::hull(pts);
}

// Minkowski sum as the hull of all pairwise vertex sums.
Polygon brute_sum(const Polygon& p, const Polygon& q) {
  std::vector<LatticePoint> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  return Polygon::hull(pts);
}

}  // namespace

TEST(Polygon, HullIsCanonical) {
  auto p = Polygon::hull({{1, 1}, {0, 0}, {2, 0}, {1, 0}, {0, 2}, {2, 2}});
  EXPECT_EQ(p.vertices(), (std::vector<LatticePoint>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  EXPECT_TRUE(Polygon::hull({{3, 3}, {3, 3}}).is_point());
  EXPECT_TRUE(Polygon::hull({{0, 0}, {1, 1}, {2, 2}}).is_segment());
}

TEST(NewtonPolygon, Examples) {
  EXPECT_EQ(newton_polygon(parse_polynomial("x^2+y^2-1", XY, Q)), Polygon::hull({{0, 0}, {2, 0}, {0, 2}}));
  for (int m = 2; m <= 5; ++m) {
    auto f = parse_polynomial("2*x^" + std::to_string(m) + " + 3*y^" + std::to_string(m) + " - 1", XY, Q);
    EXPECT_EQ(newton_polygon(f), simplex2(m));
  }
  // m x^(m-1) (a1 x + b1 y + c1) + m y^(m-1) (a2 x + b2 y + c2) with m = 3
  auto tangency = parse_polynomial("3*x^2*(2*x + 5*y + 7) + 3*y^2*(11*x + 13*y + 17)", XY, Q);
  EXPECT_EQ(newton_polygon(tangency), tangency_trapezoid(3));
  EXPECT_EQ(tangency_trapezoid(3).vertices(), (std::vector<LatticePoint>{{0, 2}, {2, 0}, {3, 0}, {0, 3}}));
  EXPECT_THROW(newton_polygon(Polynomial<Rationals>(Q, 2)), Error);
}

TEST(Minkowski, Examples) {
  auto tri = simplex2(1);
  EXPECT_EQ(minkowski_sum(tri, Polygon::hull({{3, -1}})), tri.translate({3, -1}));
  EXPECT_EQ(minkowski_sum(tri, tri), simplex2(2));
  for (int m = 2; m <= 5; ++m) {
    auto s = minkowski_sum(simplex2(m), tangency_trapezoid(m));
    EXPECT_EQ(s, brute_sum(simplex2(m), tangency_trapezoid(m)));
    EXPECT_EQ(area(s), area(simplex2(m)) + area(tangency_trapezoid(m)) + m * m);
  }
}

TEST(Area, Examples) {
  EXPECT_EQ(area(Polygon::hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), 1);
  EXPECT_EQ(area(simplex2(1)), mpq_class(1, 2));
  // 3-simplex minus 2-simplex: 9/2 - 2
  EXPECT_EQ(area(tangency_trapezoid(3)), mpq_class(5, 2));
  for (long m = 2; m <= 5; ++m) EXPECT_EQ(area(tangency_trapezoid(m)), area(simplex2(m)) - area(simplex2(m - 1)));
  EXPECT_EQ(area(Polygon::hull({{0, 0}, {4, 4}})), 0);
}

TEST(MixedVolume, Examples) {
  EXPECT_EQ(mixed_volume_2d(simplex2(1), simplex2(1)), 1);
  auto sq = Polygon::hull({{0, 0}, {2, 0}, {2, 3}, {0, 3}});
  EXPECT_EQ(mixed_volume_2d(sq, sq), 2 * area(sq));
  for (long m = 2; m <= 5; ++m) EXPECT_EQ(mixed_volume_2d(simplex2(m), tangency_trapezoid(m)), m * m);
}

TEST(FaceRestriction, Examples) {
  auto f = parse_polynomial("x^2+y^2-1", XY, Q);
  auto a = face_restriction(f, {1, 1});
  EXPECT_EQ(a.m_v, 0);
  EXPECT_EQ(a.support_face, (std::vector<LatticePoint>{{0, 0}}));
  EXPECT_EQ(a.restricted, parse_polynomial("-1", XY, Q));
  auto b = face_restriction(f, {-1, 0});
  EXPECT_EQ(b.m_v, -2);
  EXPECT_EQ(b.restricted, parse_polynomial("x^2", XY, Q));
  // G1(t, s) = a10 + a11 t + a12 t^2 + s (b11 + 2 b12 t) for (t, t^2): v = (0, -1) keeps the s-part
  const std::vector<std::string> ts{"t", "s"};
  auto g1 = parse_polynomial("2 + 3*t + 5*t^2 + s*(7 + 22*t)", ts, Q);
  EXPECT_EQ(face_restriction(g1, {0, -1}).restricted, parse_polynomial("s*(7 + 22*t)", ts, Q));
  EXPECT_THROW(face_restriction(f, {0, 0}), Error);
}

TEST(Bkk, GenericLines) {
  auto v = bkk_check_2d(parse_polynomial("2*x + 3*y + 5", XY, Q), parse_polynomial("7*x - 11*y + 13", XY, Q));
  EXPECT_EQ(v.bound, 1);
  EXPECT_EQ(v.attained, Attainment::Attained);
}

TEST(Bkk, ParallelSegments) {
  auto v = bkk_check_2d(parse_polynomial("x - 1", XY, Q), parse_polynomial("x - 2", XY, Q));
  EXPECT_EQ(v.bound, 0);
  EXPECT_EQ(v.attained, Attainment::Attained);
  auto w = bkk_check_2d(parse_polynomial("x - 1", XY, Q), parse_polynomial("x*y - y", XY, Q));
  EXPECT_EQ(w.attained, Attainment::NotAttained);
  ASSERT_TRUE(w.witness.has_value());
}

TEST(Bkk, NonGenericCoefficientsDetected) {
  // x + y + 1 and x + y + 2 share the face x + y at infinity
  auto v = bkk_check_2d(parse_polynomial("x + y + 1", XY, Q), parse_polynomial("x + y + 2", XY, Q));
  EXPECT_EQ(v.bound, 1);
  EXPECT_EQ(v.attained, Attainment::NotAttained);
  EXPECT_EQ(*v.witness, (LatticePoint{-1, -1}));
}

TEST(Bkk, TangencySystemOfFermatCubic) {
  Xorshift64Star rng(51);
  const PrimeField Fp;
  for (int trial = 0; trial < 3; ++trial) {
    auto r = [&] { return std::to_string(rng.between(1, 1000)); };
    const std::string al = r(), be = r();
    auto f = parse_polynomial(al + "*x^3 + " + be + "*y^3 - 1", XY, Q);
    auto g = parse_polynomial("3*" + al + "*x^2*(" + r() + "*x + " + r() + "*y + " + r() + ") + 3*" + be + "*y^2*(" +
                                  r() + "*x - " + r() + "*y + " + r() + ")",
                              XY, Q);
    auto v = bkk_check_2d(f, g);
    EXPECT_EQ(v.bound, 9);
    EXPECT_EQ(v.attained, Attainment::Attained);
    // oracle: distinct solutions of the system, all in the torus for these coefficients
    Ideal<Rationals> I(Q, 2, {f, g});
    EXPECT_EQ(count_points(I, true, rng.fork()), 9);
    Ideal<Rationals> on_axes(Q, 2, {f, g, parse_polynomial("x*y", XY, Q)});
    EXPECT_EQ(count_points(on_axes, true, rng.fork()), 0);
  }
}

// Property suites -------------------------------------------------------------

TEST(Properties, MinkowskiMatchesPairwiseHull) {
  Xorshift64Star rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_polygon(rng), q = random_polygon(rng);
    EXPECT_EQ(minkowski_sum(p, q), brute_sum(p, q)) << p.to_string() << " + " << q.to_string();
  }
}

TEST(Properties, MixedVolumeSymmetryDilationPositivity) {
  Xorshift64Star rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_polygon(rng), q = random_polygon(rng);
    auto mv = mixed_volume_2d(p, q);
    EXPECT_EQ(mv, mixed_volume_2d(q, p));
    EXPECT_GE(mv, 0);
    EXPECT_GE(area(minkowski_sum(p, q)), area(p) + area(q));
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(mixed_volume_2d(p.dilate(k), q), k * mv);
  }
}

TEST(Properties, BezoutTable) {
  for (int d = 1; d <= 5; ++d)
    for (int e = 1; e <= 5; ++e) EXPECT_EQ(mixed_volume_2d(simplex2(d), simplex2(e)), d * e);
}
