#include <gtest/gtest.h>

#include "tanvar/variety.hpp"
#include "test_support.hpp"

using namespace tanvar;

namespace {

const Rationals Q;
const PrimeField Fp;

Variety<Rationals> qv(std::size_t n, const std::vector<std::string>& gens, const std::string& label = "") {
  return make_variety(n, gens, Q, label);
}

Polynomial<Rationals> poly(const std::string& s, std::size_t n) {
  auto names = indexed_names(n / 2, "x");
  for (const auto& y : indexed_names(n / 2, "y")) names.push_back(y);
  return parse_polynomial(s, names, Q);
}

template <class F>
bool same_ideal(const Ideal<F>& a, const Ideal<F>& b) {
  for (const auto& g : a.generators)
    if (!ideal_membership(g, b)) return false;
  for (const auto& g : b.generators)
    if (!ideal_membership(g, a)) return false;
  return true;
}

}  // namespace

TEST(MakeVariety, Examples) {
  auto circle = qv(2, {"x1^2+x2^2-1"});
  EXPECT_EQ(circle.dimension(), 1);
  EXPECT_EQ(circle.deg(), 2);
  auto cubic = qv(3, {"x2 - x1^2", "x3 - x1^3"});
  EXPECT_EQ(cubic.dimension(), 1);
  EXPECT_EQ(cubic.deg(), 3);
  EXPECT_EQ(random_section_degree(cubic, 3), 3);
  auto line = qv(2, {"x1 - 1"});
  EXPECT_EQ(line.dimension(), 1);
  EXPECT_EQ(line.deg(), 1);
  auto empty = qv(2, {"x1", "x1 - 1"});
  EXPECT_TRUE(empty.is_empty());
  EXPECT_EQ(empty.deg(), 0);
  EXPECT_THROW(qv(2, {"x3"}), Error);
}

TEST(Jacobian, Examples) {
  auto J = jacobian(qv(2, {"x1^2+x2^2-1"}));
  ASSERT_EQ(J.size(), 1u);
  EXPECT_EQ(J[0][0], parse_polynomial("2*x1", {"x1", "x2"}, Q));
  EXPECT_EQ(J[0][1], parse_polynomial("2*x2", {"x1", "x2"}, Q));
  auto L = jacobian(qv(2, {"x1 - 1"}));
  EXPECT_EQ(L[0][0], parse_polynomial("1", {"x1", "x2"}, Q));
  EXPECT_TRUE(L[0][1].is_zero());
  const std::vector<std::string> v3{"x1", "x2", "x3"};
  auto T = jacobian(qv(3, {"x2 - x1^2", "x3 - x1^3"}));
  EXPECT_EQ(T[0], (std::vector<Polynomial<Rationals>>{parse_polynomial("-2*x1", v3, Q), parse_polynomial("1", v3, Q),
                                                      parse_polynomial("0", v3, Q)}));
  EXPECT_EQ(T[1], (std::vector<Polynomial<Rationals>>{parse_polynomial("-3*x1^2", v3, Q), parse_polynomial("0", v3, Q),
                                                      parse_polynomial("1", v3, Q)}));
}

TEST(Smoothness, Examples) {
  for (auto mode : {SmoothnessMode::Probabilistic, SmoothnessMode::Exact}) {
    EXPECT_EQ(smoothness_probe(qv(2, {"x1^2+x2^2-1"}), mode, 1).kind, SmoothnessKind::SmoothEvidence);
    EXPECT_EQ(smoothness_probe(qv(2, {"x1 - 1"}), mode, 1).kind, SmoothnessKind::SmoothEvidence);
  }
  auto node = smoothness_probe(qv(2, {"x2^2 - x1^2*(x1+1)"}), SmoothnessMode::Exact, 1);
  EXPECT_EQ(node.kind, SmoothnessKind::SingularWitness);
  ASSERT_TRUE(node.witness.has_value());
  EXPECT_EQ(*node.witness, (std::vector<std::string>{"0", "0"}));
  EXPECT_FALSE(node.witness_modular);
  // a doubled line is singular everywhere, so sampling finds it
  auto dbl = smoothness_probe(qv(2, {"x1^2"}), SmoothnessMode::Probabilistic, 2);
  EXPECT_EQ(dbl.kind, SmoothnessKind::SingularWitness);
  EXPECT_TRUE(dbl.witness_modular);
}

TEST(Smoothness, ProbabilisticSamplesPoints) {
  auto v = smoothness_probe(qv(3, {"x2 - x1^2", "x3 - x1^3"}), SmoothnessMode::Probabilistic, 5);
  EXPECT_EQ(v.kind, SmoothnessKind::SmoothEvidence);
  EXPECT_EQ(v.samples, kSmoothnessSamples);
}

TEST(TangentBundle, Examples) {
  auto line = tangent_bundle(qv(2, {"x1 - 1"}));
  EXPECT_TRUE(same_ideal(line.total.ideal, Ideal<Rationals>(Q, 4, {poly("x1 - 1", 4), poly("y1", 4)})));
  EXPECT_EQ(line.total.dimension(), 2);
  EXPECT_EQ(line.total.deg(), 1);

  auto circle = tangent_bundle(qv(2, {"x1^2+x2^2-1"}));
  EXPECT_EQ(circle.total.ideal.generators,
            (std::vector<Polynomial<Rationals>>{poly("x1^2+x2^2-1", 4), poly("2*x1*y1+2*x2*y2", 4)}));
  EXPECT_EQ(circle.total.dimension(), 2);
  EXPECT_EQ(circle.total.deg(), 4);

  auto parabola = tangent_bundle(qv(2, {"x2 - x1^2"}));
  EXPECT_EQ(parabola.total.ideal.generators, (std::vector<Polynomial<Rationals>>{poly("x2 - x1^2", 4), poly("-2*x1*y1 + y2", 4)}));
  EXPECT_EQ(parabola.total.deg(), 3);
}

TEST(TangentBundle, DimensionMismatchOnBadInput) {
  auto expect_mismatch = [](const Variety<Rationals>& v) {
    try {
      tangent_bundle(v);
      FAIL() << "expected DimensionMismatch for " << v.label;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
  };
  expect_mismatch(qv(2, {"x1^2"}, "doubled line"));
  expect_mismatch(qv(3, {"x1*x2", "x1*x3", "x2*x3"}, "coordinate axes"));
}

TEST(Tangential, Examples) {
  auto axis = tangential_variety(tangent_bundle(qv(2, {"x2"})));
  EXPECT_EQ(axis.dimension(), 1);
  EXPECT_EQ(axis.deg(), 1);
  EXPECT_TRUE(same_ideal(axis.ideal, Ideal<Rationals>(Q, 2, {parse_polynomial("y2", {"y1", "y2"}, Q)})));

  auto parabola = tangential_variety(tangent_bundle(qv(2, {"x2 - x1^2"})));
  EXPECT_TRUE(parabola.ideal.generators.empty());
  EXPECT_EQ(parabola.dimension(), 2);
  EXPECT_EQ(parabola.deg(), 1);

  auto sigma = tangential_variety(tangent_bundle(qv(3, {"x2 - 1/3*x1^3 + x1", "x3 - 1/4*x1^4 + 1/2*x1^2"})));
  EXPECT_EQ(sigma.dimension(), 2);
  // tangent directions (1, t^2 - 1, t^3 - t) satisfy y3^2 y1 = y2^2 (y2 + y1) after scaling
  auto y = [](const std::string& s) { return parse_polynomial(s, {"y1", "y2", "y3"}, Q); };
  EXPECT_TRUE(ideal_membership(y("y3^2*y1 - y2^2*y2 - y2^2*y1"), sigma.ideal));
}

TEST(Bounds, Circle) {
  auto r = check_degree_bounds(qv(2, {"x1^2+x2^2-1"}));
  EXPECT_EQ(r.deg_V, 2);
  EXPECT_EQ(r.deg_TV, 4);
  EXPECT_EQ(r.deg_Tan, 1);
  EXPECT_EQ(r.bound_power, 4);
  EXPECT_EQ(r.bound_product, 4);
  EXPECT_EQ(r.bound_naive, 16);
  EXPECT_TRUE(r.square_bound_applies);
  EXPECT_TRUE(r.all_ok());
}

TEST(Bounds, LineAndFermatCubic) {
  auto line = check_degree_bounds(qv(2, {"x1 - 1"}));
  EXPECT_EQ(line.deg_TV, 1);
  EXPECT_EQ(line.deg_V, 1);
  EXPECT_TRUE(line.linearity_consistent);
  auto fermat = check_degree_bounds(qv(2, {"x1^3 + x2^3 - 1"}));
  EXPECT_EQ(fermat.deg_TV, 9);
  EXPECT_EQ(fermat.bound_square, 9);
  EXPECT_TRUE(fermat.all_ok());
}

TEST(Bounds, FormulaTable) {
  // (deg, n, d) -> deg^(n-d+1), deg ((n-d)(deg-1)+1)^d, deg^(n+d+1)
  struct Row {
    long deg, n, d, first, second, naive;
  };
  for (const auto& row : {Row{2, 2, 1, 4, 4, 16}, Row{3, 3, 1, 27, 15, 243}, Row{4, 4, 2, 64, 196, 16384}}) {
    EXPECT_EQ(ipow(row.deg, row.n - row.d + 1), row.first);
    EXPECT_EQ(row.deg * ipow((row.n - row.d) * (row.deg - 1) + 1, row.d), row.second);
    EXPECT_EQ(ipow(row.deg, row.n + row.d + 1), row.naive);
  }
}

TEST(SectionDegree, Examples) {
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    EXPECT_EQ(random_section_degree(qv(2, {"x1^2+x2^2-1"}), seed), 2);
    EXPECT_EQ(random_section_degree(qv(2, {"x1 - 1"}), seed), 1);
  }
  EXPECT_EQ(random_section_degree(qv(3, {"x2 - x1^2", "x3 - x1^3"}), 4), 3);
}

TEST(SectionDegree, DetectsNonReducedInput) {
  auto dbl = qv(2, {"x1^2"}, "doubled line");
  EXPECT_EQ(dbl.deg(), 2);
  EXPECT_THROW(cross_check_degree(dbl, 1), Error);
}

// Property suites -------------------------------------------------------------

TEST(Properties, SectionsAgreeWithHilbert) {
  Xorshift64Star rng(4242);
  int checked = 0;
  while (checked < 30) {
    const std::size_t n = 2 + rng.below(2);
    // a nonzero constant term rules out monomial factors, which would make the ideal non-reduced
    auto draw = [&](int deg, int terms) {
      return testing_support::random_poly(Fp, n, rng, deg, terms) + Polynomial<PrimeField>::constant(Fp, n, Fp.random_nonzero(rng));
    };
    std::vector<Polynomial<PrimeField>> gens{draw(3, 4)};
    if (n == 3 && checked % 2) gens.push_back(draw(2, 3));
    auto v = variety_from_ideal(Ideal<PrimeField>(Fp, n, gens));
    if (v.is_empty() || v.dimension() == static_cast<int>(n) || v.dimension() == 0) continue;
    EXPECT_EQ(random_section_degree(v, rng.fork()), v.deg());
    ++checked;
  }
}

TEST(Properties, ProductWithLineKeepsTangentBundleDegree) {
  for (const auto& gens : {std::vector<std::string>{"x1^2+x2^2-1"}, std::vector<std::string>{"x2 - x1^2"}}) {
    auto v = qv(2, gens);
    auto w = product_with_line(v);
    EXPECT_EQ(w.dimension(), v.dimension() + 1);
    EXPECT_EQ(w.deg(), v.deg());
    EXPECT_EQ(tangent_bundle(w).total.deg(), tangent_bundle(v).total.deg());
  }
}

TEST(Properties, TangentBundleInvariantsOnSmoothExamples) {
  const std::vector<std::pair<std::size_t, std::vector<std::string>>> corpus{
      {2, {"x1 - 1"}},
      {3, {"x1 + 2*x2 - x3"}},
      {2, {"x2 - x1^2"}},
      {2, {"x1^2 + x2^2 - 1"}},
      {3, {"x2 - x1^2", "x3 - x1^3"}},
      {2, {"x1^3 + x2^3 - 1"}},
  };
  for (const auto& [n, gens] : corpus) {
    auto v = qv(n, gens);
    ASSERT_EQ(smoothness_probe(v, SmoothnessMode::Exact, 1).kind, SmoothnessKind::SmoothEvidence);
    auto r = check_degree_bounds(v);
    EXPECT_TRUE(r.all_ok()) << gens.front();
    EXPECT_EQ(tangent_bundle(v).total.dimension(), 2 * v.dimension());
    EXPECT_EQ(r.deg_TV == r.deg_V, r.deg_V == 1);
    EXPECT_EQ(random_section_degree(v, 17), v.deg());
  }
}
