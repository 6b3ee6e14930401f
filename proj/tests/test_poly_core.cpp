#include <gtest/gtest.h>

#include "tanvar/parse.hpp"
#include "tanvar/resultant.hpp"
#include "tanvar/univariate.hpp"
#include "test_support.hpp"

using namespace tanvar;
using testing_support::random_poly;

namespace {

const Rationals Q;
const PrimeField Fp;

Polynomial<Rationals> q(const std::string& s, const std::vector<std::string>& vars = {"x", "y"}) {
  return parse_polynomial(s, vars, Q);
}

}  // namespace

TEST(Parse, CircleHasThreeTerms) {
  auto p = parse_polynomial("x1^2 + x2^2 - 1", {"x1", "x2"}, Q);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.degree(), 2);
}

TEST(Parse, ZeroIsEmpty) {
  auto p = parse_polynomial("0", {"x1"}, Q);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
}

TEST(Parse, DifferenceOfSquares) {
  EXPECT_EQ(parse_polynomial("(x1+1)*(x1-1)", {"x1"}, Q), parse_polynomial("x1^2 - 1", {"x1"}, Q));
}

TEST(Parse, RationalLiteralsAndUnaryMinus) {
  auto p = q("-x^2 + 1/3*y");
  EXPECT_EQ(p.to_string({"x", "y"}), "-x^2 + (1/3)*y");
  auto r = parse_polynomial("1/3*t^3 - t", {"t"}, Q);
  EXPECT_EQ(r.size(), 2u);
  EXPECT_THROW(parse_polynomial("t^3/3", {"t"}, Q), Error);
}

TEST(Parse, Errors) {
  EXPECT_THROW(q("x + z"), Error);    // unknown variable
  EXPECT_THROW(q("2x"), Error);       // implicit multiplication
  EXPECT_THROW(q("x^"), Error);       // missing exponent
  EXPECT_THROW(q("x^-1"), Error);     // negative exponent
  EXPECT_THROW(q("(x + y"), Error);   // unbalanced
  EXPECT_THROW(q("x / y"), Error);    // only literal division
  EXPECT_THROW(q("1/0"), Error);
  try {
    q("x + $");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Input);
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos);
  }
}

TEST(Parse, DenominatorNotInvertibleModP) {
  const PrimeField small(1048583);  // prime above 2^20
  EXPECT_THROW(parse_polynomial("1/1048583*x", {"x"}, small), Error);
  EXPECT_NO_THROW(parse_polynomial("1/3*x", {"x"}, small));
}

TEST(Field, PrimeFieldValidation) {
  EXPECT_THROW(PrimeField(1000003), Error);  // below 2^20
  EXPECT_THROW(PrimeField(2147483649ull), Error);
  EXPECT_NO_THROW(PrimeField(2147483647ull));
  const PrimeField k;
  for (std::uint64_t a : {1ull, 2ull, 12345ull, 2147483646ull}) EXPECT_EQ(k.mul(a, k.inv(a)), 1u);
  EXPECT_EQ(k.from_rational(mpq_class(1, 2)), k.inv(2));
}

TEST(Arith, Examples) {
  EXPECT_EQ(q("x+y") * q("x-y"), q("x^2-y^2"));
  auto p = q("3*x*y^2 - 7");
  EXPECT_EQ(p + q("0"), p);
  EXPECT_TRUE((q("x^2+1") - q("x^2+1")).is_zero());
  EXPECT_THROW(q("x") + parse_polynomial("x", {"x"}, Q), Error);  // arity mismatch
}

TEST(Derivative, Examples) {
  EXPECT_EQ(q("x^2*y").derivative(0), q("2*x*y"));
  EXPECT_TRUE(q("x^2").derivative(1).is_zero());
  EXPECT_THROW(q("x").derivative(2), Error);
  // d/dx (a x^m + b y^m - 1) = m a x^(m-1)
  for (int m = 2; m <= 5; ++m) {
    auto f = q("5*x^" + std::to_string(m) + " + 7*y^" + std::to_string(m) + " - 1");
    EXPECT_EQ(f.derivative(0), q(std::to_string(5 * m) + "*x^" + std::to_string(m - 1)));
  }
}

TEST(Homogenize, Examples) {
  std::vector<std::string> h{"x0", "x", "y"};
  EXPECT_EQ(q("x^2 + y + 1").homogenize(), parse_polynomial("x^2 + y*x0 + x0^2", h, Q));
  EXPECT_EQ(q("x^3 - y").homogenize(), parse_polynomial("x^3 - y*x0^2", h, Q));
  EXPECT_EQ(q("x^2 - x*y").homogenize(), parse_polynomial("x^2 - x*y", h, Q));
  EXPECT_THROW(q("0").homogenize(), Error);
}

TEST(Evaluate, Examples) {
  std::vector<mpq_class> p10{1, 0}, p11{1, 1};
  EXPECT_EQ(q("x^2+y^2-1").evaluate(p10), 0);
  EXPECT_EQ(q("x^2+y^2-1").evaluate(p11), 1);
  EXPECT_EQ(q("5").evaluate(p11), 5);
  std::vector<mpq_class> bad{1};
  EXPECT_THROW(q("x").evaluate(bad), Error);
}

TEST(Resultant, Examples) {
  std::vector<std::string> t{"t"};
  auto res = [&](const std::string& a, const std::string& b) {
    return univariate_resultant(parse_polynomial(a, t, Q), parse_polynomial(b, t, Q), 0);
  };
  EXPECT_TRUE(res("t^2-1", "t-1").is_zero());
  // 3x3 Sylvester determinant |1 0 1; 1 -1 0; 0 1 -1| = 2
  EXPECT_EQ(res("t^2+1", "t-1"), parse_polynomial("2", t, Q));
  std::vector<std::string> tab{"t", "a", "b"};
  auto r = univariate_resultant(parse_polynomial("t-a", tab, Q), parse_polynomial("t-b", tab, Q), 0);
  auto expected = parse_polynomial("b-a", tab, Q);
  EXPECT_TRUE(r == expected || r == -expected);
  EXPECT_THROW(univariate_resultant(parse_polynomial("a", tab, Q), parse_polynomial("b", tab, Q), 0), Error);
}

TEST(Resultant, DiscriminantWithParameters) {
  // Res_t(t^2 + b t + c, 2t + b) = -(b^2 - 4c) up to the leading-coefficient convention
  std::vector<std::string> v{"t", "b", "c"};
  auto f = parse_polynomial("t^2 + b*t + c", v, Q);
  auto r = univariate_resultant(f, f.derivative(0), 0);
  EXPECT_EQ(r, parse_polynomial("4*c - b^2", v, Q));
}

TEST(Resultant, BareissMatchesEuclideanOnRandomPairs) {
  Xorshift64Star rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = testing_support::random_upoly(Q, rng, 1 + rng.below(5));
    auto g = testing_support::random_upoly(Q, rng, 1 + rng.below(5));
    auto bareiss = univariate_resultant(f.to_polynomial(), g.to_polynomial(), 0);
    auto euclid = resultant(f, g);
    EXPECT_EQ(bareiss, Polynomial<Rationals>::constant(Q, 1, euclid));
  }
}

TEST(Resultant, VanishesExactlyOnCommonFactor) {
  Xorshift64Star rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = testing_support::random_upoly(Q, rng, 1 + rng.below(3));
    auto g = testing_support::random_upoly(Q, rng, 1 + rng.below(3));
    if (trial % 2 == 0) {
      auto common = testing_support::random_upoly(Q, rng, 1 + rng.below(2));
      f = f * common;
      g = g * common;
    }
    bool shared = UPoly<Rationals>::gcd(f, g).degree() > 0;
    bool vanishes = univariate_resultant(f.to_polynomial(), g.to_polynomial(), 0).is_zero();
    EXPECT_EQ(shared, vanishes);
  }
}

TEST(SquareFree, Examples) {
  std::vector<std::string> t{"t"};
  auto sf = [&](const std::string& s) { return squarefree_part(parse_polynomial(s, t, Q)); };
  EXPECT_EQ(sf("(t-1)^2*(t+2)"), parse_polynomial("(t-1)*(t+2)", t, Q));
  EXPECT_EQ(sf("3*t^2 - 3"), parse_polynomial("t^2 - 1", t, Q));
  EXPECT_EQ(sf("t^4"), parse_polynomial("t", t, Q));
  EXPECT_THROW(sf("0"), Error);
  const PrimeField small(1048583);
  std::vector<std::uint64_t> c(1048590, 0);
  c.back() = 1;
  EXPECT_THROW(squarefree_part(UPoly<PrimeField>(small, c)), Error);
}

TEST(Roots, PrimeFieldRootsOfProductOfLinears) {
  Xorshift64Star rng(3);
  using U = UPoly<PrimeField>;
  U f = U::constant(Fp, 1);
  for (std::uint64_t r : {5ull, 17ull, 2147483000ull}) f = f * U::linear(Fp, Fp.neg(r), 1);
  f = f * U(Fp, {1, 0, 1});  // t^2 + 1: p = 2^31-1 is 3 mod 4, so no roots
  auto roots = roots_in_prime_field(f, rng);
  EXPECT_EQ(roots, (std::vector<std::uint64_t>{5, 17, 2147483000}));
}

// Property suites -------------------------------------------------------------

TEST(Properties, RingAxioms) {
  Xorshift64Star rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(Q, 3, rng), b = random_poly(Q, 3, rng), c = random_poly(Q, 3, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(Fp, 3, rng), b = random_poly(Fp, 3, rng), c = random_poly(Fp, 3, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b - c), a * b - a * c);
  }
}

TEST(Properties, Leibniz) {
  Xorshift64Star rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(Q, 3, rng), g = random_poly(Q, 3, rng);
    std::size_t v = rng.below(3);
    EXPECT_EQ((f * g).derivative(v), f * g.derivative(v) + g * f.derivative(v));
  }
}

TEST(Properties, HomogenizeThenDehomogenize) {
  Xorshift64Star rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(Q, 3, rng);
    if (f.is_zero()) continue;
    auto h = f.homogenize();
    EXPECT_TRUE(h.is_homogeneous());
    EXPECT_EQ(h.degree(), f.degree());
    std::vector<Polynomial<Rationals>> back{Polynomial<Rationals>::constant(Q, 3, 1)};
    for (std::size_t i = 0; i < 3; ++i) back.push_back(Polynomial<Rationals>::variable(Q, 3, i));
    EXPECT_EQ(h.compose(back), f);
  }
}

TEST(Properties, EvaluationIsRingMorphism) {
  Xorshift64Star rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(Fp, 3, rng), g = random_poly(Fp, 3, rng);
    std::vector<std::uint64_t> pt{Fp.random_element(rng), Fp.random_element(rng), Fp.random_element(rng)};
    EXPECT_EQ((f * g).evaluate(pt), Fp.mul(f.evaluate(pt), g.evaluate(pt)));
    EXPECT_EQ((f + g).evaluate(pt), Fp.add(f.evaluate(pt), g.evaluate(pt)));
  }
}
