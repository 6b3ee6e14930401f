#pragma once

// Randomized self-checks run by `corpus --properties` and the test suite.
// Every suite is exact: a single failing case is a failure.

#include <functional>
#include <string>
#include <vector>

#include "polytope2d.hpp"
#include "variety.hpp"

namespace tanvar {

namespace gen {

template <CoefficientField F>
Polynomial<F> random_poly(const F& k, std::size_t n, Xorshift64Star& rng, int max_deg = 3, int max_terms = 4) {
  std::vector<Term<F>> terms;
  const int count = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms))) + 1;
  for (int i = 0; i < count; ++i) {
    std::vector<int> e(n);
    for (auto& x : e) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    terms.push_back({Monomial::from_exponents(e), k.from_int(rng.between(-9, 9))});
  }
  return Polynomial<F>::from_terms(k, n, std::move(terms));
}

template <CoefficientField F>
UPoly<F> random_upoly(const F& k, Xorshift64Star& rng, std::uint64_t degree) {
  std::vector<typename F::Element> c;
  for (std::uint64_t i = 0; i < degree; ++i) c.push_back(k.from_int(rng.between(-5, 5)));
  c.push_back(k.random_nonzero(rng));
  return UPoly<F>(k, std::move(c));
}

inline Polygon random_polygon(Xorshift64Star& rng) {
  std::vector<LatticePoint> pts;
  const int count = 1 + static_cast<int>(rng.below(6));
  for (int i = 0; i < count; ++i) pts.push_back({rng.between(-5, 5), rng.between(-5, 5)});
  return Polygon::hull(pts);
}

}  // namespace gen

struct PropertyResult {
  explicit PropertyResult(std::string n) : name(std::move(n)) {}

  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void check(bool cond, const std::function<std::string()>& what) {
    ++cases;
    if (cond) return;
    if (failures++ == 0) first_failure = what();
  }
};

namespace props {

inline PropertyResult ring_axioms(std::uint64_t seed, int trials = 100) {
  PropertyResult r{"ring-axioms"};
  Xorshift64Star rng(seed);
  const Rationals Q;
  const PrimeField Fp;
  for (int t = 0; t < trials; ++t) {
    auto a = gen::random_poly(Q, 3, rng), b = gen::random_poly(Q, 3, rng), c = gen::random_poly(Q, 3, rng);
    auto show = [&] { return a.to_string() + " ; " + b.to_string() + " ; " + c.to_string(); };
    r.check((a + b) + c == a + (b + c), show);
    r.check(a * (b + c) == a * b + a * c, show);
    r.check(a * b == b * a, show);
    auto x = gen::random_poly(Fp, 3, rng), y = gen::random_poly(Fp, 3, rng), z = gen::random_poly(Fp, 3, rng);
    auto showp = [&] { return x.to_string() + " ; " + y.to_string() + " ; " + z.to_string(); };
    r.check((x * y) * z == x * (y * z), showp);
    r.check(x * (y - z) == x * y - x * z, showp);
  }
  return r;
}

inline PropertyResult leibniz(std::uint64_t seed, int trials = 100) {
  PropertyResult r{"leibniz"};
  Xorshift64Star rng(seed);
  const Rationals Q;
  for (int t = 0; t < trials; ++t) {
    auto f = gen::random_poly(Q, 3, rng), g = gen::random_poly(Q, 3, rng);
    const std::size_t v = rng.below(3);
    r.check((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v),
            [&] { return f.to_string() + " ; " + g.to_string(); });
  }
  return r;
}

/// Every reduced basis passes the S-pair criterion, reduces its generators to
/// zero, and normal forms are fixed points of reduction.
inline PropertyResult buchberger_postcheck(std::uint64_t seed, int trials = 25) {
  PropertyResult r{"buchberger-postcheck"};
  Xorshift64Star rng(seed);
  const Rationals Q;
  for (int t = 0; t < trials; ++t) {
    std::vector<Polynomial<Rationals>> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(gen::random_poly(Q, 3, rng, 2, 3));
    Ideal<Rationals> I(Q, 3, gens);
    if (I.generators.empty()) continue;
    for (auto order : {MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::block(1)}) {
      auto gb = buchberger(I, order);
      auto show = [&] {
        std::string s;
        for (const auto& g : I.generators) s += g.to_string() + " ; ";
        return s;
      };
      r.check(satisfies_buchberger_criterion(gb) && is_reduced(gb), show);
      for (const auto& g : I.generators) r.check(normal_form(g, gb).is_zero(), show);
    }
  }
  return r;
}

inline PropertyResult normal_form_idempotence(std::uint64_t seed, int trials = 25) {
  PropertyResult r{"normal-form-idempotence"};
  Xorshift64Star rng(seed);
  const Rationals Q;
  for (int t = 0; t < trials; ++t) {
    std::vector<Polynomial<Rationals>> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(gen::random_poly(Q, 3, rng, 2, 3));
    Ideal<Rationals> I(Q, 3, gens);
    if (I.generators.empty()) continue;
    for (auto order : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
      auto gb = buchberger(I, order);
      for (int i = 0; i < 3; ++i) {
        auto p = gen::random_poly(Q, 3, rng, 3, 5);
        auto once = normal_form(p, gb);
        r.check(normal_form(once, gb) == once, [&] { return p.to_string(); });
      }
    }
  }
  return r;
}

/// Hilbert degree against random linear section counts on random reduced
/// positive-dimensional varieties over F_p.
inline PropertyResult hilbert_vs_sections(std::uint64_t seed, int instances = 50) {
  PropertyResult r{"hilbert-vs-sections"};
  Xorshift64Star rng(seed);
  const PrimeField Fp;
  while (r.cases < instances) {
    const std::size_t n = 2 + rng.below(2);
    // a nonzero constant term rules out monomial factors, which would make the ideal non-reduced
    auto draw = [&](int deg, int terms) {
      return gen::random_poly(Fp, n, rng, deg, terms) + Polynomial<PrimeField>::constant(Fp, n, Fp.random_nonzero(rng));
    };
    std::vector<Polynomial<PrimeField>> gens{draw(3, 4)};
    if (n == 3 && r.cases % 2) gens.push_back(draw(2, 3));
    auto v = variety_from_ideal(Ideal<PrimeField>(Fp, n, gens));
    if (v.is_empty() || v.dimension() == static_cast<int>(n) || v.dimension() == 0) continue;
    const long long sections = random_section_degree(v, rng.fork());
    r.check(sections == v.deg(), [&] {
      return gens.front().to_string() + ": hilbert " + std::to_string(v.deg()) + ", sections " + std::to_string(sections);
    });
  }
  return r;
}

/// Mixed volume is symmetric, nonnegative, linear under dilation, bounded by
/// the Minkowski area, and reproduces the Bezout table on simplices.
inline PropertyResult mixed_volume_tables(std::uint64_t seed, int trials = 200) {
  PropertyResult r{"mixed-volume-tables"};
  Xorshift64Star rng(seed);
  for (int t = 0; t < trials; ++t) {
    auto p = gen::random_polygon(rng), q = gen::random_polygon(rng);
    auto show = [&] { return p.to_string() + " , " + q.to_string(); };
    const auto mv = mixed_volume_2d(p, q);
    r.check(mv == mixed_volume_2d(q, p), show);
    r.check(mv >= 0, show);
    r.check(area(minkowski_sum(p, q)) >= area(p) + area(q), show);
    for (int k = 1; k <= 4; ++k) r.check(mixed_volume_2d(p.dilate(k), q) == k * mv, show);
  }
  for (int d = 1; d <= 5; ++d)
    for (int e = 1; e <= 5; ++e)
      r.check(mixed_volume_2d(simplex2(d), simplex2(e)) == d * e, [&] { return "bezout " + std::to_string(d) + "x" + std::to_string(e); });
  for (int m = 2; m <= 6; ++m)
    r.check(mixed_volume_2d(simplex2(m), tangency_trapezoid(m)) == m * m, [&] { return "trapezoid m=" + std::to_string(m); });
  return r;
}

}  // namespace props

/// All suites, each on its own stream derived from `seed`.
inline std::vector<PropertyResult> run_property_suites(std::uint64_t seed) {
  Xorshift64Star rng(seed);
  std::vector<PropertyResult> out;
  out.push_back(props::buchberger_postcheck(rng.fork()));
  out.push_back(props::normal_form_idempotence(rng.fork()));
  out.push_back(props::hilbert_vs_sections(rng.fork()));
  out.push_back(props::mixed_volume_tables(rng.fork()));
  out.push_back(props::leibniz(rng.fork()));
  out.push_back(props::ring_axioms(rng.fork()));
  return out;
}

}  // namespace tanvar
