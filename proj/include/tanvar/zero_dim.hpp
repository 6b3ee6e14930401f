#pragma once

// Zero-dimensional ideals: quotient bases, minimal polynomials of
// multiplication maps, point counting and rational point extraction over F_p.

#include <optional>
#include <unordered_map>
#include <vector>

#include "hilbert.hpp"
#include "univariate.hpp"

namespace tanvar {

/// Standard monomials of a zero-dimensional degrevlex basis.
template <CoefficientField F>
std::vector<Monomial> standard_monomials(const GroebnerBasis<F>& gb, std::size_t limit = 100000) {
  const auto leads = gb.leading_monomials();
  const std::size_t n = gb.source.num_vars;
  auto standard = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return false;
    return true;
  };
  std::vector<Monomial> out;
  if (gb.is_unit()) return out;
  std::vector<Monomial> frontier{Monomial()};
  std::unordered_map<Monomial, bool, MonomialHash> seen{{Monomial(), true}};
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      out.push_back(m);
      if (out.size() > limit) fail(ErrorKind::Input, "ideal is not zero-dimensional (standard monomials exceed limit)");
      for (std::size_t i = 0; i < n; ++i) {
        Monomial c = m * Monomial::variable(i);
        if (seen.count(c) || !standard(c)) continue;
        seen.emplace(c, true);
        next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

template <CoefficientField F>
bool is_zero_dimensional(const GroebnerBasis<F>& gb) {
  if (gb.is_unit()) return false;
  const std::size_t n = gb.source.num_vars;
  for (std::size_t i = 0; i < n; ++i) {
    bool has_pure = false;
    for (const auto& l : gb.leading_monomials())
      if (l[i] > 0 && l.degree() == l[i]) has_pure = true;
    if (!has_pure) return false;
  }
  return true;
}

/// Minimal polynomial of multiplication by u on K[x]/I (I zero-dimensional),
/// found as the first linear dependency among NF(u^k).
template <CoefficientField F>
UPoly<F> minimal_polynomial(const Polynomial<F>& u, const GroebnerBasis<F>& gb) {
  const F& k = gb.source.field;
  const auto basis = standard_monomials(gb);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  const std::size_t dim = basis.size();

  using Vec = std::vector<typename F::Element>;
  auto to_vec = [&](const Polynomial<F>& p) {
    Vec v(dim, k.zero());
    for (const auto& t : p.terms()) v[index.at(t.mono)] = t.coeff;
    return v;
  };

  // Echelon rows with the combination of powers of u that produced them.
  struct Row {
    std::size_t pivot;
    Vec v;
    Vec combo;
  };
  std::vector<Row> rows;
  Polynomial<F> power = Polynomial<F>::constant(k, gb.source.num_vars, k.one());
  for (std::size_t deg = 0; deg <= dim; ++deg) {
    Vec v = to_vec(power);
    Vec combo(dim + 1, k.zero());
    combo[deg] = k.one();
    for (const auto& r : rows) {
      if (k.is_zero(v[r.pivot])) continue;
      auto f = v[r.pivot];
      for (std::size_t j = 0; j < dim; ++j) v[j] = k.sub(v[j], k.mul(f, r.v[j]));
      for (std::size_t j = 0; j <= dim; ++j) combo[j] = k.sub(combo[j], k.mul(f, r.combo[j]));
    }
    std::size_t piv = dim;
    for (std::size_t j = 0; j < dim; ++j)
      if (!k.is_zero(v[j])) {
        piv = j;
        break;
      }
    if (piv == dim) {
      combo.resize(deg + 1);
      return UPoly<F>(k, std::move(combo)).monic();
    }
    auto inv = k.inv(v[piv]);
    for (auto& x : v) x = k.mul(x, inv);
    for (auto& x : combo) x = k.mul(x, inv);
    rows.push_back({piv, std::move(v), std::move(combo)});
    power = normal_form(power * u, gb);
  }
  fail(ErrorKind::Verification, "minimal polynomial search exceeded the quotient dimension");
}

/// Random linear form sum c_i x_i with nonzero coefficients.
template <CoefficientField F>
Polynomial<F> random_linear_form(const F& k, std::size_t n, Xorshift64Star& rng, bool affine = false) {
  Polynomial<F> u(k, n);
  for (std::size_t i = 0; i < n; ++i) u += Polynomial<F>::variable(k, n, i).scale(k.random_nonzero(rng));
  if (affine) u += Polynomial<F>::constant(k, n, k.random_nonzero(rng));
  return u;
}

inline constexpr int kMaxSeedRetries = 5;

template <CoefficientField F>
long long count_points(const Ideal<F>& ideal, bool distinct, std::uint64_t rng_seed, const Budget& budget = {}) {
  auto gb = buchberger(ideal, MonomialOrder::degrevlex(), budget);
  if (gb.is_unit()) return 0;
  if (!is_zero_dimensional(gb)) fail(ErrorKind::Input, "count_points: ideal is not zero-dimensional");
  if (!distinct) return static_cast<long long>(standard_monomials(gb).size());
  Xorshift64Star rng(rng_seed);
  for (int attempt = 0; attempt < kMaxSeedRetries; ++attempt) {
    auto u1 = random_linear_form(ideal.field, ideal.num_vars, rng);
    auto u2 = random_linear_form(ideal.field, ideal.num_vars, rng);
    int a = distinct_root_count(minimal_polynomial(u1, gb));
    int b = distinct_root_count(minimal_polynomial(u2, gb));
    if (a == b) return a;
  }
  fail(ErrorKind::DegenerateRandomness, "count_points: distinct-point counts disagreed across " + std::to_string(kMaxSeedRetries) + " seed pairs");
}

/// Searches for a point with coordinates in F_p on a zero-dimensional ideal by
/// fixing coordinates one at a time at roots of their minimal polynomials.
inline std::optional<std::vector<std::uint64_t>> find_rational_point(const Ideal<PrimeField>& ideal, Xorshift64Star& rng,
                                                                      const Budget& budget = {}) {
  using P = Polynomial<PrimeField>;
  const PrimeField& k = ideal.field;
  const std::size_t n = ideal.num_vars;
  std::vector<std::uint64_t> point(n, 0);
  // depth-first over coordinates, bounded breadth per level
  struct Frame {
    Ideal<PrimeField> ideal;
    std::vector<std::uint64_t> candidates;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  auto expand = [&](const Ideal<PrimeField>& I, std::size_t var) -> std::optional<Frame> {
    auto gb = buchberger(I, MonomialOrder::degrevlex(), budget);
    if (gb.is_unit() || !is_zero_dimensional(gb)) return std::nullopt;
    auto mp = minimal_polynomial(P::variable(k, n, var), gb);
    auto roots = roots_in_prime_field(mp, rng);
    if (roots.empty()) return std::nullopt;
    return Frame{I, std::move(roots), 0};
  };
  auto first = expand(ideal, 0);
  if (!first) return std::nullopt;
  stack.push_back(std::move(*first));
  while (!stack.empty()) {
    Frame& f = stack.back();
    const std::size_t var = stack.size() - 1;
    if (f.next >= f.candidates.size() || f.next >= 4) {
      stack.pop_back();
      continue;
    }
    const auto r = f.candidates[f.next++];
    point[var] = r;
    auto fixed = f.ideal.with({P::variable(k, n, var) - P::constant(k, n, r)});
    if (var + 1 == n) {
      auto gb = buchberger(fixed, MonomialOrder::degrevlex(), budget);
      if (!gb.is_unit()) return point;
      continue;
    }
    auto child = expand(fixed, var + 1);
    if (child) stack.push_back(std::move(*child));
  }
  return std::nullopt;
}

}  // namespace tanvar
