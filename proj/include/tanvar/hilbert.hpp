#pragma once

// Dimension and degree from the Hilbert series of a monomial ideal.
//
// For an affine ideal I with degrevlex basis G, the homogenized basis G^h is
// a basis of the projective closure's ideal and LT(g^h) = LT(g). So
// K[x0..xn]/LT(I^h) has Hilbert series N(t) / (1-t)^(n+1), where N is the
// numerator for the monomial ideal generated by LT(G) in n variables. Writing
// N = (1-t)^r h(t) with h(1) != 0 gives dimension n - r and degree h(1).

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "groebner.hpp"

namespace tanvar {

struct HilbertData {
  int dimension = -1;  // -1 for the unit ideal
  long long degree = 0;
  bool operator==(const HilbertData&) const = default;
};

namespace detail {

using IntPoly = std::vector<mpz_class>;  // coefficient of t^i at index i

inline void add_into(IntPoly& a, const IntPoly& b, std::size_t shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

inline int support_size(const Monomial& m) {
  int c = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) c += m[i] != 0;
  return c;
}

/// Numerator of the Hilbert series of K[x]/(gens), over (1-t)^n.
inline IntPoly hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};

  bool pairwise_coprime = true;
  for (std::size_t a = 0; a < gens.size() && pairwise_coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size() && pairwise_coprime; ++b)
      pairwise_coprime = Monomial::coprime(gens[a], gens[b]);
  if (pairwise_coprime) {
    IntPoly r{1};
    for (const auto& g : gens) {
      IntPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      r = mul(r, f);
    }
    return r;
  }

  // Pivot x_i^e: x_i is the variable shared by the most non-pure generators,
  // e the median of its exponents there, capped so the pivot is not a
  // member of the ideal.
  std::vector<int> count(kMaxVars, 0);
  for (const auto& g : gens)
    if (support_size(g) > 1)
      for (std::size_t i = 0; i < kMaxVars; ++i) count[i] += g[i] != 0;
  std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> exps;
  int cap = 0;
  for (const auto& g : gens)
    if (support_size(g) > 1 && g[var]) {
      exps.push_back(g[var]);
      cap = std::max(cap, static_cast<int>(g[var]));
    }
  std::sort(exps.begin(), exps.end());
  int e = std::clamp(exps[exps.size() / 2], 1, cap);
  // x_var^e must not lie in the ideal: pure powers of x_var must exceed e
  for (const auto& g : gens)
    if (support_size(g) == 1 && g[var]) e = std::min(e, static_cast<int>(g[var]) - 1);
  if (e < 1) e = 1;
  const Monomial pivot = Monomial::variable(var, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(var, static_cast<Monomial::Exponent>(g[var] > e ? g[var] - e : 0));
    colon.push_back(q);
  }
  IntPoly r = hilbert_numerator(std::move(plus));
  add_into(r, hilbert_numerator(std::move(colon)), static_cast<std::size_t>(e));
  return r;
}

}  // namespace detail

/// Krull dimension and degree of K[x]/J for the monomial ideal J in n variables.
inline HilbertData monomial_hilbert_data(const std::vector<Monomial>& gens, std::size_t n) {
  detail::IntPoly num = detail::hilbert_numerator(gens);
  while (!num.empty() && num.back() == 0) num.pop_back();
  if (num.empty()) return {-1, 0};
  int r = 0;
  for (;;) {
    mpz_class at_one = 0;
    for (const auto& c : num) at_one += c;
    if (at_one != 0) {
      return {static_cast<int>(n) - r, at_one.get_si()};
    }
    // divide by (1 - t): q_i = sum_{j <= i} num_j
    detail::IntPoly q(num.size() - 1, 0);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    num = std::move(q);
    ++r;
  }
}

template <CoefficientField F>
HilbertData hilbert_dimension_degree(const GroebnerBasis<F>& degrevlex_gb) {
  require(degrevlex_gb.order.kind == OrderKind::DegRevLex, "Hilbert data requires a degrevlex basis");
  if (degrevlex_gb.is_unit()) return {-1, 0};
  return monomial_hilbert_data(degrevlex_gb.leading_monomials(), degrevlex_gb.source.num_vars);
}

template <CoefficientField F>
HilbertData hilbert_dimension_degree(const Ideal<F>& ideal, const Budget& budget = {}) {
  if (ideal.generators.empty()) return {static_cast<int>(ideal.num_vars), 1};
  return hilbert_dimension_degree(buchberger(ideal, MonomialOrder::degrevlex(), budget));
}

}  // namespace tanvar
