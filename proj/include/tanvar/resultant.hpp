#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace tanvar {

/// Exact multivariate division a / b. Fails if b does not divide a.
template <CoefficientField F>
Polynomial<F> exact_divide(const Polynomial<F>& a, const Polynomial<F>& b) {
  require(!b.is_zero(), "exact division by zero polynomial");
  const F& k = a.field();
  const auto& lb = b.terms().front();
  const auto inv_lc = k.inv(lb.coeff);
  Polynomial<F> rem = a, quot(k, a.num_vars());
  std::vector<Term<F>> q;
  while (!rem.is_zero()) {
    const auto& lt = rem.terms().front();
    if (!lb.mono.divides(lt.mono)) fail(ErrorKind::Input, "exact division failed: divisor does not divide dividend");
    Monomial m = lt.mono / lb.mono;
    auto c = k.mul(lt.coeff, inv_lc);
    q.push_back({m, c});
    rem = rem - b.mul_term(m, c);
  }
  return Polynomial<F>::from_terms(k, a.num_vars(), std::move(q));
}

/// Determinant by fraction-free (Bareiss) elimination. Entries are
/// polynomials; every intermediate division is exact.
template <CoefficientField F>
Polynomial<F> bareiss_determinant(std::vector<std::vector<Polynomial<F>>> m, const F& k, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial<F>::constant(k, nvars, k.one());
  bool negate = false;
  Polynomial<F> prev = Polynomial<F>::constant(k, nvars, k.one());
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (m[c][c].is_zero()) {
      std::size_t r = c + 1;
      while (r < n && m[r][c].is_zero()) ++r;
      if (r == n) return Polynomial<F>(k, nvars);
      std::swap(m[c], m[r]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < n; ++i)
      for (std::size_t j = c + 1; j < n; ++j) m[i][j] = exact_divide(m[c][c] * m[i][j] - m[i][c] * m[c][j], prev);
    prev = m[c][c];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Sylvester matrix of f, g viewed as univariate in `var`.
template <CoefficientField F>
std::vector<std::vector<Polynomial<F>>> sylvester_matrix(const Polynomial<F>& f, const Polynomial<F>& g, std::size_t var) {
  auto fc = f.coefficients_in(var), gc = g.coefficients_in(var);
  const std::size_t m = fc.size() - 1, n = gc.size() - 1, size = m + n;
  const Polynomial<F> zero(f.field(), f.num_vars());
  std::vector<std::vector<Polynomial<F>>> s(size, std::vector<Polynomial<F>>(size, zero));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = fc[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = gc[n - j];
  return s;
}

/// Res_var(f, g): the Sylvester determinant, a polynomial free of `var`.
template <CoefficientField F>
Polynomial<F> univariate_resultant(const Polynomial<F>& f, const Polynomial<F>& g, std::size_t var) {
  require(f.num_vars() == g.num_vars() && f.field() == g.field(), "resultant: ring mismatch");
  require(var < f.num_vars(), "resultant: variable index out of range");
  require(!f.is_zero() && !g.is_zero(), "resultant of a zero polynomial");
  const int df = f.degree_in(var), dg = g.degree_in(var);
  require(df > 0 || dg > 0, "resultant: both inputs have degree 0 in the variable");
  if (df == 0) return f.pow(static_cast<unsigned>(dg));
  if (dg == 0) return g.pow(static_cast<unsigned>(df));
  return bareiss_determinant(sylvester_matrix(f, g, var), f.field(), f.num_vars());
}

}  // namespace tanvar
