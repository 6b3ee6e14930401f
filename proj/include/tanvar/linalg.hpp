#pragma once

// Dense linear algebra over a coefficient field: rank and kernel.

#include <vector>

#include "field.hpp"

namespace tanvar {

template <CoefficientField F>
using Matrix = std::vector<std::vector<typename F::Element>>;

namespace detail {

/// Reduced row echelon form in place; returns pivot columns.
template <CoefficientField F>
std::vector<std::size_t> row_reduce(Matrix<F>& m, const F& k) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && k.is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    auto inv = k.inv(m[r][c]);
    for (auto& x : m[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || k.is_zero(m[i][c])) continue;
      auto f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <CoefficientField F>
std::size_t matrix_rank(Matrix<F> m, const F& k) {
  return detail::row_reduce(m, k).size();
}

/// Basis of the right kernel {v : m v = 0}, columns given by `cols`.
template <CoefficientField F>
std::vector<std::vector<typename F::Element>> kernel_basis(Matrix<F> m, std::size_t cols, const F& k) {
  auto pivots = detail::row_reduce(m, k);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Element>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(cols, k.zero());
    v[free] = k.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace tanvar
