#pragma once

// Affine varieties given by generators, their tangent bundles and tangential
// varieties, smoothness probes and the degree bounds for TV.

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "linalg.hpp"
#include "parse.hpp"
#include "zero_dim.hpp"

namespace tanvar {

template <CoefficientField F>
struct Variety {
  std::size_t ambient_dim = 0;
  Ideal<F> ideal;
  std::optional<int> dim;           // -1 when empty
  std::optional<long long> degree;  // 0 when empty
  std::string label;
  std::vector<std::string> names;

  bool is_empty() const { return dim && *dim < 0; }
  int dimension() const {
    require(dim.has_value(), "variety dimension not computed");
    return *dim;
  }
  long long deg() const {
    require(degree.has_value(), "variety degree not computed");
    return *degree;
  }
};

inline std::vector<std::string> indexed_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

template <CoefficientField F>
Variety<F> variety_from_ideal(Ideal<F> ideal, std::string label = {}, std::vector<std::string> names = {},
                              const Budget& budget = {}) {
  Variety<F> v;
  v.ambient_dim = ideal.num_vars;
  v.names = names.empty() ? indexed_names(ideal.num_vars, "x") : std::move(names);
  require(v.names.size() == ideal.num_vars, "variable name count does not match the ambient dimension");
  auto h = hilbert_dimension_degree(ideal, budget);
  v.dim = h.dimension;
  v.degree = h.degree;
  v.ideal = std::move(ideal);
  v.label = std::move(label);
  return v;
}

/// Parses generators in variables x1..xn (or the given names).
template <CoefficientField F>
Variety<F> make_variety(std::size_t n, const std::vector<std::string>& generator_texts, const F& field,
                        std::string label = {}, std::vector<std::string> names = {}, const Budget& budget = {}) {
  require(n >= 1 && n <= kMaxVars, "ambient dimension must be between 1 and " + std::to_string(kMaxVars));
  if (names.empty()) names = indexed_names(n, "x");
  std::vector<Polynomial<F>> gens;
  for (const auto& t : generator_texts) gens.push_back(parse_polynomial(t, names, field));
  return variety_from_ideal(Ideal<F>(field, n, std::move(gens)), std::move(label), std::move(names), budget);
}

/// V x A^1: same generators in one extra trailing variable.
template <CoefficientField F>
Variety<F> product_with_line(const Variety<F>& v, const Budget& budget = {}) {
  const std::size_t n = v.ambient_dim + 1;
  std::vector<std::size_t> map(v.ambient_dim);
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : v.ideal.generators) gens.push_back(g.embed(n, map));
  auto names = v.names;
  names.push_back("x" + std::to_string(n));
  return variety_from_ideal(Ideal<F>(v.ideal.field, n, std::move(gens)), v.label + " x A1", std::move(names), budget);
}

inline Ideal<PrimeField> to_prime_field(const Ideal<Rationals>& I, const PrimeField& k) {
  std::vector<Polynomial<PrimeField>> gens;
  for (const auto& g : I.generators) gens.push_back(reduce_mod(g, k));
  return Ideal<PrimeField>(k, I.num_vars, std::move(gens));
}

inline Ideal<PrimeField> to_prime_field(const Ideal<PrimeField>& I, const PrimeField&) { return I; }

template <CoefficientField F>
PrimeField sampling_field(const F& k) {
  if constexpr (std::is_same_v<F, PrimeField>)
    return k;
  else
    return PrimeField();
}

template <CoefficientField F>
using PolyMatrix = std::vector<std::vector<Polynomial<F>>>;

template <CoefficientField F>
PolyMatrix<F> jacobian(const Ideal<F>& I) {
  PolyMatrix<F> J;
  for (const auto& f : I.generators) J.push_back(f.gradient());
  return J;
}

template <CoefficientField F>
PolyMatrix<F> jacobian(const Variety<F>& v) {
  return jacobian(v.ideal);
}

template <CoefficientField F>
Matrix<F> evaluate_matrix(const PolyMatrix<F>& m, std::span<const typename F::Element> point, const F& k) {
  Matrix<F> out;
  for (const auto& row : m) {
    std::vector<typename F::Element> r;
    for (const auto& e : row) r.push_back(e.evaluate(point));
    out.push_back(std::move(r));
  }
  (void)k;
  return out;
}

/// Determinant by cofactor expansion; sizes here stay small.
template <CoefficientField F>
Polynomial<F> poly_determinant(const PolyMatrix<F>& m, const F& k, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial<F>::constant(k, nvars, k.one());
  if (n == 1) return m[0][0];
  Polynomial<F> det(k, nvars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix<F> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial<F>> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      sub.push_back(std::move(row));
    }
    auto term = m[0][c] * poly_determinant(sub, k, nvars);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace detail {

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Rational number r/s with r = a s (mod m) and |r|, s <= sqrt(m/2), if any.
inline std::optional<mpq_class> rational_reconstruction(std::uint64_t a, std::uint64_t m) {
  mpz_class r0 = static_cast<unsigned long>(m), r1 = static_cast<unsigned long>(a), s0 = 0, s1 = 1;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), mpz_class(static_cast<unsigned long>(m / 2)).get_mpz_t());
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  mpq_class out(r1, s1);
  out.canonicalize();
  return out;
}

}  // namespace detail

/// The maximal minors of size c of an r x n polynomial matrix.
template <CoefficientField F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& m, std::size_t c, const F& k, std::size_t nvars) {
  std::vector<Polynomial<F>> out;
  if (m.empty() || c == 0) return out;
  const std::size_t rows = m.size(), cols = m.front().size();
  detail::for_each_subset(rows, c, [&](const std::vector<std::size_t>& rs) {
    detail::for_each_subset(cols, c, [&](const std::vector<std::size_t>& cs) {
      PolyMatrix<F> sub;
      for (auto r : rs) {
        std::vector<Polynomial<F>> row;
        for (auto cc : cs) row.push_back(m[r][cc]);
        sub.push_back(std::move(row));
      }
      auto d = poly_determinant(sub, k, nvars);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

enum class SmoothnessMode { Probabilistic, Exact };
enum class SmoothnessKind { SmoothEvidence, SingularWitness, Inconclusive };

inline std::string to_string(SmoothnessKind k) {
  switch (k) {
    case SmoothnessKind::SmoothEvidence: return "smooth-evidence";
    case SmoothnessKind::SingularWitness: return "singular-witness";
    case SmoothnessKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SmoothnessVerdict {
  SmoothnessKind kind = SmoothnessKind::Inconclusive;
  std::optional<std::vector<std::string>> witness;  // coordinates as text
  bool witness_modular = false;                     // coordinates live in F_p
  int samples = 0;
};

inline constexpr int kSmoothnessSamples = 20;
inline constexpr int kMaxSectionAttempts = 50;

/// A point of V over F_p found by cutting with dim(V) random affine
/// hyperplanes, up to kMaxSectionAttempts tries.
inline std::optional<std::vector<std::uint64_t>> sample_point(const Ideal<PrimeField>& I, int dim, Xorshift64Star& rng,
                                                              const Budget& budget = {}) {
  for (int attempt = 0; attempt < kMaxSectionAttempts; ++attempt) {
    auto section = I;
    for (int i = 0; i < dim; ++i) section = section.with({random_linear_form(I.field, I.num_vars, rng, true)});
    auto p = find_rational_point(section, rng, budget);
    if (p) return p;
  }
  return std::nullopt;
}

namespace detail {

template <CoefficientField F>
std::optional<std::vector<std::string>> exact_witness(const Ideal<F>& singular, const Budget& budget, Xorshift64Star& rng,
                                                      bool& modular) {
  const PrimeField k = sampling_field(singular.field);
  const auto Ip = to_prime_field(singular, k);
  const int dim = hilbert_dimension_degree(Ip, budget).dimension;
  if (dim < 0) return std::nullopt;
  auto p = sample_point(Ip, dim, rng, budget);
  if (!p) return std::nullopt;
  std::vector<std::string> out;
  if constexpr (std::is_same_v<F, Rationals>) {
    std::vector<mpq_class> lifted;
    bool ok = true;
    for (auto c : *p) {
      auto r = rational_reconstruction(c, k.characteristic());
      if (!r) {
        ok = false;
        break;
      }
      lifted.push_back(*r);
    }
    if (ok)
      for (const auto& g : singular.generators) ok = ok && g.evaluate(lifted) == 0;
    if (ok) {
      modular = false;
      for (const auto& c : lifted) out.push_back(c.get_str());
      return out;
    }
  }
  modular = !std::is_same_v<F, PrimeField>;
  for (auto c : *p) out.push_back(k.to_string(c));
  return out;
}

}  // namespace detail

template <CoefficientField F>
SmoothnessVerdict smoothness_probe(const Variety<F>& v, SmoothnessMode mode, std::uint64_t rng_seed, const Budget& budget = {}) {
  require(v.dim.has_value(), "smoothness probe needs the dimension");
  SmoothnessVerdict out;
  if (v.is_empty()) {
    out.kind = SmoothnessKind::SmoothEvidence;
    return out;
  }
  const std::size_t n = v.ambient_dim;
  const int d = *v.dim;
  const std::size_t codim = n - static_cast<std::size_t>(d);
  Xorshift64Star rng(rng_seed);

  if (mode == SmoothnessMode::Exact) {
    auto J = jacobian(v);
    auto sing = v.ideal.with(minors(J, codim, v.ideal.field, n));
    auto gb = buchberger(sing, MonomialOrder::degrevlex(), budget);
    if (gb.is_unit()) {
      out.kind = SmoothnessKind::SmoothEvidence;
      return out;
    }
    out.kind = SmoothnessKind::SingularWitness;
    out.witness = detail::exact_witness(sing, budget, rng, out.witness_modular);
    return out;
  }

  const PrimeField k = sampling_field(v.ideal.field);
  const auto Ip = to_prime_field(v.ideal, k);
  const auto J = jacobian(Ip);
  for (int attempt = 0; attempt < kSmoothnessSamples; ++attempt) {
    auto p = sample_point(Ip, d, rng, budget);
    if (!p) break;
    ++out.samples;
    if (matrix_rank(evaluate_matrix(J, std::span<const std::uint64_t>(*p), k), k) < codim) {
      out.kind = SmoothnessKind::SingularWitness;
      out.witness_modular = true;
      out.witness.emplace();
      for (auto c : *p) out.witness->push_back(k.to_string(c));
      return out;
    }
  }
  out.kind = out.samples > 0 ? SmoothnessKind::SmoothEvidence : SmoothnessKind::Inconclusive;
  return out;
}

template <CoefficientField F>
struct TangentBundle {
  Variety<F> base;
  Variety<F> total;  // variables x1..xn, y1..yn
};

/// Generators of TV: the f_i together with grad(f_i)(x) . y in 2n variables.
template <CoefficientField F>
Ideal<F> tangent_bundle_ideal(const Ideal<F>& I) {
  const std::size_t n = I.num_vars, N = 2 * n;
  const F& k = I.field;
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.generators) gens.push_back(f.embed(N, map));
  for (const auto& f : I.generators) {
    Polynomial<F> pairing(k, N);
    for (std::size_t j = 0; j < n; ++j) pairing += f.derivative(j).embed(N, map) * Polynomial<F>::variable(k, N, n + j);
    gens.push_back(std::move(pairing));
  }
  return Ideal<F>(k, N, std::move(gens));
}

template <CoefficientField F>
TangentBundle<F> tangent_bundle(const Variety<F>& v, const Budget& budget = {}) {
  require(!v.is_empty(), "tangent bundle of an empty variety");
  auto names = v.names;
  for (const auto& y : indexed_names(v.ambient_dim, "y")) names.push_back(y);
  auto total = variety_from_ideal(tangent_bundle_ideal(v.ideal), "T(" + v.label + ")", std::move(names), budget);
  if (total.dimension() != 2 * v.dimension())
    fail(ErrorKind::DimensionMismatch, "dim TV = " + std::to_string(total.dimension()) + " but 2 dim V = " +
                                           std::to_string(2 * v.dimension()) + "; input is singular or reducible");
  return {v, std::move(total)};
}

/// Tan(V): closure of the projection of TV to the y-block.
template <CoefficientField F>
Variety<F> tangential_variety(const TangentBundle<F>& tb, const Budget& budget = {}) {
  const std::size_t n = tb.base.ambient_dim;
  auto E = elimination_ideal(tb.total.ideal, n, budget);
  std::vector<std::string> names(tb.total.names.begin() + static_cast<std::ptrdiff_t>(n), tb.total.names.end());
  auto tan = variety_from_ideal(std::move(E), "Tan(" + tb.base.label + ")", std::move(names), budget);
  if (tb.base.dimension() == 1) {
    const int expected = tb.base.deg() == 1 ? 1 : 2;
    if (tan.dimension() != expected)
      fail(ErrorKind::DimensionMismatch, "dim Tan(C) = " + std::to_string(tan.dimension()) + ", expected " + std::to_string(expected));
  }
  return tan;
}

struct BoundReport {
  std::size_t n = 0;
  int d = 0;
  long long deg_V = 0, deg_TV = 0, deg_Tan = 0;
  mpz_class bound_square;  // deg(V)^2: hypersurfaces, generic complete intersections
  mpz_class bound_power, bound_product, bound_naive;
  bool square_bound_applies = false;
  bool square_bound_ok = true;
  bool codim_bounds_ok = false;
  bool naive_ok = false;
  bool lower_bound_ok = false;
  bool tan_le_tv = false;
  bool linearity_consistent = false;
  bool all_ok() const {
    return square_bound_ok && codim_bounds_ok && naive_ok && lower_bound_ok && tan_le_tv && linearity_consistent;
  }
};

inline mpz_class ipow(long long base, long long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), mpz_class(static_cast<long>(base)).get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

/// deg TV and deg Tan against every bound. `generic_complete_intersection`
/// asserts the generators are generic of the right count, which makes the
/// square bound apply beyond hypersurfaces.
template <CoefficientField F>
BoundReport check_degree_bounds(const Variety<F>& v, bool generic_complete_intersection = false, const Budget& budget = {}) {
  auto tb = tangent_bundle(v, budget);
  auto tan = tangential_variety(tb, budget);
  BoundReport r;
  r.n = v.ambient_dim;
  r.d = v.dimension();
  r.deg_V = v.deg();
  r.deg_TV = tb.total.deg();
  r.deg_Tan = tan.deg();
  const long long codim = static_cast<long long>(r.n) - r.d;
  r.bound_square = ipow(r.deg_V, 2);
  r.bound_power = ipow(r.deg_V, codim + 1);
  r.bound_product = mpz_class(static_cast<long>(r.deg_V)) * ipow(codim * (r.deg_V - 1) + 1, r.d);
  r.bound_naive = ipow(r.deg_V, static_cast<long long>(r.n) + r.d + 1);
  const mpz_class tv = static_cast<long>(r.deg_TV);
  r.square_bound_applies = codim == 1 || generic_complete_intersection;
  r.square_bound_ok = !r.square_bound_applies || tv <= r.bound_square;
  r.codim_bounds_ok = tv <= r.bound_power && tv <= r.bound_product;
  r.naive_ok = tv <= r.bound_naive;
  r.lower_bound_ok = r.deg_TV >= r.deg_V;
  r.tan_le_tv = r.deg_Tan <= r.deg_TV;
  r.linearity_consistent = (r.deg_TV == r.deg_V) == (r.deg_V == 1);
  return r;
}

/// Degree as the number of points on d random affine sections (distinct,
/// counted by minimal polynomials). Two seeds must agree.
template <CoefficientField F>
long long random_section_degree(const Variety<F>& v, std::uint64_t rng_seed, const Budget& budget = {}) {
  require(v.dim.has_value(), "section degree needs the dimension");
  if (v.is_empty()) return 0;
  Xorshift64Star rng(rng_seed);
  auto once = [&] {
    auto section = v.ideal;
    for (int i = 0; i < *v.dim; ++i) section = section.with({random_linear_form(v.ideal.field, v.ambient_dim, rng, true)});
    return count_points(section, true, rng.fork(), budget);
  };
  for (int attempt = 0; attempt < kMaxSeedRetries; ++attempt) {
    long long a = once(), b = once();
    if (a == b) return a;
  }
  fail(ErrorKind::DegenerateRandomness, "section degree unstable across " + std::to_string(kMaxSeedRetries) + " seed pairs");
}

/// Hilbert degree against the section count; a mismatch means the input is
/// not equidimensional or not reduced.
template <CoefficientField F>
void cross_check_degree(const Variety<F>& v, std::uint64_t rng_seed, const Budget& budget = {}) {
  const long long sections = random_section_degree(v, rng_seed, budget);
  if (sections != v.deg())
    fail(ErrorKind::Verification, v.label + ": Hilbert degree " + std::to_string(v.deg()) + " but section count " +
                                      std::to_string(sections));
}

}  // namespace tanvar
