#pragma once

// Rational parametrizations t -> (g_1(t)/g_0(t), ..., g_n(t)/g_0(t)) of
// curves: normalization, properness, degree, the parametrized tangent bundle
// and the count of its intersection with a random codimension-2 plane.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "variety.hpp"

namespace tanvar {

enum class ParamKind { Polynomial, Rational };

inline std::string to_string(ParamKind k) { return k == ParamKind::Polynomial ? "polynomial" : "rational"; }

template <CoefficientField F>
struct Parametrization {
  using U = UPoly<F>;
  F field{};
  std::vector<U> numerators;  // g_1..g_n
  U denominator;              // g_0, monic
  ParamKind kind = ParamKind::Polynomial;

  std::size_t num_coords() const { return numerators.size(); }

  /// max deg g_i over i = 0..n
  int delta() const {
    int d = denominator.degree();
    for (const auto& g : numerators) d = std::max(d, g.degree());
    return d;
  }

  /// g_i' g_0 - g_i g_0', the numerators of P'(t) over g_0^2.
  std::vector<U> derivative_numerators() const {
    std::vector<U> out;
    for (const auto& g : numerators) out.push_back(g.derivative() * denominator - g * denominator.derivative());
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < numerators.size(); ++i) {
      if (i) s += ", ";
      s += "(" + numerators[i].to_string() + ")";
      if (kind == ParamKind::Rational) s += "/(" + denominator.to_string() + ")";
    }
    return s + ")";
  }
};

/// Common-denominator form with gcd(g_0, ..., g_n) = 1 and g_0 monic.
template <CoefficientField F>
Parametrization<F> normalize(const F& k, const std::vector<std::pair<UPoly<F>, UPoly<F>>>& components) {
  using U = UPoly<F>;
  require(!components.empty(), "parametrization needs at least one coordinate");
  U g0 = U::constant(k, k.one());
  for (const auto& [num, den] : components) {
    require(!den.is_zero(), "zero denominator in parametrization");
    g0 = (g0 * den) / U::gcd(g0, den);
  }
  g0 = g0.monic();
  std::vector<U> nums;
  for (const auto& [num, den] : components) nums.push_back(num * (g0 / den));
  U common = g0;
  for (const auto& g : nums) common = U::gcd(common, g);
  Parametrization<F> p;
  p.field = k;
  for (auto& g : nums) p.numerators.push_back(g / common);
  p.denominator = (g0 / common).monic();
  const auto lead_inv = k.inv((g0 / common).lead());
  for (auto& g : p.numerators) g = g.scale(lead_inv);
  p.kind = p.denominator.degree() == 0 ? ParamKind::Polynomial : ParamKind::Rational;
  bool all_constant = true;
  for (const auto& g : p.numerators)
    if (!(g.scale(p.denominator.lead()) == p.denominator.scale(g.lead())) && !g.is_zero()) all_constant = false;
  if (all_constant) fail(ErrorKind::Input, "every coordinate of the parametrization is constant");
  return p;
}

/// Parses numerator and denominator texts in the variable t.
template <CoefficientField F>
Parametrization<F> make_parametrization(const F& k, const std::vector<std::string>& numerators, const std::string& denominator = "1") {
  const std::vector<std::string> t{"t"};
  const auto den = UPoly<F>::from_polynomial(parse_polynomial(denominator, t, k));
  std::vector<std::pair<UPoly<F>, UPoly<F>>> comps;
  for (const auto& s : numerators) comps.push_back({UPoly<F>::from_polynomial(parse_polynomial(s, t, k)), den});
  return normalize(k, comps);
}

namespace detail {

template <CoefficientField F>
typename F::Element random_parameter(const F& k, Xorshift64Star& rng) {
  return k.random_nonzero(rng);
}

/// Removes every factor shared with g.
template <CoefficientField F>
UPoly<F> strip_common(UPoly<F> f, const UPoly<F>& g) {
  for (;;) {
    auto c = UPoly<F>::gcd(f, g);
    if (c.degree() <= 0) return f;
    f = f / c;
  }
}

}  // namespace detail

struct ProperResult {
  bool proper = false;
  int fiber = 0;
};

/// Size of the generic fiber of t -> P(t): distinct t with P(t) = P(t0) for
/// random t0, off the poles. Two draws must agree.
template <CoefficientField F>
ProperResult check_properness(const Parametrization<F>& p, std::uint64_t rng_seed) {
  using U = UPoly<F>;
  const F& k = p.field;
  Xorshift64Star rng(rng_seed);
  auto fiber = [&] {
    typename F::Element t0;
    do t0 = detail::random_parameter(k, rng);
    while (k.is_zero(p.denominator.eval(t0)));
    const auto g00 = p.denominator.eval(t0);
    U G(k);
    for (const auto& g : p.numerators) G = U::gcd(G, g.scale(g00) - p.denominator.scale(g.eval(t0)));
    G = detail::strip_common(G, p.denominator);
    return distinct_root_count(G);
  };
  for (int attempt = 0; attempt < kMaxSeedRetries; ++attempt) {
    int a = fiber(), b = fiber();
    if (a == b) return {a == 1, a};
  }
  fail(ErrorKind::DegenerateRandomness, "generic fiber size disagreed across " + std::to_string(kMaxSeedRetries) + " draws");
}

struct ParamDegree {
  int delta = 0;
  int attempts = 0;  // draws of a until Res(G_a, G_a') != 0 with deg G_a = delta
};

/// deg C = max deg g_i, certified by a random combination G_a = sum a_i g_i
/// of full degree with nonvanishing discriminant resultant.
template <CoefficientField F>
ParamDegree param_degree(const Parametrization<F>& p, std::uint64_t rng_seed, bool require_proper = true) {
  using U = UPoly<F>;
  const F& k = p.field;
  if (require_proper && !check_properness(p, rng_seed).proper)
    fail(ErrorKind::Verification, "parametrization is not proper; its degree is not the curve degree");
  ParamDegree out;
  out.delta = p.delta();
  Xorshift64Star rng(rng_seed ^ 0x5DEECE66Dull);
  for (int attempt = 1; attempt <= kMaxSeedRetries; ++attempt) {
    U G = p.denominator.scale(k.random_nonzero(rng));
    for (const auto& g : p.numerators) G = G + g.scale(k.random_nonzero(rng));
    if (G.degree() != out.delta) continue;
    if (k.is_zero(resultant(G, G.derivative()))) continue;
    out.attempts = attempt;
    return out;
  }
  fail(ErrorKind::DegenerateRandomness, "resultant certificate vanished for " + std::to_string(kMaxSeedRetries) + " draws");
}

struct P2Result {
  bool ok = false;
  std::string exclusion;  // square-free polynomial whose roots are excluded
  int exclusion_count = 0;
};

/// P'(t) is not identically zero; its common zeros form the exclusion set.
template <CoefficientField F>
P2Result check_p2(const Parametrization<F>& p) {
  using U = UPoly<F>;
  U common(p.field);
  for (const auto& d : p.derivative_numerators()) common = U::gcd(common, d);
  P2Result r;
  r.ok = false;
  for (const auto& d : p.derivative_numerators()) r.ok = r.ok || !d.is_zero();
  if (!r.ok) return r;
  U sf = common.degree() > 0 ? squarefree_part(common) : U::constant(p.field, p.field.one());
  r.exclusion = sf.to_string();
  r.exclusion_count = sf.degree();
  return r;
}

/// (t, s) -> (P(t), s P'(t)), as numerators over g_0 and s-numerators over g_0^2.
template <CoefficientField F>
struct TangentParametrization {
  std::vector<UPoly<F>> x_numerators;
  UPoly<F> x_denominator;
  std::vector<UPoly<F>> y_numerators;  // multiplied by s
  UPoly<F> y_denominator;

  std::vector<typename F::Element> evaluate(const typename F::Element& t, const typename F::Element& s) const {
    const F& k = x_denominator.field();
    std::vector<typename F::Element> out;
    const auto dx = k.inv(x_denominator.eval(t)), dy = k.inv(y_denominator.eval(t));
    for (const auto& g : x_numerators) out.push_back(k.mul(g.eval(t), dx));
    for (const auto& g : y_numerators) out.push_back(k.mul(s, k.mul(g.eval(t), dy)));
    return out;
  }
};

template <CoefficientField F>
TangentParametrization<F> tangent_bundle_param(const Parametrization<F>& p) {
  return {p.numerators, p.denominator, p.derivative_numerators(), p.denominator * p.denominator};
}

struct DominanceRecord {
  std::string shift;                       // c in t -> t + c
  int reversal_degree = 0;                 // D in t^D g(1/t), 0 when no change was needed
  std::vector<std::string> translation;    // q with new curve = C - q
};

/// Moves a rational parametrization to one with deg g_0 > deg g_i (i >= 1):
/// t -> t + c so no g_i vanishes at 0, then t -> 1/t clearing t^D, then
/// Euclidean division g_i = q_i g_0 + r_i, keeping the r_i. The result
/// parametrizes the translate C - q.
template <CoefficientField F>
std::pair<Parametrization<F>, DominanceRecord> enforce_denominator_dominance(const Parametrization<F>& p, std::uint64_t rng_seed) {
  using U = UPoly<F>;
  require(p.kind == ParamKind::Rational, "denominator dominance applies to rational parametrizations");
  const F& k = p.field;
  bool dominant = true;
  for (const auto& g : p.numerators) dominant = dominant && g.degree() < p.denominator.degree();
  if (dominant) {
    DominanceRecord rec;
    rec.shift = k.to_string(k.zero());
    rec.translation.assign(p.num_coords(), k.to_string(k.zero()));
    return {p, std::move(rec)};
  }
  Xorshift64Star rng(rng_seed);
  for (int attempt = 0; attempt < kMaxSeedRetries; ++attempt) {
    const auto c = detail::random_parameter(k, rng);
    bool ok = !k.is_zero(p.denominator.eval(c));
    for (const auto& g : p.numerators) ok = ok && (g.is_zero() || !k.is_zero(g.eval(c)));
    if (!ok) continue;
    const int D = p.delta();
    U g0 = p.denominator.shift(c).reversed(static_cast<std::size_t>(D));
    DominanceRecord rec;
    rec.shift = k.to_string(c);
    rec.reversal_degree = D;
    std::vector<std::pair<U, U>> comps;
    for (const auto& g : p.numerators) {
      U gt = g.is_zero() ? g : g.shift(c).reversed(static_cast<std::size_t>(D));
      auto [q, r] = gt.divmod(g0);
      require(q.degree() <= 0, "dominance: quotient is not constant");
      rec.translation.push_back(k.to_string(q.coeff(0)));
      comps.push_back({r, g0});
    }
    auto out = normalize(k, comps);
    return {std::move(out), std::move(rec)};
  }
  fail(ErrorKind::DegenerateRandomness, "no shift with nonvanishing g_i(c) in " + std::to_string(kMaxSeedRetries) + " draws");
}

struct ParamReport {
  ParamKind kind = ParamKind::Polynomial;
  int delta = 0;
  bool proper = false;
  int fiber = 0;
  bool p2_ok = false;
  int p2_exclusions = 0;
  long long deg_TC = 0;
  long long predicted = 0;  // 2 delta - 1 (equality) or 3 delta - 2 (bound)
  bool matches = false;
  std::vector<std::uint64_t> seeds;
  std::optional<DominanceRecord> dominance;
};

namespace detail {

/// Points of TC on a random plane {l_1 = l_2 = 0}: after substitution,
/// l_k g_0^2 = g_0 H_k0(t) + s H_k1(t), so solutions are the roots of
/// H_10 H_21 - H_11 H_20 off the zeros of g_0 and H_11. Returns nullopt when
/// the draw is not generic enough to read the count off.
template <CoefficientField F>
std::optional<long long> plane_section_count(const Parametrization<F>& p, Xorshift64Star& rng) {
  using U = UPoly<F>;
  const F& k = p.field;
  const auto d = p.derivative_numerators();
  U H[2][2] = {{U(k), U(k)}, {U(k), U(k)}};
  for (int row = 0; row < 2; ++row) {
    H[row][0] = p.denominator.scale(k.random_nonzero(rng));
    for (const auto& g : p.numerators) H[row][0] = H[row][0] + g.scale(k.random_nonzero(rng));
    for (const auto& dj : d) H[row][1] = H[row][1] + dj.scale(k.random_nonzero(rng));
  }
  U delta = H[0][0] * H[1][1] - H[0][1] * H[1][0];
  if (delta.is_zero() || H[0][1].is_zero()) return std::nullopt;
  if (delta.degree() == 0) return 0;
  U sf = squarefree_part(delta);
  if (U::gcd(sf, p.denominator).degree() > 0) return std::nullopt;
  if (U::gcd(sf, H[0][1]).degree() > 0) return std::nullopt;
  return sf.degree();
}

}  // namespace detail

/// deg TC from the parametrization. Rational inputs are first moved to
/// denominator-dominant form.
template <CoefficientField F>
ParamReport degree_TC_parametric(const Parametrization<F>& input, std::uint64_t rng_seed) {
  ParamReport r;
  r.kind = input.kind;
  r.seeds.push_back(rng_seed);
  auto pr = check_properness(input, rng_seed);
  r.proper = pr.proper;
  r.fiber = pr.fiber;
  if (!r.proper) fail(ErrorKind::Verification, "parametrization is not proper (generic fiber " + std::to_string(pr.fiber) + ")");
  auto p2 = check_p2(input);
  r.p2_ok = p2.ok;
  r.p2_exclusions = p2.exclusion_count;
  if (!r.p2_ok) fail(ErrorKind::Verification, "derivative of the parametrization vanishes identically");
  r.delta = param_degree(input, rng_seed, false).delta;

  Parametrization<F> p = input;
  if (input.kind == ParamKind::Rational) {
    auto [q, rec] = enforce_denominator_dominance(input, rng_seed ^ 0xA5A5A5A5ull);
    p = std::move(q);
    r.dominance = std::move(rec);
  }
  Xorshift64Star rng(rng_seed ^ 0x3C6EF372FE94F82Aull);
  auto draw = [&]() -> long long {
    for (int attempt = 0; attempt < kMaxSeedRetries; ++attempt) {
      auto c = detail::plane_section_count(p, rng);
      if (c) return *c;
    }
    fail(ErrorKind::DegenerateRandomness, "plane section hit the excluded set in " + std::to_string(kMaxSeedRetries) + " draws");
  };
  for (int attempt = 0; attempt < kMaxSeedRetries; ++attempt) {
    long long a = draw(), b = draw();
    if (a != b) continue;
    r.deg_TC = a;
    if (input.kind == ParamKind::Polynomial) {
      r.predicted = 2LL * r.delta - 1;
      r.matches = r.deg_TC == r.predicted;
    } else {
      r.predicted = 3LL * r.delta - 2;
      r.matches = r.deg_TC <= r.predicted;
    }
    return r;
  }
  fail(ErrorKind::DegenerateRandomness, "plane-section counts disagreed across " + std::to_string(kMaxSeedRetries) + " pairs");
}

/// Ideal of the curve in x_1..x_n: eliminate w, t from
/// (x_i g_0(t) - g_i(t), 1 - w g_0(t)).
template <CoefficientField F>
Ideal<F> implicitize_curve(const Parametrization<F>& p, const Budget& budget = {}) {
  const F& k = p.field;
  const std::size_t n = p.num_coords(), N = n + 2;
  auto lift = [&](const UPoly<F>& g) { return g.to_polynomial(N, 1); };
  const auto g0 = lift(p.denominator);
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Polynomial<F>::variable(k, N, 2 + i) * g0 - lift(p.numerators[i]));
  gens.push_back(Polynomial<F>::constant(k, N, k.one()) - Polynomial<F>::variable(k, N, 0) * g0);
  return elimination_ideal(Ideal<F>(k, N, std::move(gens)), 2, budget);
}

}  // namespace tanvar
