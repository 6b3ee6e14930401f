#pragma once

// Curve invariants: tangent directions, the generic number of points sharing a
// tangent direction, and the identity deg TC = deg C + omega * deg Tan(C).

#include <optional>
#include <string>
#include <vector>

#include "variety.hpp"

namespace tanvar {

/// Kernel direction of the Jacobian at a smooth point of a curve given by
/// `I`, scaled so its first nonzero coordinate is 1.
template <CoefficientField F>
std::vector<typename F::Element> tangent_direction_at(const Ideal<F>& I, std::span<const typename F::Element> point) {
  const F& k = I.field;
  const std::size_t n = I.num_vars;
  require(point.size() == n, "point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(n));
  for (const auto& g : I.generators)
    if (!k.is_zero(g.evaluate(point))) fail(ErrorKind::Input, "point is not on the curve");
  auto M = evaluate_matrix(jacobian(I), point, k);
  auto ker = kernel_basis(M, n, k);
  if (ker.size() != 1) fail(ErrorKind::Input, "Jacobian rank at the point is not n - 1 (singular point)");
  auto v = ker.front();
  for (const auto& c : v)
    if (!k.is_zero(c)) {
      auto inv = k.inv(c);
      for (auto& x : v) x = k.mul(x, inv);
      break;
    }
  return v;
}

template <CoefficientField F>
std::vector<typename F::Element> tangent_direction_at(const Variety<F>& c, std::span<const typename F::Element> point) {
  require(c.dimension() == 1, "tangent direction needs a curve");
  return tangent_direction_at(c.ideal, point);
}

/// C_v = {x in C : v in T_x C}, cut out by the f_i and grad(f_i) . v.
template <CoefficientField F>
Ideal<F> tangency_locus(const Ideal<F>& I, std::span<const typename F::Element> v) {
  const std::size_t n = I.num_vars;
  std::vector<Polynomial<F>> extra;
  for (const auto& f : I.generators) {
    Polynomial<F> pairing(I.field, n);
    for (std::size_t j = 0; j < n; ++j) pairing += f.derivative(j).scale(v[j]);
    extra.push_back(std::move(pairing));
  }
  return I.with(std::move(extra));
}

struct OmegaResult {
  long long omega = 0;
  std::vector<std::string> base_point;  // F_p coordinates of the sampled point
  std::vector<std::string> direction;   // the generic v, in F_p
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
};

/// Generic fiber size of TC -> Tan(C). A line gives 0. Otherwise v is the
/// tangent direction at a random F_p-point of C and the fiber is C_v, counted
/// without multiplicity; two independent base points must agree.
template <CoefficientField F>
OmegaResult omega(const Variety<F>& c, std::uint64_t rng_seed, const Budget& budget = {}) {
  require(c.dimension() == 1, "omega is defined for curves");
  OmegaResult out;
  out.seed = rng_seed;
  if (c.deg() == 1) return out;
  const PrimeField k = sampling_field(c.ideal.field);
  out.prime = k.characteristic();
  const auto Ip = to_prime_field(c.ideal, k);
  Xorshift64Star rng(rng_seed);
  auto one = [&](OmegaResult& r) {
    auto p = sample_point(Ip, 1, rng, budget);
    if (!p) fail(ErrorKind::NoRationalPoint, "no F_p point found on the curve after " + std::to_string(kMaxSectionAttempts) + " sections");
    auto v = tangent_direction_at(Ip, std::span<const std::uint64_t>(*p));
    r.base_point.clear();
    r.direction.clear();
    for (auto x : *p) r.base_point.push_back(k.to_string(x));
    for (auto x : v) r.direction.push_back(k.to_string(x));
    return count_points(tangency_locus(Ip, std::span<const std::uint64_t>(v)), true, rng.fork(), budget);
  };
  for (int attempt = 0; attempt < kMaxSeedRetries; ++attempt) {
    OmegaResult second = out;
    long long a = one(out);
    long long b = one(second);
    if (a == b) {
      out.omega = a;
      return out;
    }
  }
  fail(ErrorKind::DegenerateRandomness, "omega disagreed across " + std::to_string(kMaxSeedRetries) + " pairs of base points");
}

struct CurveReport {
  std::string label;
  long long deg_C = -1, deg_TC = -1, deg_Tan = -1, omega = -1;
  bool identity_holds = false;
  bool omega_bound_holds = false;
  std::vector<std::string> generic_v;
  std::uint64_t seed = 0;
  std::uint64_t omega_prime = 0;
  std::optional<ErrorKind> failure_kind;
  std::string failure;
};

/// Computes deg C (Hilbert), deg TC (Hilbert of the tangent bundle), deg Tan
/// (elimination) and omega (fiber count) separately, then compares.
template <CoefficientField F>
CurveReport verify_curve_identity(const Variety<F>& c, std::uint64_t rng_seed, const Budget& budget = {}) {
  CurveReport r;
  r.label = c.label;
  r.seed = rng_seed;
  try {
    require(c.dimension() == 1, "the degree identity needs a curve (dimension " + std::to_string(c.dimension()) + ")");
    r.deg_C = c.deg();
    auto tb = tangent_bundle(c, budget);
    r.deg_TC = tb.total.deg();
    r.deg_Tan = tangential_variety(tb, budget).deg();
    auto w = omega(c, rng_seed, budget);
    r.omega = w.omega;
    r.generic_v = w.direction;
    r.omega_prime = w.prime;
    r.identity_holds = r.deg_TC == r.deg_C + r.omega * r.deg_Tan;
    r.omega_bound_holds = r.omega <= r.deg_C * (r.deg_C - 1) && (r.omega > 0 || r.deg_C == 1);
  } catch (const Error& e) {
    r.failure_kind = e.kind();
    r.failure = e.what();
  }
  return r;
}

}  // namespace tanvar
