#pragma once

// Dense univariate polynomials over a coefficient field: the Euclidean
// toolbox (gcd, square-free part, resultant) plus root extraction over F_p.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace tanvar {

template <CoefficientField F>
class UPoly {
 public:
  using Element = typename F::Element;

  UPoly() = default;
  explicit UPoly(F field) : field_(std::move(field)) {}
  UPoly(F field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const F& k, const Element& c) { return UPoly(k, {c}); }
  static UPoly x(const F& k) { return UPoly(k, {k.zero(), k.one()}); }
  /// c0 + c1 t with integer coefficients.
  static UPoly linear(const F& k, const Element& c0, const Element& c1) { return UPoly(k, {c0, c1}); }

  /// Reads a multivariate polynomial that only involves `var`.
  static UPoly from_polynomial(const Polynomial<F>& p, std::size_t var = 0) {
    UPoly u(p.field());
    for (const auto& t : p.terms()) {
      for (std::size_t i = 0; i < p.num_vars(); ++i)
        require(i == var || t.mono[i] == 0, "polynomial is not univariate in the requested variable");
      std::size_t e = t.mono[var];
      if (u.c_.size() <= e) u.c_.resize(e + 1, p.field().zero());
      u.c_[e] = t.coeff;
    }
    u.trim();
    return u;
  }

  Polynomial<F> to_polynomial(std::size_t num_vars = 1, std::size_t var = 0) const {
    std::vector<Term<F>> terms;
    for (std::size_t e = 0; e < c_.size(); ++e)
      if (!field_.is_zero(c_[e])) terms.push_back({Monomial::variable(var, static_cast<int>(e)), c_[e]});
    return Polynomial<F>::from_terms(field_, num_vars, std::move(terms));
  }

  const F& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Element lead() const { return c_.empty() ? field_.zero() : c_.back(); }
  Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

  Element eval(const Element& t) const {
    Element acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, t), c_[i]);
    return acc;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) { return combine(a, b, false); }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return combine(a, b, true); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
    const F& k = a.field_;
    std::vector<Element> r(a.c_.size() + b.c_.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (k.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a.c_[i], b.c_[j]));
    }
    return UPoly(k, std::move(r));
  }

  UPoly scale(const Element& s) const {
    std::vector<Element> r = c_;
    for (auto& v : r) v = field_.mul(v, s);
    return UPoly(field_, std::move(r));
  }

  UPoly monic() const { return is_zero() ? *this : scale(field_.inv(lead())); }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly(field_);
    std::vector<Element> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<long long>(i)));
    return UPoly(field_, std::move(r));
  }

  /// Quotient and remainder of Euclidean division.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    require(!d.is_zero(), "univariate division by zero");
    const F& k = field_;
    std::vector<Element> r = c_;
    if (degree() < d.degree()) return {UPoly(k), *this};
    std::vector<Element> q(c_.size() - d.c_.size() + 1, k.zero());
    const Element inv_lead = k.inv(d.lead());
    for (std::size_t i = q.size(); i-- > 0;) {
      Element f = k.mul(r[i + d.c_.size() - 1], inv_lead);
      q[i] = f;
      if (k.is_zero(f)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[i + j] = k.sub(r[i + j], k.mul(f, d.c_[j]));
    }
    r.resize(d.c_.size() - 1);
    return {UPoly(k, std::move(q)), UPoly(k, std::move(r))};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return a.divmod(b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return a.divmod(b).second; }

  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// p(t + c).
  UPoly shift(const Element& c) const {
    UPoly r(field_), lin = linear(field_, c, field_.one());
    for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + constant(field_, c_[i]);
    return r;
  }

  /// t^n p(1/t) with n >= degree.
  UPoly reversed(std::size_t n) const {
    require(static_cast<int>(n) >= degree(), "reversal length below degree");
    std::vector<Element> r(n + 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
    return UPoly(field_, std::move(r));
  }

  /// a^e mod m.
  static UPoly powmod(UPoly a, std::uint64_t e, const UPoly& m) {
    UPoly r = constant(a.field_, a.field_.one()) % m;
    a = a % m;
    while (e) {
      if (e & 1) r = (r * a) % m;
      e >>= 1;
      if (e) a = (a * a) % m;
    }
    return r;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::vector<std::string> names{var};
    return to_polynomial().to_string(names);
  }

 private:
  static UPoly combine(const UPoly& a, const UPoly& b, bool subtract) {
    const F& k = a.is_zero() && !b.is_zero() ? b.field_ : a.field_;
    std::vector<Element> r(std::max(a.c_.size(), b.c_.size()), k.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = subtract ? k.sub(r[i], b.c_[i]) : k.add(r[i], b.c_[i]);
    return UPoly(k, std::move(r));
  }

  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_{};
  std::vector<Element> c_;  // c_[i] is the coefficient of t^i
};

/// f / gcd(f, f'), monic. Requires characteristic 0 or > deg f.
template <CoefficientField F>
UPoly<F> squarefree_part(const UPoly<F>& f) {
  require(!f.is_zero(), "square-free part of the zero polynomial");
  const auto p = f.field().characteristic();
  require(p == 0 || p > static_cast<std::uint64_t>(f.degree()),
          "square-free part is unsafe: characteristic " + std::to_string(p) + " <= degree " + std::to_string(f.degree()));
  if (f.degree() <= 0) return UPoly<F>::constant(f.field(), f.field().one());
  return (f / UPoly<F>::gcd(f, f.derivative())).monic();
}

template <CoefficientField F>
Polynomial<F> squarefree_part(const Polynomial<F>& f) {
  std::size_t var = 0;
  for (std::size_t i = 0; i < f.num_vars(); ++i)
    if (f.degree_in(i) > 0) var = i;
  return squarefree_part(UPoly<F>::from_polynomial(f, var)).to_polynomial(f.num_vars(), var);
}

/// Number of distinct roots over the algebraic closure.
template <CoefficientField F>
int distinct_root_count(const UPoly<F>& f) {
  return f.is_zero() ? -1 : squarefree_part(f).degree();
}

/// Resultant over a field by the Euclidean remainder sequence.
template <CoefficientField F>
typename F::Element resultant(UPoly<F> a, UPoly<F> b) {
  const F& k = a.field();
  if (a.is_zero() || b.is_zero()) return k.zero();
  typename F::Element res = k.one();
  while (b.degree() > 0) {
    const int da = a.degree(), db = b.degree();
    UPoly<F> r = a % b;
    if (r.is_zero()) return k.zero();
    if ((da & 1) && (db & 1)) res = k.neg(res);
    const int dr = r.degree();
    auto lb = b.lead();
    for (int i = 0; i < da - dr; ++i) res = k.mul(res, lb);
    a = std::move(b);
    b = std::move(r);
  }
  // b is a nonzero constant
  auto lb = b.lead();
  for (int i = 0; i < a.degree(); ++i) res = k.mul(res, lb);
  return res;
}

/// Distinct roots in F_p of f, in increasing order (Cantor-Zassenhaus
/// equal-degree splitting of gcd(f, t^p - t)).
inline std::vector<std::uint64_t> roots_in_prime_field(const UPoly<PrimeField>& f, Xorshift64Star& rng) {
  using U = UPoly<PrimeField>;
  const PrimeField& k = f.field();
  std::vector<std::uint64_t> out;
  if (f.degree() <= 0) return out;
  U g = squarefree_part(f);
  const U tpow = U::powmod(U::x(k), k.characteristic(), g);
  g = U::gcd(g, tpow - U::x(k));
  std::vector<U> stack{g};
  while (!stack.empty()) {
    U h = stack.back();
    stack.pop_back();
    if (h.degree() <= 0) continue;
    if (h.degree() == 1) {
      out.push_back(k.neg(h.monic().coeff(0)));
      continue;
    }
    for (int attempt = 0;; ++attempt) {
      if (attempt > 200) fail(ErrorKind::DegenerateRandomness, "root splitting did not converge");
      U w = U::linear(k, k.random_element(rng), k.one());
      U s = U::powmod(w, (k.characteristic() - 1) / 2, h) - U::constant(k, k.one());
      U d = U::gcd(h, s);
      if (d.degree() > 0 && d.degree() < h.degree()) {
        stack.push_back(d);
        stack.push_back(h / d);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tanvar
