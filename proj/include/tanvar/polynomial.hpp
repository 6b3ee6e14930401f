#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace tanvar {

template <CoefficientField F>
struct Term {
  Monomial mono;
  typename F::Element coeff;
};

/// Sparse multivariate polynomial over F in a fixed number of variables.
/// Canonical form: nonzero coefficients only, terms sorted by decreasing
/// degrevlex, so two equal polynomials have identical term sequences.
template <CoefficientField F>
class Polynomial {
 public:
  using Field = F;
  using Element = typename F::Element;
  using TermT = Term<F>;

  Polynomial() = default;
  Polynomial(F field, std::size_t num_vars) : field_(std::move(field)), nvars_(num_vars) {
    require(num_vars >= 1 && num_vars <= kMaxVars, "number of variables must be in [1, " + std::to_string(kMaxVars) + "]");
  }

  static Polynomial constant(const F& field, std::size_t n, const Element& c) {
    Polynomial p(field, n);
    if (!field.is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Polynomial from_int(const F& field, std::size_t n, long long c) { return constant(field, n, field.from_int(c)); }

  static Polynomial variable(const F& field, std::size_t n, std::size_t index) {
    require(index < n, "variable index out of range");
    Polynomial p(field, n);
    p.terms_.push_back({Monomial::variable(index), field.one()});
    return p;
  }

  static Polynomial monomial(const F& field, std::size_t n, const Monomial& m, const Element& c) {
    Polynomial p(field, n);
    if (!field.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds a canonical polynomial from arbitrary (possibly repeated, zero) terms.
  static Polynomial from_terms(const F& field, std::size_t n, std::vector<TermT> terms) {
    Polynomial p(field, n);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const F& field() const { return field_; }
  std::size_t num_vars() const { return nvars_; }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  Element constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return field_.zero();
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[var]));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  /// Support: the exponent vectors of the nonzero terms.
  std::vector<Monomial> support() const {
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& t : terms_) s.push_back(t.mono);
    return s;
  }

  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return field_.zero();
  }

  /// Terms sorted by decreasing `order` (the canonical storage is degrevlex).
  std::vector<TermT> sorted_terms(const MonomialOrder& order) const {
    std::vector<TermT> out = terms_;
    if (order.kind != OrderKind::DegRevLex)
      std::sort(out.begin(), out.end(), [&](const TermT& a, const TermT& b) { return order.greater(a.mono, b.mono); });
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !a.field_.equal(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.nvars_);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    const F& k = a.field_;
    std::unordered_map<Monomial, Element, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        Monomial m = ta.mono * tb.mono;
        auto prod = k.mul(ta.coeff, tb.coeff);
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(m, std::move(prod));
        else it->second = k.add(it->second, prod);
      }
    std::vector<TermT> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!k.is_zero(c)) terms.push_back({m, std::move(c)});
    Polynomial r(a.field_, a.nvars_);
    r.terms_ = std::move(terms);
    r.sort_terms();
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const Element& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, nvars_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }

  Polynomial mul_term(const Monomial& m, const Element& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, nvars_);
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return r;  // multiplication by a monomial preserves a monomial order
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(field_, nvars_, field_.one()), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  /// Divides by the leading (degrevlex) coefficient.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(field_.inv(terms_.front().coeff));
  }

  Polynomial derivative(std::size_t var) const {
    require(var < nvars_, "partial derivative: variable index " + std::to_string(var) + " out of range");
    std::vector<TermT> out;
    for (const auto& t : terms_) {
      auto e = t.mono[var];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(var, static_cast<Monomial::Exponent>(e - 1));
      auto c = field_.mul(t.coeff, field_.from_int(e));
      if (!field_.is_zero(c)) out.push_back({m, c});
    }
    return from_terms(field_, nvars_, std::move(out));
  }

  std::vector<Polynomial> gradient() const {
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < nvars_; ++i) g.push_back(derivative(i));
    return g;
  }

  /// Homogenizes with a new variable placed in front (index 0); the old
  /// variable i becomes i + 1.
  Polynomial homogenize() const {
    require(!is_zero(), "cannot homogenize the zero polynomial");
    require(nvars_ + 1 <= kMaxVars, "too many variables to homogenize");
    const auto d = static_cast<int>(degree());
    std::vector<TermT> out;
    for (const auto& t : terms_) {
      std::vector<int> e(nvars_ + 1);
      e[0] = d - static_cast<int>(t.mono.degree());
      for (std::size_t i = 0; i < nvars_; ++i) e[i + 1] = t.mono[i];
      out.push_back({Monomial::from_exponents(e), t.coeff});
    }
    return from_terms(field_, nvars_ + 1, std::move(out));
  }

  Element evaluate(std::span<const Element> point) const {
    require(point.size() == nvars_, "evaluate: point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(nvars_));
    Element acc = field_.zero();
    for (const auto& t : terms_) {
      Element v = t.coeff;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (unsigned e = 0; e < t.mono[i]; ++e) v = field_.mul(v, point[i]);
      acc = field_.add(acc, v);
    }
    return acc;
  }

  /// Substitutes a polynomial (in `target_vars` variables) for every variable.
  Polynomial compose(const std::vector<Polynomial>& images) const {
    require(images.size() == nvars_, "compose: wrong number of images");
    const std::size_t m = images.empty() ? 1 : images.front().num_vars();
    Polynomial acc(field_, m);
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (const auto& t : terms_) {
      Polynomial v = constant(field_, m, t.coeff);
      for (std::size_t i = 0; i < nvars_; ++i) {
        const unsigned e = t.mono[i];
        if (!e) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(field_, m, field_.one()));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        v = v * cache[e];
      }
      acc += v;
    }
    return acc;
  }

  /// Re-indexes variables into a ring with `new_nvars` variables; variable i
  /// maps to `mapping[i]`.
  Polynomial embed(std::size_t new_nvars, std::span<const std::size_t> mapping) const {
    require(mapping.size() == nvars_, "embed: mapping size mismatch");
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::vector<int> e(new_nvars, 0);
      for (std::size_t i = 0; i < nvars_; ++i) {
        require(mapping[i] < new_nvars, "embed: target index out of range");
        e[mapping[i]] += t.mono[i];
      }
      out.push_back({Monomial::from_exponents(e), t.coeff});
    }
    return from_terms(field_, new_nvars, std::move(out));
  }

  /// Shifts variables up by `offset` into a ring with `new_nvars` variables.
  Polynomial shifted(std::size_t new_nvars, std::size_t offset) const {
    std::vector<std::size_t> map(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) map[i] = i + offset;
    return embed(new_nvars, map);
  }

  /// Coefficients of powers of `var`: result[k] is the coefficient of var^k,
  /// a polynomial in the same ring not involving `var`.
  std::vector<Polynomial> coefficients_in(std::size_t var) const {
    std::vector<Polynomial> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, Polynomial(field_, nvars_));
    std::vector<std::vector<TermT>> buckets(out.size());
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      auto e = m[var];
      m.set(var, 0);
      buckets[e].push_back({m, t.coeff});
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = from_terms(field_, nvars_, std::move(buckets[k]));
    return out;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = field_.to_string(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c = c.substr(1);
      if (first) s += negative ? "-" : "";
      else s += negative ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (!t.mono[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
      }
      if (mono.empty()) s += c;
      else if (c == "1") s += mono;
      else s += (c.find('/') != std::string::npos ? "(" + c + ")" : c) + "*" + mono;
    }
    return s;
  }

  std::string to_string() const { return to_string(default_names(nvars_)); }

  static std::vector<std::string> default_names(std::size_t n, const std::string& stem = "x") {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(stem + std::to_string(i + 1));
    return v;
  }

 private:
  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    require(a.nvars_ == b.nvars_, "polynomial arity mismatch: " + std::to_string(a.nvars_) + " vs " + std::to_string(b.nvars_));
    require(a.field_ == b.field_, "polynomial field mismatch");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_compatible(a, b);
    const F& k = a.field_;
    const MonomialOrder ord = MonomialOrder::degrevlex();
    Polynomial r(a.field_, a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c = i == a.terms_.size() ? -1 : j == b.terms_.size() ? 1 : ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? k.neg(t.coeff) : t.coeff});
      } else {
        auto s = subtract ? k.sub(a.terms_[i].coeff, b.terms_[j].coeff) : k.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (!k.is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    const MonomialOrder ord = MonomialOrder::degrevlex();
    std::sort(terms_.begin(), terms_.end(), [&](const TermT& a, const TermT& b) { return ord.greater(a.mono, b.mono); });
  }

  void canonicalize() {
    sort_terms();
    std::vector<TermT> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) out.back().coeff = field_.add(out.back().coeff, t.coeff);
      else out.push_back(std::move(t));
    }
    std::erase_if(out, [&](const TermT& t) { return field_.is_zero(t.coeff); });
    terms_ = std::move(out);
  }

  F field_{};
  std::size_t nvars_ = 1;
  std::vector<TermT> terms_;
};

/// Reduces a rational polynomial modulo p. Fails if a denominator vanishes mod p.
inline Polynomial<PrimeField> reduce_mod(const Polynomial<Rationals>& f, const PrimeField& k) {
  std::vector<Term<PrimeField>> terms;
  for (const auto& t : f.terms()) terms.push_back({t.mono, k.from_rational(t.coeff)});
  return Polynomial<PrimeField>::from_terms(k, f.num_vars(), std::move(terms));
}

}  // namespace tanvar
