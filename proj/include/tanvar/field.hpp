#pragma once

// Coefficient fields. Every algebraic routine in the library is a template
// over one of these; a field object is a small value carried by each
// polynomial, so no modulus lives in global state.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "error.hpp"
#include "random.hpp"

namespace tanvar {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ull;  // 2^31 - 1
inline constexpr std::uint64_t kMinPrime = 1ull << 20;
inline constexpr std::int64_t kRandomRationalBound = 1000;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::PrimeField;
  std::uint64_t characteristic = kDefaultPrime;

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::uint64_t p = kDefaultPrime) {
    require(p >= kMinPrime && p < (1ull << 32) && is_prime(p),
            "prime field characteristic must be a prime in [2^20, 2^32), got " + std::to_string(p));
    return {FieldKind::PrimeField, p};
  }
  bool operator==(const FieldSpec&) const = default;
  std::string name() const {
    return kind == FieldKind::Rationals ? "Q" : "F_" + std::to_string(characteristic);
  }
};

/// Exact rationals backed by GMP.
class Rationals {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(mpz_class(std::to_string(v))); }
  Element from_rational(const mpq_class& q) const { return q; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) fail(ErrorKind::Input, "division by zero in Q");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  /// Uniform in {-B..B} \ {0}, B = 1000.
  Element random_nonzero(Xorshift64Star& rng) const {
    std::int64_t v = 0;
    while (v == 0) v = rng.between(-kRandomRationalBound, kRandomRationalBound);
    return from_int(v);
  }

  std::uint64_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::string to_string(const Element& a) const { return a.get_str(); }
  bool operator==(const Rationals&) const = default;
};

/// Z/pZ for a prime p < 2^32; elements are kept reduced in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(FieldSpec::prime(p).characteristic) {}

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  Element from_rational(const mpq_class& q) const {
    mpz_class pz(std::to_string(p_));
    mpz_class num = q.get_num() % pz, den = q.get_den() % pz;
    if (num < 0) num += pz;
    if (den == 0) fail(ErrorKind::Input, "denominator " + q.get_den().get_str() + " is not invertible modulo " + std::to_string(p_));
    return mul(num.get_ui(), inv(den.get_ui()));
  }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Element inv(Element a) const {
    if (a == 0) fail(ErrorKind::Input, "division by zero in F_" + std::to_string(p_));
    // extended Euclid on signed 64-bit values
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return static_cast<Element>(t < 0 ? t + static_cast<std::int64_t>(p_) : t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element random_nonzero(Xorshift64Star& rng) const { return 1 + rng.below(p_ - 1); }
  Element random_element(Xorshift64Star& rng) const { return rng.below(p_); }

  std::uint64_t characteristic() const { return p_; }
  FieldSpec spec() const { return {FieldKind::PrimeField, p_}; }
  /// Symmetric representative, so small negative numbers print naturally.
  std::string to_string(Element a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

template <class F>
concept CoefficientField = requires(const F& k, const typename F::Element& a, Xorshift64Star& rng) {
  { k.zero() } -> std::same_as<typename F::Element>;
  { k.one() } -> std::same_as<typename F::Element>;
  { k.from_int(1LL) } -> std::same_as<typename F::Element>;
  { k.add(a, a) } -> std::same_as<typename F::Element>;
  { k.sub(a, a) } -> std::same_as<typename F::Element>;
  { k.mul(a, a) } -> std::same_as<typename F::Element>;
  { k.neg(a) } -> std::same_as<typename F::Element>;
  { k.inv(a) } -> std::same_as<typename F::Element>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.random_nonzero(rng) } -> std::same_as<typename F::Element>;
  { k.characteristic() } -> std::same_as<std::uint64_t>;
};

static_assert(CoefficientField<Rationals>);
static_assert(CoefficientField<PrimeField>);

}  // namespace tanvar
