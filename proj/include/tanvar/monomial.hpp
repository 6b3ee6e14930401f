#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace tanvar {

inline constexpr std::size_t kMaxVars = 24;

/// Exponent vector with inline storage. Unused trailing slots are zero, so a
/// monomial does not need to know how many variables its ring has.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() { exps_.fill(0); }

  static Monomial from_exponents(std::span<const int> e) {
    require(e.size() <= kMaxVars, "too many variables (max " + std::to_string(kMaxVars) + ")");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      require(e[i] >= 0 && e[i] <= 0xFFFF, "exponent out of range");
      m.exps_[i] = static_cast<Exponent>(e[i]);
      m.deg_ += static_cast<std::uint32_t>(e[i]);
    }
    return m;
  }

  static Monomial variable(std::size_t i, int power = 1) {
    require(i < kMaxVars, "variable index out of range");
    Monomial m;
    m.exps_[i] = static_cast<Exponent>(power);
    m.deg_ = static_cast<std::uint32_t>(power);
    return m;
  }

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, Exponent e) {
    deg_ = deg_ - exps_[i] + e;
    exps_[i] = e;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.exps_[i]) + b.exps_[i];
      if (s > 0xFFFF) fail(ErrorKind::Input, "exponent overflow");
      m.exps_[i] = static_cast<Exponent>(s);
    }
    m.deg_ = a.deg_ + b.deg_;
    return m;
  }

  /// a / b; caller guarantees b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    m.deg_ = a.deg_ - b.deg_;
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      m.deg_ += m.exps_[i];
    }
    return m;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.exps_[i] && b.exps_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return deg_ == o.deg_ && exps_ == o.exps_; }

  std::size_t hash() const {
    std::size_t h = deg_;
    for (auto e : exps_) h = h * 1000003u ^ e;
    return h;
  }

  std::vector<int> exponents(std::size_t nvars) const {
    return std::vector<int>(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(nvars));
  }

 private:
  std::array<Exponent, kMaxVars> exps_;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { Lex, DegRevLex, BlockElimination };

/// A monomial order on the first `num_vars` variables. BlockElimination(k)
/// compares the degree in the first k variables first, then degrevlex on that
/// block, then degrevlex on the rest, so any monomial touching the first block
/// outranks every monomial free of it.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::size_t block_split = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
  static MonomialOrder block(std::size_t k) { return {OrderKind::BlockElimination, k}; }

  /// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::Lex:
        for (std::size_t i = 0; i < kMaxVars; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case OrderKind::DegRevLex:
        return grevlex_range(a, b, 0, kMaxVars, a.degree(), b.degree());
      case OrderKind::BlockElimination: {
        std::uint32_t da = 0, db = 0;
        for (std::size_t i = 0; i < block_split; ++i) {
          da += a[i];
          db += b[i];
        }
        if (int c = grevlex_range(a, b, 0, block_split, da, db)) return c;
        return grevlex_range(a, b, block_split, kMaxVars, a.degree() - da, b.degree() - db);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                           std::uint32_t da, std::uint32_t db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace tanvar
