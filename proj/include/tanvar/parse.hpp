#pragma once

// Recursive-descent reader for the polynomial text format:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' INTEGER)?
//   atom   := INTEGER ('/' INTEGER)? | NAME | '(' expr ')'
// NAME is [A-Za-z][A-Za-z0-9_]*. Implicit multiplication is rejected.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "polynomial.hpp"

namespace tanvar {

namespace detail {

template <CoefficientField F>
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars, const F& field)
      : s_(text), vars_(vars), field_(field) {}

  Polynomial<F> parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  using P = Polynomial<F>;

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Input, "syntax error at position " + std::to_string(pos_) + ": " + msg + " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  P expr() {
    P acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  P term() {
    P acc = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc *= unary();
        continue;
      }
      if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
        error("implicit multiplication is not allowed");
      return acc;
    }
  }

  P unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  P power() {
    P base = atom();
    if (accept('^')) {
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty()) error("'^' must be followed by a non-negative integer literal");
      if (digits.size() > 5 || std::stoul(digits) > 0xFFFF) error("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  P atom() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      P inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(read_digits());
      mpz_class den(1);
      std::size_t save = pos_;
      if (accept('/')) {
        skip_ws();
        std::string d = read_digits();
        if (d.empty()) {
          pos_ = save;
          error("division is only allowed between integer literals");
        }
        den = mpz_class(d);
        if (den == 0) error("zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      return P::constant(field_, vars_.size(), field_.from_rational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return P::variable(field_, vars_.size(), i);
      pos_ = start;
      error("unknown variable '" + name + "'");
    }
    error("unexpected character '" + std::string(1, c) + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  const F& field_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <CoefficientField F>
Polynomial<F> parse_polynomial(std::string_view text, const std::vector<std::string>& vars, const F& field) {
  require(!vars.empty(), "at least one variable name is required");
  return detail::PolyParser<F>(text, vars, field).parse();
}

}  // namespace tanvar
