#pragma once

#include <stdexcept>
#include <string>

namespace tanvar {

/// Machine-readable failure categories. The CLI maps each to an exit code.
enum class ErrorKind {
  Input,                 // malformed text, arity/field mismatch, bad arguments
  Budget,                // Groebner resource cap exceeded
  DegenerateRandomness,  // random draws kept hitting a non-generic locus
  DimensionMismatch,     // structural dimension check failed
  Verification,          // a cross-check between pipelines disagreed
  NoRationalPoint,       // point search exhausted its hyperplanes
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input: return "input";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::DegenerateRandomness: return "degenerate-randomness";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::Verification: return "verification";
    case ErrorKind::NoRationalPoint: return "no-rational-point";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(ErrorKind::Input, msg);
}

}  // namespace tanvar
