#pragma once

#include <stdexcept>
#include <string>

namespace lw {

// Division by zero, evaluation at a pole.
struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid (type, rank) or malformed user input.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (e.g. not a positive root).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates a bug rather than bad input.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested exponent window cannot be certified exact. Carries the window
// that can be certified, if any.
struct TruncationError : std::runtime_error {
  TruncationError(const std::string& msg, int lo, int hi, bool has_window)
      : std::runtime_error(msg), certified_lo(lo), certified_hi(hi), has_certified(has_window) {}
  int certified_lo;
  int certified_hi;
  bool has_certified;
};

}  // namespace lw
