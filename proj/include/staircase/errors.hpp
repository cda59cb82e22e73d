#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace staircase {

/// Operands live in different ambient rings or have incompatible shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument violates an operation's precondition (non-artinian input,
/// degenerate ideal, empty fiber, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Checked 64-bit exponent arithmetic left the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent addition overflows int64");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent multiplication overflows int64");
  return r;
}

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
  }
}

}  // namespace staircase
