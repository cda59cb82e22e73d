#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "staircase/errors.hpp"

namespace staircase {

/// A monomial x^u as its exponent vector u in N^n. Also used for degrees
/// b in N^d; both are plain nonnegative integer tuples.
///
/// Ordering is lexicographic on the tuple, which is the canonical order used
/// for generator lists and all sorted outputs.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<std::int64_t> e) : ExponentVector(std::vector<std::int64_t>(e)) {}
  explicit ExponentVector(std::vector<std::int64_t> e);

  /// x_i^power in n variables.
  static ExponentVector unit(std::size_t n, std::size_t i, std::int64_t power = 1);

  std::size_t size() const { return e_.size(); }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  std::span<const std::int64_t> view() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  std::int64_t total_degree() const;
  bool is_zero() const;
  /// Number of variables with a positive exponent.
  std::size_t support_size() const;
  /// If the monomial is a power of a single variable x_i (exponent > 0),
  /// returns i. The constant monomial is not reported here.
  std::optional<std::size_t> pure_power_variable() const;

  /// Copy with coordinate i replaced.
  ExponentVector with(std::size_t i, std::int64_t value) const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> e_;
};

using Degree = ExponentVector;

/// a | b, i.e. a_i <= b_i for all i.
bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
/// Exact difference; throws DomainError if some coordinate would go negative.
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
/// max(a - b, 0) componentwise: the generator of (x^a) : x^b.
ExponentVector colon(const ExponentVector& a, const ExponentVector& b);

std::string to_string(const ExponentVector& u);

/// All u in N^n with |u| <= bound, in lexicographic order.
std::vector<ExponentVector> monomials_up_to(std::size_t n, std::int64_t bound);

}  // namespace staircase
