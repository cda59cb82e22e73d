#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "staircase/exponent.hpp"

namespace staircase {

/// A monomial ideal in k[x_1..x_n], stored as its minimal generators in
/// lexicographic order. No generator divides another, so two ideals are
/// equal exactly when their generator lists are.
///
/// The zero ideal has no generators; the unit ideal is generated by the
/// zero exponent vector.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars = 0) : nvars_(nvars) {}
  /// Minimalizes and sorts `gens`.
  MonomialIdeal(std::size_t nvars, std::span<const ExponentVector> gens);
  MonomialIdeal(std::size_t nvars, std::initializer_list<ExponentVector> gens)
      : MonomialIdeal(nvars, std::span<const ExponentVector>(gens.begin(), gens.size())) {}

  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars); }
  static MonomialIdeal unit(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  std::span<const ExponentVector> gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<ExponentVector> gens_;
};

/// Divisibility-minimal elements of `gens`, deduplicated, lexicographically
/// sorted. Every input is divisible by some output.
MonomialIdeal minimalize(std::size_t nvars, std::span<const ExponentVector> gens);

bool member(const MonomialIdeal& ideal, const ExponentVector& m);
/// True iff J is a subset of I.
bool contains(const MonomialIdeal& ideal, const MonomialIdeal& sub);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : x^m)
MonomialIdeal quotient(const MonomialIdeal& ideal, const ExponentVector& m);

/// Contains a power of every variable (the unit ideal counts).
bool is_artinian(const MonomialIdeal& ideal);

/// Monomials outside an artinian ideal, lexicographic. Throws DomainError
/// otherwise.
std::vector<ExponentVector> standard_monomials(const MonomialIdeal& ideal);
/// Monomials of total degree <= bound outside the ideal, lexicographic.
std::vector<ExponentVector> standard_monomials_up_to(const MonomialIdeal& ideal, std::int64_t bound);

std::string to_string(const MonomialIdeal& ideal);

}  // namespace staircase
