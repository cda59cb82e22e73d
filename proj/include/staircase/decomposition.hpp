#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

/// The monomial prime P_tau = <x_i : i not in tau>. `tau` holds the
/// 0-based indices of the variables that do NOT appear, sorted ascending.
class MonomialPrime {
 public:
  MonomialPrime(std::size_t nvars, std::vector<std::size_t> tau);

  /// The prime generated by the support of `component`'s generators.
  static MonomialPrime radical_of_irreducible(const MonomialIdeal& component);

  std::size_t nvars() const { return nvars_; }
  const std::vector<std::size_t>& tau() const { return tau_; }
  /// Variables generating the prime (complement of tau).
  std::vector<std::size_t> variables() const;
  MonomialIdeal ideal() const;

  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;
  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;

 private:
  std::size_t nvars_;
  std::vector<std::size_t> tau_;
};

struct PrimaryComponent {
  MonomialPrime prime;
  MonomialIdeal component;

  friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;
};

/// Irredundant decomposition into ideals generated by pure powers of
/// variables, sorted canonically. Throws DomainError for the zero and unit
/// ideals.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal);

/// Radicals of the irreducible components, sorted, without repeats.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

/// One component per associated prime, each the intersection of the
/// irreducible components sharing that radical. Sorted by prime.
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal);

/// The component restricted to its own variables is artinian there and its
/// generators use exactly the prime's variables.
bool is_primary_to(const MonomialIdeal& component, const MonomialPrime& prime);

}  // namespace staircase
