#pragma once

#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "staircase/fibers.hpp"

namespace staircase {

/// k_b x^b for a vertex-atomic degree b.
struct SagbiGenerator {
  mpz_class coefficient;
  Degree degree;
};

/// c^u = prod_i c_i^{u_i}
mpz_class coefficient_power(std::span<const std::int64_t> coeffs, const ExponentVector& u);

/// Generators k_b x^b of the subalgebra Z[c_1 x^{a_1}, ..., c_n x^{a_n}]
/// over every atomic degree found by a vertex-mode scan through `bound`,
/// with k_b = gcd{c^u : A u = b}. Sorted by degree.
std::vector<SagbiGenerator> sagbi_generators(const FiberMatrix& a, std::span<const std::int64_t> coeffs,
                                             std::int64_t bound);

/// c^u x^{Au} = remainder * prod_k (k_b x^b)^{exponents[k]}.
struct SagbiFactorization {
  mpz_class remainder;
  std::vector<std::int64_t> exponents;
};

/// Searches exponent vectors phi with sum_k phi_k b_k = A u (generators in
/// the given order, larger multiplicities first) and returns the first one
/// whose coefficient product divides c^u.
std::optional<SagbiFactorization> sagbi_factor(std::span<const SagbiGenerator> basis, const FiberMatrix& a,
                                               std::span<const std::int64_t> coeffs, const ExponentVector& u);

/// Pullback of the monoid ideal generated by t^{b_j} in k[t^{g_1}, ..., t^{g_m}]
/// along x_i -> t^{g_i}, where g_i are the columns of `generators`:
/// minimal a with |a| <= bound and G a in some b_j + NG.
MonomialIdeal monoid_lift(const FiberMatrix& generators, std::span<const Degree> ideal_degrees, std::int64_t bound);

}  // namespace staircase
