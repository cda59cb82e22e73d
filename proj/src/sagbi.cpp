#include "staircase/sagbi.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "staircase/lattice.hpp"

namespace staircase {

mpz_class coefficient_power(std::span<const std::int64_t> coeffs, const ExponentVector& u) {
  require_same_dim(coeffs.size(), u.size(), "coefficient_power");
  mpz_class out = 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), mpz_class(static_cast<long>(coeffs[i])).get_mpz_t(),
               static_cast<unsigned long>(u[i]));
    out *= p;
  }
  return out;
}

std::vector<SagbiGenerator> sagbi_generators(const FiberMatrix& a, std::span<const std::int64_t> coeffs,
                                             std::int64_t bound) {
  require_same_dim(a.cols(), coeffs.size(), "sagbi coefficients");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) throw DomainError("sagbi_generators: coefficient " + std::to_string(i) + " is zero");
  }
  std::vector<SagbiGenerator> out;
  for (auto& b : atomic_scan(a, bound)) {
    mpz_class k = 0;
    for (const auto& u : fiber_points(a, b)) {
      mpz_class c = coefficient_power(coeffs, u);
      mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
    }
    out.push_back({k, std::move(b)});
  }
  return out;
}

std::optional<SagbiFactorization> sagbi_factor(std::span<const SagbiGenerator> basis, const FiberMatrix& a,
                                               std::span<const std::int64_t> coeffs, const ExponentVector& u) {
  const Degree target = a.apply(u);
  for (const auto& g : basis) {
    require_same_dim(target.size(), g.degree.size(), "sagbi_factor basis degree");
    if (g.degree.is_zero()) throw DomainError("sagbi_factor: zero basis degree");
  }
  const mpz_class element = coefficient_power(coeffs, u);
  std::vector<std::int64_t> remaining(target.begin(), target.end());
  std::vector<std::int64_t> phi(basis.size(), 0);
  std::optional<SagbiFactorization> found;

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (found) return;
    if (k == basis.size()) {
      if (std::any_of(remaining.begin(), remaining.end(), [](std::int64_t x) { return x != 0; })) return;
      mpz_class product = 1;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), basis[j].coefficient.get_mpz_t(), static_cast<unsigned long>(phi[j]));
        product *= p;
      }
      if (product != 0 && mpz_divisible_p(element.get_mpz_t(), product.get_mpz_t())) {
        found = SagbiFactorization{element / product, phi};
      }
      return;
    }
    const auto& b = basis[k].degree;
    std::int64_t cap = std::numeric_limits<std::int64_t>::max();
    for (std::size_t r = 0; r < b.size(); ++r) {
      if (b[r] > 0) cap = std::min(cap, remaining[r] / b[r]);
    }
    for (std::int64_t m = cap; m >= 0 && !found; --m) {
      phi[k] = m;
      for (std::size_t r = 0; r < b.size(); ++r) remaining[r] -= m * b[r];
      rec(k + 1);
      for (std::size_t r = 0; r < b.size(); ++r) remaining[r] += m * b[r];
    }
    phi[k] = 0;
  };
  rec(0);
  return found;
}

MonomialIdeal monoid_lift(const FiberMatrix& generators, std::span<const Degree> ideal_degrees, std::int64_t bound) {
  if (bound < 0) throw DomainError("monoid_lift: negative bound");
  for (const auto& b : ideal_degrees) require_same_dim(generators.rows(), b.size(), "monoid_lift ideal degree");
  std::vector<ExponentVector> hits;
  for (auto& a : monomials_up_to(generators.cols(), bound)) {
    const Degree value = generators.apply(a);
    for (const auto& b : ideal_degrees) {
      if (divides(b, value) && has_lattice_point(generators, value - b)) {
        hits.push_back(std::move(a));
        break;
      }
    }
  }
  return MonomialIdeal(generators.cols(), hits);
}

}  // namespace staircase
