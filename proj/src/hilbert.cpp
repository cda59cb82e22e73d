#include "staircase/hilbert.hpp"

#include <string>

#include "staircase/lattice.hpp"

namespace staircase {

Grading Grading::standard(std::size_t nvars) {
  return Grading(FiberMatrix(1, nvars, std::vector<std::int64_t>(nvars, 1)));
}

HilbertNumerator::HilbertNumerator(Terms terms) {
  for (auto& [t, c] : terms) add(t, c);
}

std::int64_t HilbertNumerator::coefficient(const ExponentVector& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

void HilbertNumerator::add(const ExponentVector& t, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, 0);
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t hilbert_function(const MonomialIdeal& ideal, const Grading& grading, const Degree& b) {
  require_same_dim(ideal.nvars(), grading.nvars(), "hilbert_function");
  std::int64_t count = 0;
  for (const auto& u : lattice_points(grading.matrix(), b)) {
    if (!member(ideal, u)) ++count;
  }
  return count;
}

namespace {

void inclusion_exclusion(std::span<const ExponentVector> gens, std::size_t next, const ExponentVector& lcm_so_far,
                         std::int64_t sign, HilbertNumerator& out) {
  out.add(lcm_so_far, sign);
  for (std::size_t k = next; k < gens.size(); ++k) {
    inclusion_exclusion(gens, k + 1, lcm(lcm_so_far, gens[k]), -sign, out);
  }
}

}  // namespace

HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw DomainError("hilbert_numerator: unit ideal");
  if (ideal.num_gens() > kMaxNumeratorGenerators) {
    throw DomainError("hilbert_numerator: " + std::to_string(ideal.num_gens()) + " generators exceeds the cap of " +
                      std::to_string(kMaxNumeratorGenerators));
  }
  HilbertNumerator out;
  inclusion_exclusion(ideal.gens(), 0, ExponentVector(ideal.nvars()), 1, out);
  return out;
}

HilbertNumerator coarsen(const HilbertNumerator& fine, const Grading& grading) {
  HilbertNumerator out;
  for (const auto& [t, c] : fine.terms()) out.add(grading.matrix().apply(t), c);
  return out;
}

bool same_hilbert_up_to(const MonomialIdeal& a, const MonomialIdeal& b, const Grading& grading, std::int64_t bound) {
  require_same_dim(a.nvars(), b.nvars(), "same_hilbert_up_to");
  require_same_dim(a.nvars(), grading.nvars(), "same_hilbert_up_to");
  if (bound < 0) throw DomainError("same_hilbert_up_to: negative bound");
  for (const auto& deg : monomials_up_to(grading.rank(), bound)) {
    if (hilbert_function(a, grading, deg) != hilbert_function(b, grading, deg)) return false;
  }
  return true;
}

}  // namespace staircase
