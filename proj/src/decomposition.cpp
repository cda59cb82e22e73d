#include "staircase/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace staircase {

MonomialPrime::MonomialPrime(std::size_t nvars, std::vector<std::size_t> tau) : nvars_(nvars), tau_(std::move(tau)) {
  std::sort(tau_.begin(), tau_.end());
  tau_.erase(std::unique(tau_.begin(), tau_.end()), tau_.end());
  if (!tau_.empty() && tau_.back() >= nvars_) throw DimensionError("monomial prime: variable index out of range");
}

MonomialPrime MonomialPrime::radical_of_irreducible(const MonomialIdeal& component) {
  std::vector<bool> used(component.nvars(), false);
  for (const auto& g : component.gens()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0) used[i] = true;
    }
  }
  std::vector<std::size_t> tau;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) tau.push_back(i);
  }
  return MonomialPrime(component.nvars(), std::move(tau));
}

std::vector<std::size_t> MonomialPrime::variables() const {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (!std::binary_search(tau_.begin(), tau_.end(), i)) vars.push_back(i);
  }
  return vars;
}

MonomialIdeal MonomialPrime::ideal() const {
  std::vector<ExponentVector> gens;
  for (auto i : variables()) gens.push_back(ExponentVector::unit(nvars_, i));
  return MonomialIdeal(nvars_, gens);
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero()) throw DomainError(std::string(what) + ": zero ideal");
  if (ideal.is_unit()) throw DomainError(std::string(what) + ": unit ideal");
}

bool generated_by_pure_powers(const MonomialIdeal& ideal) {
  return std::all_of(ideal.gens().begin(), ideal.gens().end(),
                     [](const ExponentVector& g) { return g.support_size() <= 1; });
}

class Splitter {
 public:
  const std::set<MonomialIdeal>& split(const MonomialIdeal& ideal) {
    if (auto it = memo_.find(ideal); it != memo_.end()) return it->second;
    std::set<MonomialIdeal> out;
    if (generated_by_pure_powers(ideal)) {
      out.insert(ideal);
    } else {
      // First generator in canonical order with two or more variables,
      // split on its first variable: I = (I + x_i^a) ∩ (I + g / x_i^a).
      const auto& g = *std::find_if(ideal.gens().begin(), ideal.gens().end(),
                                    [](const ExponentVector& h) { return h.support_size() > 1; });
      std::size_t i = 0;
      while (g[i] == 0) ++i;
      const auto power = ExponentVector::unit(g.size(), i, g[i]);
      const auto rest = g.with(i, 0);
      for (const auto& part : {sum(ideal, MonomialIdeal(ideal.nvars(), {power})),
                               sum(ideal, MonomialIdeal(ideal.nvars(), {rest}))}) {
        const auto& sub = split(part);
        out.insert(sub.begin(), sub.end());
      }
    }
    return memo_.emplace(ideal, std::move(out)).first->second;
  }

 private:
  std::map<MonomialIdeal, std::set<MonomialIdeal>> memo_;
};

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "irreducible_decomposition");
  Splitter splitter;
  const auto& all = splitter.split(ideal);
  std::vector<MonomialIdeal> candidates(all.begin(), all.end());
  // Irreducible monomial ideals are meet-prime, so a component is redundant
  // exactly when it contains another component.
  std::vector<MonomialIdeal> out;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < candidates.size() && !redundant; ++b) {
      if (a != b && contains(candidates[a], candidates[b])) redundant = true;
    }
    if (!redundant) out.push_back(candidates[a]);
  }
  return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::set<MonomialPrime> primes;
  for (const auto& c : irreducible_decomposition(ideal)) primes.insert(MonomialPrime::radical_of_irreducible(c));
  return {primes.begin(), primes.end()};
}

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal) {
  std::map<MonomialPrime, MonomialIdeal> grouped;
  for (const auto& c : irreducible_decomposition(ideal)) {
    auto prime = MonomialPrime::radical_of_irreducible(c);
    auto it = grouped.find(prime);
    if (it == grouped.end()) {
      grouped.emplace(std::move(prime), c);
    } else {
      it->second = intersect(it->second, c);
    }
  }
  std::vector<PrimaryComponent> comps;
  for (auto& [prime, comp] : grouped) comps.push_back({prime, comp});

  // Pruning sweep: drop a component that contains the intersection of the
  // others. With distinct associated radicals this never fires.
  for (std::size_t k = 0; k < comps.size() && comps.size() > 1;) {
    MonomialIdeal others = MonomialIdeal::unit(ideal.nvars());
    for (std::size_t m = 0; m < comps.size(); ++m) {
      if (m != k) others = intersect(others, comps[m].component);
    }
    if (contains(comps[k].component, others)) {
      comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return comps;
}

bool is_primary_to(const MonomialIdeal& component, const MonomialPrime& prime) {
  require_same_dim(component.nvars(), prime.nvars(), "is_primary_to");
  const auto vars = prime.variables();
  std::vector<bool> in_prime(component.nvars(), false);
  for (auto i : vars) in_prime[i] = true;
  std::vector<bool> has_power(component.nvars(), false);
  for (const auto& g : component.gens()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0 && !in_prime[i]) return false;
    }
    if (auto i = g.pure_power_variable()) has_power[*i] = true;
  }
  if (component.is_zero()) return vars.empty();
  return std::all_of(vars.begin(), vars.end(), [&](std::size_t i) { return has_power[i]; });
}

}  // namespace staircase
