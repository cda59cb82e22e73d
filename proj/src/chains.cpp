#include "staircase/chains.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <omp.h>

#include "staircase/decomposition.hpp"

namespace staircase {

IdealFamily::IdealFamily(std::size_t nvars, std::vector<MonomialIdeal> members) : nvars_(nvars) {
  for (auto& m : members) {
    require_same_dim(nvars_, m.nvars(), "ideal family member");
    if (std::find(members_.begin(), members_.end(), m) == members_.end()) members_.push_back(std::move(m));
  }
}

ContainmentMatrix containment_matrix(const IdealFamily& family, int workers) {
  const std::size_t n = family.size();
  ContainmentMatrix out{n, std::vector<char>(n * n, 0)};
  const auto cells = static_cast<std::ptrdiff_t>(n * n);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads) if (cells > 64)
  for (std::ptrdiff_t k = 0; k < cells; ++k) {
    const auto i = static_cast<std::size_t>(k) / n, j = static_cast<std::size_t>(k) % n;
    out.subset[static_cast<std::size_t>(k)] = (i == j || contains(family[j], family[i])) ? 1 : 0;
  }
  return out;
}

ContainmentMatrix containment_matrix_serial(const IdealFamily& family) {
  const std::size_t n = family.size();
  ContainmentMatrix out{n, std::vector<char>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.subset[i * n + j] = (i == j || contains(family[j], family[i])) ? 1 : 0;
  }
  return out;
}

std::optional<ComparablePair> find_comparable_pair(const IdealFamily& family) {
  const auto m = containment_matrix(family);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      if (i != j && m.contained(i, j)) return ComparablePair{i, j};
    }
  }
  return std::nullopt;
}

bool is_antichain(const IdealFamily& family) { return !find_comparable_pair(family).has_value(); }

std::vector<std::size_t> extract_descending_chain(const IdealFamily& family) {
  const auto m = containment_matrix(family);
  const std::size_t n = m.n;
  // longest[i]: length of the longest strict chain starting at i; next[i]
  // its successor. Members are distinct, so containment is strict.
  std::vector<std::size_t> longest(n, 0), next(n, n);
  std::function<std::size_t(std::size_t)> depth = [&](std::size_t i) -> std::size_t {
    if (longest[i]) return longest[i];
    std::size_t best = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && m.contained(j, i) && 1 + depth(j) > best) {
        best = 1 + depth(j);
        next[i] = j;
      }
    }
    return longest[i] = best;
  };
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (start == n || depth(i) > depth(start)) start = i;
  }
  std::vector<std::size_t> chain;
  for (std::size_t i = start; i < n; i = next[i]) chain.push_back(i);
  return chain;
}

namespace {

template <class Key>
Partition partition_by(std::size_t n, const std::function<Key(std::size_t)>& key) {
  std::map<Key, std::size_t> block_of;
  Partition blocks;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = block_of.try_emplace(key(i), blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }
  return blocks;
}

}  // namespace

Partition refine_by_standard_trace(const IdealFamily& family, const MonomialIdeal& pivot) {
  require_same_dim(family.nvars(), pivot.nvars(), "refine_by_standard_trace pivot");
  if (!is_artinian(pivot)) throw DomainError("refine_by_standard_trace: pivot is not artinian");
  const auto standard = standard_monomials(pivot);
  return partition_by<std::vector<bool>>(family.size(), [&](std::size_t i) {
    std::vector<bool> trace(standard.size());
    for (std::size_t s = 0; s < standard.size(); ++s) trace[s] = member(family[i], standard[s]);
    return trace;
  });
}

Partition group_by_associated_primes(const IdealFamily& family) {
  return partition_by<std::vector<MonomialPrime>>(family.size(),
                                                  [&](std::size_t i) { return associated_primes(family[i]); });
}

}  // namespace staircase
