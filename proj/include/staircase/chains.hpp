#pragma once

#include <optional>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

/// A finite list of distinct monomial ideals over one ambient ring.
/// Duplicates are dropped on construction, keeping first occurrences.
class IdealFamily {
 public:
  explicit IdealFamily(std::size_t nvars) : nvars_(nvars) {}
  IdealFamily(std::size_t nvars, std::vector<MonomialIdeal> members);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const MonomialIdeal& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<MonomialIdeal>& members() const { return members_; }

 private:
  std::size_t nvars_;
  std::vector<MonomialIdeal> members_;
};

/// subset[i * n + j] != 0 iff member i is contained in member j.
struct ContainmentMatrix {
  std::size_t n = 0;
  std::vector<char> subset;

  bool contained(std::size_t i, std::size_t j) const { return subset[i * n + j] != 0; }
  friend bool operator==(const ContainmentMatrix&, const ContainmentMatrix&) = default;
};

/// All pairwise containment tests, distributed over OpenMP workers.
ContainmentMatrix containment_matrix(const IdealFamily& family, int workers = 0);
ContainmentMatrix containment_matrix_serial(const IdealFamily& family);

struct ComparablePair {
  std::size_t sub;
  std::size_t super;
  friend bool operator==(const ComparablePair&, const ComparablePair&) = default;
};

/// First (i, j), i != j, in lexicographic order with member i contained in
/// member j.
std::optional<ComparablePair> find_comparable_pair(const IdealFamily& family);
bool is_antichain(const IdealFamily& family);

/// Indices of a longest strictly descending chain I_0 ⊋ I_1 ⊋ ...
/// Longest path in the containment DAG; ties go to smaller indices.
std::vector<std::size_t> extract_descending_chain(const IdealFamily& family);

/// Blocks of indices, each sorted, blocks ordered by smallest member.
using Partition = std::vector<std::vector<std::size_t>>;

/// Groups members by which standard monomials of the artinian `pivot`
/// they contain.
Partition refine_by_standard_trace(const IdealFamily& family, const MonomialIdeal& pivot);

/// Groups members by their set of associated primes.
Partition group_by_associated_primes(const IdealFamily& family);

}  // namespace staircase
