#include <gtest/gtest.h>

#include "staircase/chains.hpp"
#include "staircase/decomposition.hpp"
#include "support.hpp"

using namespace staircase;
using staircase::testing::make_rng;

namespace {

MonomialIdeal id2(std::vector<ExponentVector> gens) { return MonomialIdeal(2, gens); }

IdealFamily staircase_family(std::int64_t k) {
  std::vector<MonomialIdeal> members;
  for (std::int64_t a = 1; a < k; ++a) members.push_back(id2({{a, 0}, {0, k - a}}));
  return IdealFamily(2, members);
}

// sub ⊆ super by generator membership against the raw generator list.
bool oracle_contained(const MonomialIdeal& sub, const MonomialIdeal& super) {
  for (const auto& g : sub.gens()) {
    if (!staircase::testing::naive_member({super.gens().begin(), super.gens().end()}, g)) return false;
  }
  return true;
}

std::size_t oracle_longest_chain(const IdealFamily& f) {
  const std::size_t n = f.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) pick.push_back(i);
    }
    bool chain = true;
    for (std::size_t a = 0; a < pick.size() && chain; ++a) {
      for (std::size_t b = a + 1; b < pick.size() && chain; ++b) {
        chain = oracle_contained(f[pick[a]], f[pick[b]]) || oracle_contained(f[pick[b]], f[pick[a]]);
      }
    }
    if (chain) best = std::max(best, pick.size());
  }
  return best;
}

IdealFamily random_family(std::mt19937_64& rng, std::size_t n, std::size_t size, std::int64_t degree) {
  std::vector<MonomialIdeal> members;
  while (members.size() < size) members.push_back(staircase::testing::random_ideal(rng, n, 3, degree));
  return IdealFamily(n, members);
}

}  // namespace

TEST(IdealFamily, DeduplicatesKeepingFirst) {
  const IdealFamily f(2, {id2({{1, 0}}), id2({{0, 1}}), id2({{1, 0}, {2, 0}})});
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], id2({{1, 0}}));
  EXPECT_THROW(IdealFamily(2, {MonomialIdeal(3)}), DimensionError);
}

TEST(ComparablePair, Examples) {
  const IdealFamily f(2, {id2({{1, 0}}), id2({{1, 0}, {0, 1}})});
  EXPECT_EQ(find_comparable_pair(f), (ComparablePair{0, 1}));
  EXPECT_FALSE(find_comparable_pair(IdealFamily(2, {id2({{1, 0}}), id2({{0, 1}})})));
  EXPECT_FALSE(find_comparable_pair(staircase_family(6)));
  EXPECT_TRUE(is_antichain(staircase_family(6)));
  EXPECT_FALSE(is_antichain(IdealFamily(2, {id2({{1, 0}}), id2({{2, 0}})})));
  EXPECT_TRUE(is_antichain(IdealFamily(2, {id2({{1, 1}})})));
  EXPECT_TRUE(is_antichain(IdealFamily(2)));
}

TEST(ComparablePair, StaircaseFamiliesAreAntichains) {
  for (std::int64_t k = 2; k <= 12; ++k) {
    const auto f = staircase_family(k);
    EXPECT_EQ(f.size(), static_cast<std::size_t>(k - 1));
    EXPECT_TRUE(is_antichain(f)) << k;
  }
}

TEST(ComparablePair, SoundAndFirstInIndexOrder) {
  auto rng = make_rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_family(rng, 2, 6, 3);
    std::optional<ComparablePair> expected;
    for (std::size_t i = 0; i < f.size() && !expected; ++i) {
      for (std::size_t j = 0; j < f.size() && !expected; ++j) {
        if (i != j && oracle_contained(f[i], f[j])) expected = ComparablePair{i, j};
      }
    }
    EXPECT_EQ(find_comparable_pair(f), expected);
  }
}

TEST(ContainmentMatrix, SerialMatchesParallel) {
  auto rng = make_rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_family(rng, 3, 30, 4);
    const auto serial = containment_matrix_serial(f);
    EXPECT_EQ(containment_matrix(f), serial);
    EXPECT_EQ(containment_matrix(f, 3), serial);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) ASSERT_EQ(serial.contained(i, j), i == j || oracle_contained(f[i], f[j]));
    }
  }
}

TEST(DescendingChain, Examples) {
  const IdealFamily f(2, {id2({{1, 0}, {0, 1}}), id2({{2, 0}, {0, 1}}), id2({{2, 0}, {0, 2}}), id2({{1, 0}, {0, 2}})});
  EXPECT_EQ(extract_descending_chain(f), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(extract_descending_chain(staircase_family(6)).size(), 1u);
  EXPECT_TRUE(extract_descending_chain(IdealFamily(2)).empty());

  const auto i = id2({{2, 0}, {0, 1}}), j = id2({{1, 0}, {0, 2}});
  const IdealFamily g(2, {i, intersect(i, j), j});
  const auto chain = extract_descending_chain(g);
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain.back(), 1u);
}

TEST(DescendingChain, MatchesExhaustiveSearch) {
  auto rng = make_rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_family(rng, 2, 4 + static_cast<std::size_t>(trial % 9), 3);
    const auto chain = extract_descending_chain(f);
    for (std::size_t k = 1; k < chain.size(); ++k) {
      ASSERT_TRUE(oracle_contained(f[chain[k]], f[chain[k - 1]]));
      ASSERT_NE(f[chain[k]], f[chain[k - 1]]);
    }
    EXPECT_EQ(chain.size(), oracle_longest_chain(f));
  }
}

TEST(StandardTrace, Examples) {
  const auto pivot = id2({{2, 0}, {0, 1}});
  const IdealFamily f(2, {id2({{1, 0}, {0, 1}}), id2({{1, 0}, {0, 2}}), id2({{2, 0}, {0, 2}})});
  EXPECT_EQ(refine_by_standard_trace(f, pivot), (Partition{{0, 1}, {2}}));

  EXPECT_EQ(refine_by_standard_trace(IdealFamily(2, {MonomialIdeal::unit(2)}), pivot), (Partition{{0}}));
  const IdealFamily inside(2, {id2({{3, 0}, {0, 1}}), id2({{2, 0}, {0, 2}})});
  EXPECT_EQ(refine_by_standard_trace(inside, pivot), (Partition{{0, 1}}));
  EXPECT_TRUE(refine_by_standard_trace(IdealFamily(2), pivot).empty());
  EXPECT_THROW(refine_by_standard_trace(f, id2({{1, 0}})), DomainError);
}

TEST(StandardTrace, AntichainMembersMeetEveryPivot) {
  // In an antichain of artinian ideals no member other than the pivot can
  // avoid all of the pivot's standard monomials, since it would then lie
  // inside the pivot.
  auto rng = make_rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    std::vector<MonomialIdeal> members;
    for (int attempt = 0; attempt < 60 && members.size() < 6; ++attempt) {
      auto cand = staircase::testing::random_artinian(rng, n, 5);
      if (standard_monomials(cand).size() < 3) continue;
      if (std::none_of(members.begin(), members.end(), [&](const MonomialIdeal& m) {
            return oracle_contained(m, cand) || oracle_contained(cand, m);
          })) {
        members.push_back(std::move(cand));
      }
    }
    const IdealFamily f(n, members);
    ASSERT_TRUE(is_antichain(f));
    ASSERT_GE(f.size(), 2u);
    for (std::size_t p = 0; p < f.size(); ++p) {
      const auto blocks = refine_by_standard_trace(f, f[p]);
      for (const auto& block : blocks) {
        if (std::find(block.begin(), block.end(), p) != block.end()) EXPECT_EQ(block, std::vector<std::size_t>{p});
      }
    }
  }
  for (std::int64_t k = 2; k <= 8; ++k) {
    std::vector<MonomialIdeal> members;
    for (std::int64_t a = 1; a < k; ++a) members.push_back(id2({{a, 0}, {0, k - a}}));
    const IdealFamily f(2, members);
    for (std::size_t p = 0; p < f.size(); ++p) EXPECT_EQ(refine_by_standard_trace(f, f[p]).size(), f.size());
  }
}

TEST(AssociatedPrimeGroups, Examples) {
  const IdealFamily f(2, {id2({{2, 0}, {1, 1}}), id2({{3, 0}, {1, 1}}), id2({{1, 0}, {0, 1}})});
  EXPECT_EQ(group_by_associated_primes(f), (Partition{{0, 1}, {2}}));
  EXPECT_EQ(group_by_associated_primes(IdealFamily(2, {id2({{1, 1}})})), (Partition{{0}}));
  EXPECT_EQ(group_by_associated_primes(staircase_family(7)), (Partition{{0, 1, 2, 3, 4, 5}}));
  EXPECT_THROW(group_by_associated_primes(IdealFamily(2, {MonomialIdeal::unit(2)})), DomainError);
}
