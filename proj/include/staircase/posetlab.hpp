#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

/// An element (i, j), i < j, of the poset X on pairs of naturals ordered by
/// (i, j) < (i', j') iff j < j' and (i == i' or j < i').
///
/// X has no infinite antichains and no infinite descending chains, yet its
/// dual order ideals contain the infinite antichain {S_l}.
struct XElem {
  std::int64_t i;
  std::int64_t j;

  XElem(std::int64_t i_, std::int64_t j_);
  friend auto operator<=>(const XElem&, const XElem&) = default;
};

bool x_less(const XElem& p, const XElem& q);
inline bool x_less_equal(const XElem& p, const XElem& q) { return p == q || x_less(p, q); }

/// An upward-closed subset of X, held as its finite antichain of minimal
/// elements (sorted).
class XDualOrderIdeal {
 public:
  /// Throws DomainError unless `minimal` is an antichain.
  explicit XDualOrderIdeal(std::vector<XElem> minimal);
  /// Upward closure of an arbitrary finite set.
  static XDualOrderIdeal generated_by(std::span<const XElem> elems);

  const std::vector<XElem>& minimal() const { return minimal_; }
  bool contains_element(const XElem& p) const;

  friend bool operator==(const XDualOrderIdeal&, const XDualOrderIdeal&) = default;

 private:
  std::vector<XElem> minimal_;
};

/// D1 ⊆ D2: every minimal element of D1 lies above some minimal element of D2.
bool x_doi_contains(const XDualOrderIdeal& d1, const XDualOrderIdeal& d2);

/// Dual order ideal generated by S_l = {(k, l) : k < l}; l >= 1.
XDualOrderIdeal s_family(std::int64_t l);

/// Pairwise non-containment of a list of dual order ideals.
bool verify_antichain(std::span<const XDualOrderIdeal> family);
/// verify_antichain on S_1..S_L; L >= 2.
bool verify_s_antichain(std::int64_t max_l);

/// Length of the longest chain of elements strictly below p.
std::int64_t descending_chain_max(const XElem& p);

/// All elements (i, j) with j <= max_j, sorted.
std::vector<XElem> x_ground_set(std::int64_t max_j);

/// A finite downward-closed subset of N^n.
class FiniteOrderIdeal {
 public:
  /// Throws DomainError unless `points` is downward closed.
  FiniteOrderIdeal(std::size_t nvars, std::vector<ExponentVector> points);

  std::size_t nvars() const { return nvars_; }
  const std::vector<ExponentVector>& points() const { return points_; }
  bool contains(const ExponentVector& u) const;

  friend bool operator==(const FiniteOrderIdeal&, const FiniteOrderIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<ExponentVector> points_;
};

/// The monomial ideal spanned by the complement of O (artinian).
MonomialIdeal young_complement(const FiniteOrderIdeal& order_ideal);
/// Standard monomials of an artinian ideal as an order ideal.
FiniteOrderIdeal young_cocomplement(const MonomialIdeal& ideal);

}  // namespace staircase
