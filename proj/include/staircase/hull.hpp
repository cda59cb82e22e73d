#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

#include "staircase/exponent.hpp"

namespace staircase {

/// A point of Q^n with canonicalized coordinates.
class RationalPoint {
 public:
  explicit RationalPoint(std::vector<mpq_class> coords);
  explicit RationalPoint(const ExponentVector& u);

  std::size_t size() const { return coords_.size(); }
  const mpq_class& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<mpq_class> coords_;
};

/// Exact test of q in conv(points): a phase-one simplex over the rationals
/// (Bland's rule) on lambda >= 0, sum lambda = 1, sum lambda_k p_k = q.
/// An empty point set has an empty hull.
bool in_hull(const RationalPoint& q, std::span<const ExponentVector> points);
bool in_hull(const ExponentVector& q, std::span<const ExponentVector> points);

/// Points u with u outside conv(points \ {u}), lexicographically sorted.
/// Duplicates are collapsed first. Runs one hull test per point in an
/// OpenMP parallel loop; `workers` <= 0 uses the runtime default.
std::vector<ExponentVector> hull_vertices(std::span<const ExponentVector> points, int workers = 0);

/// Sequential reference for hull_vertices.
std::vector<ExponentVector> hull_vertices_serial(std::span<const ExponentVector> points);

}  // namespace staircase
