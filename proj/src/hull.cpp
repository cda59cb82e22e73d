#include "staircase/hull.hpp"

#include <algorithm>

#include <omp.h>

namespace staircase {

RationalPoint::RationalPoint(std::vector<mpq_class> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

RationalPoint::RationalPoint(const ExponentVector& u) {
  coords_.reserve(u.size());
  for (auto x : u) coords_.emplace_back(mpz_class(static_cast<long>(x)));
}

namespace {

// Dense phase-one tableau. Columns [0, m) are lambdas, [m, m + rows) the
// artificials, last column the right-hand side.
class PhaseOne {
 public:
  PhaseOne(const RationalPoint& q, std::span<const ExponentVector> points)
      : rows_(q.size() + 1), vars_(points.size()), width_(vars_ + rows_ + 1), t_(rows_ * width_), basis_(rows_) {
    for (std::size_t r = 0; r < rows_; ++r) {
      mpq_class rhs = r < q.size() ? q[r] : mpq_class(1);
      const bool flip = rhs < 0;
      for (std::size_t k = 0; k < vars_; ++k) {
        mpq_class v = r < q.size() ? mpq_class(mpz_class(static_cast<long>(points[k][r]))) : mpq_class(1);
        at(r, k) = flip ? mpq_class(-v) : v;
      }
      at(r, vars_ + r) = 1;
      at(r, width_ - 1) = flip ? mpq_class(-rhs) : rhs;
      basis_[r] = vars_ + r;
    }
  }

  bool feasible() {
    // Reduced cost of column j for minimizing the artificial sum is
    // -sum_r t[r][j] over rows with an artificial basis; track it directly.
    std::vector<mpq_class> obj(width_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0; j < vars_; ++j) obj[j] += at(r, j);
      obj[width_ - 1] += at(r, width_ - 1);
    }
    for (;;) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j < width_ - 1; ++j) {
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) break;
      std::size_t leave = rows_;
      mpq_class best;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, enter) <= 0) continue;
        mpq_class ratio = at(r, width_ - 1) / at(r, enter);
        if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_) break;  // unbounded direction cannot lower the objective further
      pivot(leave, enter, obj);
    }
    return obj[width_ - 1] == 0;
  }

 private:
  mpq_class& at(std::size_t r, std::size_t c) { return t_[r * width_ + c]; }

  void pivot(std::size_t pr, std::size_t pc, std::vector<mpq_class>& obj) {
    const mpq_class p = at(pr, pc);
    for (std::size_t c = 0; c < width_; ++c) at(pr, c) /= p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || at(r, pc) == 0) continue;
      const mpq_class f = at(r, pc);
      for (std::size_t c = 0; c < width_; ++c) at(r, c) -= f * at(pr, c);
    }
    if (obj[pc] != 0) {
      const mpq_class f = obj[pc];
      for (std::size_t c = 0; c < width_; ++c) obj[c] -= f * at(pr, c);
    }
    basis_[pr] = pc;
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t width_;
  std::vector<mpq_class> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

bool in_hull(const RationalPoint& q, std::span<const ExponentVector> points) {
  if (points.empty()) return false;
  for (const auto& p : points) require_same_dim(q.size(), p.size(), "in_hull");
  // Bounding box rejects most outside points without a tableau.
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::int64_t lo = points[0][i], hi = points[0][i];
    for (const auto& p : points) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    if (q[i] < lo || q[i] > hi) return false;
  }
  for (const auto& p : points) {
    if (RationalPoint(p) == q) return true;
  }
  return PhaseOne(q, points).feasible();
}

bool in_hull(const ExponentVector& q, std::span<const ExponentVector> points) {
  return in_hull(RationalPoint(q), points);
}

namespace {

std::vector<ExponentVector> distinct_sorted(std::span<const ExponentVector> points) {
  if (points.empty()) throw DomainError("hull_vertices: empty point set");
  std::vector<ExponentVector> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool is_vertex_of(const std::vector<ExponentVector>& pts, std::size_t k) {
  std::vector<ExponentVector> rest;
  rest.reserve(pts.size() - 1);
  for (std::size_t m = 0; m < pts.size(); ++m) {
    if (m != k) rest.push_back(pts[m]);
  }
  return !in_hull(pts[k], rest);
}

}  // namespace

std::vector<ExponentVector> hull_vertices(std::span<const ExponentVector> points, int workers) {
  const auto pts = distinct_sorted(points);
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
  std::vector<char> vertex(pts.size(), 0);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (n > 8)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    vertex[static_cast<std::size_t>(k)] = is_vertex_of(pts, static_cast<std::size_t>(k)) ? 1 : 0;
  }
  std::vector<ExponentVector> out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (vertex[k]) out.push_back(pts[k]);
  }
  return out;
}

std::vector<ExponentVector> hull_vertices_serial(std::span<const ExponentVector> points) {
  const auto pts = distinct_sorted(points);
  std::vector<ExponentVector> out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (is_vertex_of(pts, k)) out.push_back(pts[k]);
  }
  return out;
}

}  // namespace staircase
