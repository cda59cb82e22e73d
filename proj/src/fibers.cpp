#include "staircase/fibers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <omp.h>

#include "staircase/hull.hpp"
#include "staircase/lattice.hpp"

namespace staircase {

std::vector<ExponentVector> fiber_points(const FiberMatrix& a, const Degree& b) { return lattice_points(a, b); }

Fiber make_fiber(const FiberMatrix& a, const Degree& b) {
  Fiber f{b, fiber_points(a, b), {}};
  if (!f.points.empty()) f.vertices = hull_vertices_serial(f.points);
  return f;
}

namespace {

void require_split(const FiberMatrix& a, const Degree& b, const Degree& b1, const Degree& b2) {
  require_same_dim(a.rows(), b.size(), "split degree b");
  require_same_dim(a.rows(), b1.size(), "split degree b1");
  require_same_dim(a.rows(), b2.size(), "split degree b2");
  if (b1 + b2 != b) throw DomainError("split degrees do not sum to b: " + to_string(b1) + " + " + to_string(b2) +
                                      " != " + to_string(b));
}

std::vector<ExponentVector> pairwise_sums(const std::vector<ExponentVector>& x, const std::vector<ExponentVector>& y) {
  std::vector<ExponentVector> sums;
  sums.reserve(x.size() * y.size());
  for (const auto& p : x) {
    for (const auto& q : y) sums.push_back(p + q);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

// conv(vertices) == conv(v1 + v2).
bool minkowski_equal(const std::vector<ExponentVector>& vertices, const std::vector<ExponentVector>& v1,
                     const std::vector<ExponentVector>& v2) {
  const auto sums = pairwise_sums(v1, v2);
  // Every vertex of a Minkowski sum is a sum of summand vertices, so a
  // vertex missing from `sums` already rules equality out.
  for (const auto& v : vertices) {
    if (!std::binary_search(sums.begin(), sums.end(), v)) return false;
  }
  for (const auto& v : vertices) {
    if (!in_hull(v, sums)) return false;
  }
  for (const auto& s : sums) {
    if (!in_hull(s, vertices)) return false;
  }
  return true;
}

// Product of (u_i + 1): the number of w with 0 <= w <= u.
std::int64_t box_size(const ExponentVector& u) {
  std::int64_t s = 1;
  for (auto x : u) s = checked_mul(s, x + 1);
  return s;
}

const ExponentVector& smallest_box(const std::vector<ExponentVector>& pts) {
  return *std::min_element(pts.begin(), pts.end(), [](const auto& p, const auto& q) {
    const auto bp = box_size(p), bq = box_size(q);
    return bp != bq ? bp < bq : p < q;
  });
}

// Nontrivial splits b = b1 + b2 with b1 <=lex b2 that can place `anchor`
// as a sum of a point over b1 and a point over b2. Any split under which
// the anchor decomposes has b1 = A w for some 0 < w < anchor, so this set
// covers every split that could succeed; both parts are in NA.
std::vector<Degree> candidate_first_summands(const FiberMatrix& a, const Degree& b, const ExponentVector& anchor) {
  std::set<Degree> seen;
  std::vector<std::int64_t> w(anchor.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == anchor.size()) {
      ExponentVector wv(w);
      if (wv.is_zero() || wv == anchor) return;
      Degree b1 = a.apply(wv);
      Degree b2 = b - b1;
      if (b1 <= b2) seen.insert(std::move(b1));
      return;
    }
    for (std::int64_t v = 0; v <= anchor[i]; ++v) {
      w[i] = v;
      rec(i + 1);
    }
    w[i] = 0;
  };
  rec(0);
  return {seen.begin(), seen.end()};
}

class VertexCache {
 public:
  explicit VertexCache(const FiberMatrix& a) : a_(a) {}
  const std::vector<ExponentVector>& vertices(const Degree& b) {
    auto it = cache_.find(b);
    if (it != cache_.end()) return it->second;
    auto pts = fiber_points(a_, b);
    std::vector<ExponentVector> verts;
    if (!pts.empty()) verts = hull_vertices_serial(pts);
    return cache_.emplace(b, std::move(verts)).first->second;
  }

 private:
  const FiberMatrix& a_;
  std::map<Degree, std::vector<ExponentVector>> cache_;
};

class LatticeCache {
 public:
  LatticeCache(const MonomialIdeal& m, const FiberMatrix& a) : m_(m), a_(a) {}
  const std::vector<ExponentVector>& points(const Degree& b) {
    auto it = cache_.find(b);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(b, ma_fiber(m_, a_, b)).first->second;
  }

 private:
  const MonomialIdeal& m_;
  const FiberMatrix& a_;
  std::map<Degree, std::vector<ExponentVector>> cache_;
};

LatticeSplit lattice_split(const std::vector<ExponentVector>& fiber, const std::vector<ExponentVector>& f1,
                           const std::vector<ExponentVector>& f2_sorted) {
  for (const auto& u : fiber) {
    bool found = false;
    for (const auto& u1 : f1) {
      if (divides(u1, u) && std::binary_search(f2_sorted.begin(), f2_sorted.end(), u - u1)) {
        found = true;
        break;
      }
    }
    if (!found) return {false, u};
  }
  return {true, std::nullopt};
}

}  // namespace

bool minkowski_decomposes(const FiberMatrix& a, const Degree& b, const Degree& b1, const Degree& b2) {
  require_split(a, b, b1, b2);
  VertexCache cache(a);
  const auto& v1 = cache.vertices(b1);
  const auto& v2 = cache.vertices(b2);
  if (v1.empty() || v2.empty()) throw DomainError("minkowski_decomposes: empty summand fiber");
  return minkowski_equal(cache.vertices(b), v1, v2);
}

bool is_atomic(const FiberMatrix& a, const Degree& b) {
  require_same_dim(a.rows(), b.size(), "is_atomic");
  VertexCache cache(a);
  const auto vertices = cache.vertices(b);
  if (vertices.empty()) throw DomainError("is_atomic: empty fiber over " + to_string(b));
  for (const auto& b1 : candidate_first_summands(a, b, smallest_box(vertices))) {
    const Degree b2 = b - b1;
    if (minkowski_equal(vertices, cache.vertices(b1), cache.vertices(b2))) return false;
  }
  return true;
}

std::vector<ExponentVector> ma_fiber(const MonomialIdeal& m, const FiberMatrix& a, const Degree& b) {
  require_same_dim(m.nvars(), a.cols(), "ma_fiber");
  auto pts = fiber_points(a, b);
  std::erase_if(pts, [&](const ExponentVector& u) { return member(m, u); });
  return pts;
}

LatticeSplit ma_decomposes(const MonomialIdeal& m, const FiberMatrix& a, const Degree& b, const Degree& b1,
                           const Degree& b2) {
  require_split(a, b, b1, b2);
  if (!has_lattice_point(a, b1)) throw DomainError("ma_decomposes: b1 = " + to_string(b1) + " is not in NA");
  if (!has_lattice_point(a, b2)) throw DomainError("ma_decomposes: b2 = " + to_string(b2) + " is not in NA");
  return lattice_split(ma_fiber(m, a, b), ma_fiber(m, a, b1), ma_fiber(m, a, b2));
}

bool is_ma_atomic(const MonomialIdeal& m, const FiberMatrix& a, const Degree& b) {
  require_same_dim(a.rows(), b.size(), "is_ma_atomic");
  LatticeCache cache(m, a);
  const auto fiber = cache.points(b);
  if (fiber.empty()) throw DomainError("is_ma_atomic: empty (M,A) fiber over " + to_string(b));
  for (const auto& b1 : candidate_first_summands(a, b, smallest_box(fiber))) {
    const Degree b2 = b - b1;
    if (lattice_split(fiber, cache.points(b1), cache.points(b2)).decomposes) return false;
  }
  return true;
}

std::vector<Degree> degrees_up_to(const FiberMatrix& a, std::int64_t bound) {
  std::set<Degree> degrees;
  for (const auto& u : monomials_up_to(a.cols(), bound)) {
    if (!u.is_zero()) degrees.insert(a.apply(u));
  }
  return {degrees.begin(), degrees.end()};
}

namespace {

void require_scan_args(const FiberMatrix& a, std::int64_t bound, const ScanOptions& options) {
  if (bound < 1) throw DomainError("atomic_scan: bound must be at least 1");
  if (options.lattice_ideal) require_same_dim(a.cols(), options.lattice_ideal->nvars(), "atomic_scan ideal");
}

// 1 atomic, 0 not atomic, -1 skipped (empty (M,A) fiber).
int classify(const FiberMatrix& a, const Degree& b, const ScanOptions& options, const MonomialIdeal& m) {
  if (options.mode == AtomicityMode::vertex) return is_atomic(a, b) ? 1 : 0;
  if (ma_fiber(m, a, b).empty()) return -1;
  return is_ma_atomic(m, a, b) ? 1 : 0;
}

}  // namespace

std::vector<Degree> atomic_scan(const FiberMatrix& a, std::int64_t bound, const ScanOptions& options) {
  require_scan_args(a, bound, options);
  const auto degrees = degrees_up_to(a, bound);
  const MonomialIdeal m = options.lattice_ideal.value_or(MonomialIdeal::zero(a.cols()));
  std::vector<int> verdict(degrees.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(degrees.size());
  const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();
  // Exceptions must not escape the parallel region; park the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      verdict[static_cast<std::size_t>(k)] = classify(a, degrees[static_cast<std::size_t>(k)], options, m);
    } catch (...) {
#pragma omp critical(staircase_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Degree> out;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    if (verdict[k] == 1) out.push_back(degrees[k]);
  }
  return out;
}

std::vector<Degree> atomic_scan_serial(const FiberMatrix& a, std::int64_t bound, const ScanOptions& options) {
  require_scan_args(a, bound, options);
  const MonomialIdeal m = options.lattice_ideal.value_or(MonomialIdeal::zero(a.cols()));
  std::vector<Degree> out;
  for (const auto& b : degrees_up_to(a, bound)) {
    if (classify(a, b, options, m) == 1) out.push_back(b);
  }
  return out;
}

MonomialIdeal atomicity_ideal(const FiberMatrix& a, const Degree& b) {
  require_same_dim(a.rows(), b.size(), "atomicity_ideal");
  const auto pts = fiber_points(a, b);
  if (pts.empty()) throw DomainError("atomicity_ideal: empty fiber over " + to_string(b));
  const auto verts = hull_vertices_serial(pts);
  return MonomialIdeal(a.cols(), verts);
}

namespace {

// Partition of {u : |u| <= bound} into vertices and non-vertices of their
// own fibers.
std::pair<std::vector<ExponentVector>, std::vector<ExponentVector>> classify_by_vertex(const FiberMatrix& a,
                                                                                       std::int64_t bound) {
  if (bound < 0) throw DomainError("vertex ideal: negative bound");
  VertexCache cache(a);
  std::vector<ExponentVector> standard, other;
  for (auto& u : monomials_up_to(a.cols(), bound)) {
    const auto& verts = cache.vertices(a.apply(u));
    if (std::binary_search(verts.begin(), verts.end(), u)) {
      standard.push_back(std::move(u));
    } else {
      other.push_back(std::move(u));
    }
  }
  return {std::move(standard), std::move(other)};
}

}  // namespace

std::vector<ExponentVector> vertex_ideal_standard(const FiberMatrix& a, std::int64_t bound) {
  return classify_by_vertex(a, bound).first;
}

MonomialIdeal vertex_ideal_gens_truncated(const FiberMatrix& a, std::int64_t bound) {
  return MonomialIdeal(a.cols(), classify_by_vertex(a, bound).second);
}

}  // namespace staircase
