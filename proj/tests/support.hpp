#pragma once

// Generators and brute-force oracles shared by the test binaries. Nothing
// here calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>


#include "staircase/exponent.hpp"
#include "staircase/ideal.hpp"
#include "staircase/matrix.hpp"
#include "staircase/seed.hpp"

namespace staircase {

// gtest failure messages print exponent vectors as tuples.
inline void PrintTo(const ExponentVector& v, std::ostream* os) { *os << to_string(v); }

}  // namespace staircase

namespace staircase::testing {

inline std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(default_seed() * 1000003ULL + salt); }

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Every u in N^n with |u| <= bound (odometer order, independent of the
/// library enumerator).
inline std::vector<ExponentVector> all_monomials(std::size_t n, std::int64_t bound) {
  std::vector<ExponentVector> out;
  std::vector<std::int64_t> u(n, 0);
  for (;;) {
    std::int64_t s = 0;
    for (auto x : u) s += x;
    if (s <= bound) out.emplace_back(u);
    std::size_t i = 0;
    while (i < n && ++u[i] > bound) u[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Every u in the box 0 <= u <= hi.
inline std::vector<ExponentVector> box(const std::vector<std::int64_t>& hi) {
  std::vector<ExponentVector> out;
  std::vector<std::int64_t> u(hi.size(), 0);
  for (;;) {
    out.emplace_back(u);
    std::size_t i = 0;
    while (i < hi.size() && ++u[i] > hi[i]) u[i++] = 0;
    if (i == hi.size()) break;
  }
  return out;
}

/// Membership by scanning raw (not minimalized) generators.
inline bool naive_member(const std::vector<ExponentVector>& gens, const ExponentVector& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > m[i]) return false;
    }
    return true;
  });
}

inline ExponentVector random_vector(std::mt19937_64& rng, std::size_t n, std::int64_t max_entry) {
  std::vector<std::int64_t> e(n);
  for (auto& x : e) x = uniform(rng, 0, max_entry);
  return ExponentVector(std::move(e));
}

/// Random vector with total degree between 1 and max_degree.
inline ExponentVector random_monomial(std::mt19937_64& rng, std::size_t n, std::int64_t max_degree) {
  const auto deg = uniform(rng, 1, max_degree);
  std::vector<std::int64_t> e(n, 0);
  for (std::int64_t k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1))];
  return ExponentVector(std::move(e));
}

inline std::vector<ExponentVector> random_gens(std::mt19937_64& rng, std::size_t n, std::size_t max_gens,
                                               std::int64_t max_degree) {
  std::vector<ExponentVector> gens;
  const auto k = uniform(rng, 1, static_cast<std::int64_t>(max_gens));
  for (std::int64_t i = 0; i < k; ++i) gens.push_back(random_monomial(rng, n, max_degree));
  return gens;
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t max_gens, std::int64_t max_degree) {
  return MonomialIdeal(n, random_gens(rng, n, max_gens, max_degree));
}

/// Random artinian ideal: pure powers of every variable plus a few mixed
/// generators.
inline MonomialIdeal random_artinian(std::mt19937_64& rng, std::size_t n, std::int64_t max_power) {
  auto gens = random_gens(rng, n, 3, max_power);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(ExponentVector::unit(n, i, uniform(rng, 1, max_power)));
  return MonomialIdeal(n, gens);
}

inline FiberMatrix random_matrix(std::mt19937_64& rng, std::size_t max_rows, std::size_t max_cols,
                                 std::int64_t max_entry) {
  const auto d = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_rows)));
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_cols)));
  std::vector<std::int64_t> data(d * n);
  for (auto& x : data) x = uniform(rng, 0, max_entry);
  for (std::size_t c = 0; c < n; ++c) {
    bool nonzero = false;
    for (std::size_t r = 0; r < d; ++r) nonzero = nonzero || data[r * n + c] > 0;
    if (!nonzero) data[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(d) - 1)) * n + c] = 1;
  }
  return FiberMatrix(d, n, std::move(data));
}

/// Fiber by scanning the box u_i <= max_r b_r (valid because every column
/// is nonzero: u_i * A[r][i] <= b_r for a row with A[r][i] >= 1).
inline std::vector<ExponentVector> box_fiber(const FiberMatrix& a, const ExponentVector& b) {
  std::int64_t hi = 0;
  for (auto x : b) hi = std::max(hi, x);
  std::vector<ExponentVector> out;
  for (const auto& u : box(std::vector<std::int64_t>(a.cols(), hi))) {
    bool ok = true;
    for (std::size_t r = 0; r < a.rows() && ok; ++r) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c) * u[c];
      ok = s == b[r];
    }
    if (ok) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class Barycentric { dependent, outside, inside };

/// Whether q = sum_k l_k p_k with sum l_k = 1 has a unique solution, and if
/// so whether it is nonnegative. Fraction-free Gauss-Jordan over 128-bit
/// integers; rows are divided by their gcd after every step.
inline Barycentric barycentric(const ExponentVector& q, const std::vector<const ExponentVector*>& pts) {
  using I = __int128;
  const std::size_t dim = q.size(), rows = dim + 1, cols = pts.size();
  std::vector<std::vector<I>> m(rows, std::vector<I>(cols + 1));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < cols; ++k) m[r][k] = (*pts[k])[r];
    m[r][cols] = q[r];
  }
  for (std::size_t k = 0; k <= cols; ++k) m[dim][k] = 1;
  auto normalize = [](std::vector<I>& row) {
    I g = 0;
    for (I x : row) {
      for (I a = x < 0 ? -x : x; a != 0;) {
        const I t = g % a;
        g = a;
        a = t;
      }
    }
    if (g > 1) {
      for (I& x : row) x /= g;
    }
  };
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = c;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) return Barycentric::dependent;
    std::swap(m[p], m[c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const I f = m[r][c], piv = m[c][c];
      for (std::size_t k = 0; k <= cols; ++k) m[r][k] = m[r][k] * piv - m[c][k] * f;
      normalize(m[r]);
    }
  }
  for (std::size_t r = cols; r < rows; ++r) {
    if (m[r][cols] != 0) return Barycentric::outside;  // q off the affine span
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if ((m[c][cols] < 0) != (m[c][c] < 0) && m[c][cols] != 0) return Barycentric::outside;
  }
  return Barycentric::inside;
}

/// q in conv(points) by Caratheodory: q is a convex combination of some
/// affinely independent subset, whose barycentric coordinates are then
/// unique. Enumerates affinely independent subsets of size <= dim + 1;
/// a dependent subset is not extended. A separating integer functional,
/// c.q > c.p for every point p, settles "outside" first when one of a fixed
/// batch of small directions happens to work.
inline bool caratheodory_in_hull(const ExponentVector& q, const std::vector<ExponentVector>& points) {
  std::mt19937_64 directions(0);
  std::vector<std::int64_t> c(q.size());
  for (int attempt = 0; attempt < 256 && !points.empty(); ++attempt) {
    for (auto& x : c) x = static_cast<std::int64_t>(directions() % 21) - 10;
    auto dot = [&](const ExponentVector& v) {
      std::int64_t t = 0;
      for (std::size_t i = 0; i < v.size(); ++i) t += c[i] * v[i];
      return t;
    };
    const std::int64_t cq = dot(q);
    if (std::all_of(points.begin(), points.end(), [&](const ExponentVector& p) { return dot(p) < cq; })) return false;
  }
  const std::size_t max_size = std::min(points.size(), q.size() + 1);
  std::vector<const ExponentVector*> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (!pick.empty()) {
      const auto b = barycentric(q, pick);
      if (b == Barycentric::inside) return true;
      if (b == Barycentric::dependent) return false;
    }
    if (pick.size() == max_size) return false;
    for (std::size_t k = start; k < points.size(); ++k) {
      pick.push_back(&points[k]);
      if (rec(k + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

/// Vertices by the definition: u is not in the hull of the other points.
inline std::vector<ExponentVector> oracle_vertices(std::vector<ExponentVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<ExponentVector> out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::vector<ExponentVector> rest;
    for (std::size_t m = 0; m < pts.size(); ++m) {
      if (m != k) rest.push_back(pts[m]);
    }
    if (!caratheodory_in_hull(pts[k], rest)) out.push_back(pts[k]);
  }
  return out;
}

}  // namespace staircase::testing
