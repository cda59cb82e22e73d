#pragma once

#include <optional>
#include <vector>

#include "staircase/ideal.hpp"
#include "staircase/matrix.hpp"

namespace staircase {

/// The preimage of b under A together with the vertices of its convex hull.
struct Fiber {
  Degree degree;
  std::vector<ExponentVector> points;
  std::vector<ExponentVector> vertices;
};

/// {u in N^n : A u = b}, lexicographic. Empty iff b is outside NA.
std::vector<ExponentVector> fiber_points(const FiberMatrix& a, const Degree& b);

/// Points and hull vertices over b.
Fiber make_fiber(const FiberMatrix& a, const Degree& b);

/// P_b == P_b1 + P_b2 (Minkowski sum), decided by mutual hull membership of
/// the vertices of P_b and the pairwise sums of summand vertices.
/// Requires b1 + b2 == b and nonempty fibers over b1 and b2.
bool minkowski_decomposes(const FiberMatrix& a, const Degree& b, const Degree& b1, const Degree& b2);

/// No split b = b1 + b2 with b1, b2 in NA \ {0} satisfies
/// minkowski_decomposes. Throws DomainError on an empty fiber.
bool is_atomic(const FiberMatrix& a, const Degree& b);

/// {u : A u = b, x^u not in M}
std::vector<ExponentVector> ma_fiber(const MonomialIdeal& m, const FiberMatrix& a, const Degree& b);

struct LatticeSplit {
  bool decomposes = false;
  /// First point (lexicographically) of the (M,A) fiber over b that is not
  /// a sum of points of the fibers over b1 and b2; set iff !decomposes.
  std::optional<ExponentVector> witness;
};

/// Whether every point of the (M,A) fiber over b is u1 + u2 with u1, u2 in
/// the (M,A) fibers over b1, b2. Requires b1 + b2 == b and b1, b2 in NA.
LatticeSplit ma_decomposes(const MonomialIdeal& m, const FiberMatrix& a, const Degree& b, const Degree& b1,
                           const Degree& b2);

/// No split b = b1 + b2 with b1, b2 in NA \ {0} passes ma_decomposes.
/// Throws DomainError when the (M,A) fiber over b is empty.
bool is_ma_atomic(const MonomialIdeal& m, const FiberMatrix& a, const Degree& b);

enum class AtomicityMode { vertex, lattice };

struct ScanOptions {
  AtomicityMode mode = AtomicityMode::vertex;
  /// Ideal M for lattice mode; the zero ideal when absent.
  std::optional<MonomialIdeal> lattice_ideal;
  /// OpenMP worker count; <= 0 uses the runtime default.
  int workers = 0;
};

/// Atomic degrees among {A u : 1 <= |u| <= bound}, sorted. In lattice mode,
/// degrees whose (M,A) fiber is empty are skipped. Degrees are checked in
/// parallel; the result equals atomic_scan_serial.
std::vector<Degree> atomic_scan(const FiberMatrix& a, std::int64_t bound, const ScanOptions& options = {});
std::vector<Degree> atomic_scan_serial(const FiberMatrix& a, std::int64_t bound, const ScanOptions& options = {});

/// Distinct degrees A u for 1 <= |u| <= bound, sorted.
std::vector<Degree> degrees_up_to(const FiberMatrix& a, std::int64_t bound);

/// <x^u : u a vertex of P_b>. The unit ideal for b = 0.
MonomialIdeal atomicity_ideal(const FiberMatrix& a, const Degree& b);

/// {u : |u| <= bound, u a vertex of P_{Au}}, lexicographic: the standard
/// monomials of the vertex ideal of A through degree `bound`.
std::vector<ExponentVector> vertex_ideal_standard(const FiberMatrix& a, std::int64_t bound);
/// Minimal non-vertex u with |u| <= bound: generators of the vertex ideal
/// through degree `bound`.
MonomialIdeal vertex_ideal_gens_truncated(const FiberMatrix& a, std::int64_t bound);

}  // namespace staircase
