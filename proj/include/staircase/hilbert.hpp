#pragma once

#include <cstdint>
#include <map>

#include "staircase/ideal.hpp"
#include "staircase/matrix.hpp"

namespace staircase {

/// An N^d grading of k[x_1..x_n]: deg x_i is column i of the matrix.
class Grading {
 public:
  explicit Grading(FiberMatrix degrees) : degrees_(std::move(degrees)) {}
  /// Total degree (a single row of ones).
  static Grading standard(std::size_t nvars);
  /// The N^n grading by exponent vectors.
  static Grading fine(std::size_t nvars) { return Grading(FiberMatrix::identity(nvars)); }

  const FiberMatrix& matrix() const { return degrees_; }
  std::size_t nvars() const { return degrees_.cols(); }
  std::size_t rank() const { return degrees_.rows(); }

 private:
  FiberMatrix degrees_;
};

/// Polynomial numerator of a Hilbert series, a finitely supported map from
/// exponent tuples of t to nonzero integer coefficients.
class HilbertNumerator {
 public:
  using Terms = std::map<ExponentVector, std::int64_t>;

  HilbertNumerator() = default;
  explicit HilbertNumerator(Terms terms);

  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(const ExponentVector& t) const;
  void add(const ExponentVector& t, std::int64_t coeff);

  friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;

 private:
  Terms terms_;
};

/// Largest generator count accepted by hilbert_numerator (2^r terms).
inline constexpr std::size_t kMaxNumeratorGenerators = 20;

/// dim_k (S/I)_b: the number of u with D u = b and x^u outside I.
std::int64_t hilbert_function(const MonomialIdeal& ideal, const Grading& grading, const Degree& b);

/// Fine-graded numerator by inclusion-exclusion over subsets of minimal
/// generators: sum over sigma of (-1)^|sigma| t^lcm(sigma). The series is
/// this numerator over prod_i (1 - t_i).
HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal);

/// Substitutes t^u -> t^{D u} in a fine-graded numerator.
HilbertNumerator coarsen(const HilbertNumerator& fine, const Grading& grading);

/// Agreement of the two Hilbert functions on every b in N^d with
/// sum(b) <= bound.
bool same_hilbert_up_to(const MonomialIdeal& a, const MonomialIdeal& b, const Grading& grading, std::int64_t bound);

}  // namespace staircase
