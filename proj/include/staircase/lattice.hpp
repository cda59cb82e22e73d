#pragma once

#include <vector>

#include "staircase/matrix.hpp"

namespace staircase {

/// All u in N^n with A u = b, lexicographically ascending.
///
/// Depth-first over u_0, u_1, ...; each u_i is capped by
/// min_r floor(residual_r / A[r][i]) and a branch is cut as soon as some
/// row has residual left but no remaining column touches it.
std::vector<ExponentVector> lattice_points(const FiberMatrix& a, const Degree& b);

/// Whether A u = b has a solution in N^n; stops at the first one.
bool has_lattice_point(const FiberMatrix& a, const Degree& b);

}  // namespace staircase
