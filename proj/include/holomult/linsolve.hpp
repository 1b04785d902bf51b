#pragma once

#include <cstddef>
#include <vector>

#include "holomult/scalar.hpp"

namespace hlm {

using GaussVector = std::vector<GaussRat>;
using GaussMatrix = std::vector<GaussVector>;  // row-major

struct LinearSolution {
  enum class Kind { unique, family, inconsistent };
  Kind kind = Kind::inconsistent;
  // Particular solution with all free variables set to zero. Empty when
  // inconsistent.
  GaussVector particular;
  // Basis of the nullspace of A, one vector per free variable.
  std::vector<GaussVector> nullspace;
  std::size_t rank = 0;
};

// Exact Gauss-Jordan elimination over Q(i). A has `rows` x `cols` entries
// (every row must have the same length); b has `rows` entries. Pivots are
// chosen leftmost-first, so the particular solution is supported on the
// earliest columns that can carry it. Throws DimensionError on shape errors.
LinearSolution solve_linear(const GaussMatrix& A, const GaussVector& b);

// A * x, exact. Throws DimensionError on shape errors.
GaussVector mat_vec(const GaussMatrix& A, const GaussVector& x);

// Exact inverse of a square matrix, or empty when singular.
GaussMatrix mat_inverse(const GaussMatrix& A);

GaussRat determinant(const GaussMatrix& A);

}  // namespace hlm
