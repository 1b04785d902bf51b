#include "holomult/linsolve.hpp"

#include "holomult/error.hpp"

namespace hlm {

namespace {

std::size_t column_count(const GaussMatrix& A) {
  const std::size_t cols = A.empty() ? 0 : A.front().size();
  for (const auto& row : A)
    if (row.size() != cols) throw DimensionError("matrix rows have different lengths");
  return cols;
}

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(GaussMatrix& M, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < M.size(); ++col) {
    std::size_t sel = row;
    while (sel < M.size() && M[sel][col].is_zero()) ++sel;
    if (sel == M.size()) continue;
    std::swap(M[row], M[sel]);
    const GaussRat inv = M[row][col].inverse();
    for (auto& v : M[row]) v *= inv;
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (r == row || M[r][col].is_zero()) continue;
      const GaussRat factor = M[r][col];
      for (std::size_t c = col; c < M[r].size(); ++c) M[r][c] -= factor * M[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_linear(const GaussMatrix& A, const GaussVector& b) {
  const std::size_t cols = column_count(A);
  if (b.size() != A.size())
    throw DimensionError("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                         std::to_string(A.size()) + " rows");
  GaussMatrix M = A;
  for (std::size_t r = 0; r < M.size(); ++r) M[r].push_back(b[r]);
  const auto pivots = rref(M, cols);

  LinearSolution out;
  out.rank = pivots.size();
  for (std::size_t r = pivots.size(); r < M.size(); ++r)
    if (!M[r][cols].is_zero()) return out;

  out.particular.assign(cols, GaussRat());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.particular[pivots[r]] = M[r][cols];

  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    GaussVector v(cols, GaussRat());
    v[free] = GaussRat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M[r][free];
    out.nullspace.push_back(std::move(v));
  }
  out.kind = out.nullspace.empty() ? LinearSolution::Kind::unique : LinearSolution::Kind::family;
  return out;
}

GaussVector mat_vec(const GaussMatrix& A, const GaussVector& x) {
  const std::size_t cols = column_count(A);
  if (x.size() != cols) throw DimensionError("vector length does not match matrix columns");
  GaussVector out(A.size());
  for (std::size_t r = 0; r < A.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r] += A[r][c] * x[c];
  return out;
}

GaussMatrix mat_inverse(const GaussMatrix& A) {
  const std::size_t n = A.size();
  if (column_count(A) != n) throw DimensionError("inverse of a non-square matrix");
  GaussMatrix M = A;
  for (std::size_t r = 0; r < n; ++r) {
    M[r].resize(2 * n);
    M[r][n + r] = GaussRat(1);
  }
  const auto pivots = rref(M, n);
  if (pivots.size() != n) return {};
  GaussMatrix inv(n, GaussVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = M[r][n + c];
  return inv;
}

GaussRat determinant(const GaussMatrix& A) {
  const std::size_t n = A.size();
  if (column_count(A) != n) throw DimensionError("determinant of a non-square matrix");
  GaussMatrix M = A;
  GaussRat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && M[sel][col].is_zero()) ++sel;
    if (sel == n) return GaussRat();
    if (sel != col) {
      std::swap(M[sel], M[col]);
      det = -det;
    }
    det *= M[col][col];
    const GaussRat inv = M[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (M[r][col].is_zero()) continue;
      const GaussRat factor = M[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) M[r][c] -= factor * M[col][c];
    }
  }
  return det;
}

}  // namespace hlm
