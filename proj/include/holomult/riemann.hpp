#pragma once

#include "holomult/calculus.hpp"
#include "holomult/linsolve.hpp"
#include "holomult/multiplier.hpp"

namespace hlm {

/// Constant-coefficient holomorphic Riemannian metric g on C^n whose
/// determinant is a square in Q(i), so omega_g = c dz^1 ^ ... ^ dz^n with
/// c^2 = det g is exact.
class HoloMetric {
public:
  // Throws DomainError when g is not symmetric, singular, or det g has no
  // square root in Q(i).
  explicit HoloMetric(GaussMatrix g);
  static HoloMetric euclidean(std::size_t n);

  std::size_t dim() const { return g_.size(); }
  const GaussMatrix& g() const { return g_; }
  const GaussMatrix& ginv() const { return ginv_; }
  // c with first nonzero of (re, im) positive.
  const GaussRat& vol_factor() const { return c_; }
  VolumeForm volume() const { return VolumeForm(dim(), c_); }
  bool is_euclidean() const;

private:
  GaussMatrix g_;
  GaussMatrix ginv_;
  GaussRat c_;
};

// g(X, Y) = sum g_ij X^i Y^j.
CPoly metric_pair(const HoloMetric& g, const VectorField& X, const VectorField& Y);
VectorField gradient(const CPoly& f, const HoloMetric& g);
CPoly laplacian(const CPoly& f, const HoloMetric& g);
// g(grad f, grad alpha) + alpha Laplacian(f).
CPoly gradient_lm_residual(const CPoly& alpha, const CPoly& f, const HoloMetric& g);
// Z(f) == 0, the cleared form of Z(log f) = 0. Throws DomainError for f = 0.
Check conformal_equivalence(const CPoly& f, const VectorField& Z);

}  // namespace hlm
