#pragma once

#include <vector>

#include "holomult/poisson.hpp"
#include "holomult/riemann.hpp"

namespace hlm {

/// Real vector field on R^{2n}, components ordered x1..xn then y1..yn.
class RealVectorField {
public:
  RealVectorField() = default;
  explicit RealVectorField(std::vector<RPoly> components);
  static RealVectorField zero(std::size_t dim);

  std::size_t dim() const { return comps_.size(); }
  const RPoly& operator[](std::size_t a) const { return comps_[a]; }
  const std::vector<RPoly>& components() const { return comps_; }
  bool is_zero() const;

  RealVectorField scaled(const Rational& c) const;
  friend bool operator==(const RealVectorField& a, const RealVectorField& b) { return a.comps_ == b.comps_; }

private:
  std::vector<RPoly> comps_;
};

/// Antisymmetric real bivector, stored as a full matrix.
class RealBivector {
public:
  explicit RealBivector(std::vector<std::vector<RPoly>> matrix);
  std::size_t dim() const { return m_.size(); }
  const RPoly& operator()(std::size_t a, std::size_t b) const { return m_[a][b]; }

private:
  std::vector<std::vector<RPoly>> m_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Twin real metrics h and k on R^{2n} attached to a holomorphic metric g.
struct RealMetric {
  RationalMatrix h, k, hinv, kinv;
};

struct RealFieldPair {
  RealVectorField Z;  // 2 Re Z: components (X, Y)
  RealVectorField W;  // 2 Im Z = -i(Z - conj Z): components (Y, -X)
};

RealFieldPair realify_field(const VectorField& Z);
// |alpha|^2 = (Re alpha)^2 + (Im alpha)^2.
RPoly modsq(const CPoly& alpha);
RPoly apply_real_field(const RealVectorField& X, const RPoly& u);
RPoly real_divergence(const RealVectorField& X);
// X(u) + u div X.
RPoly real_lm_residual(const RPoly& u, const RealVectorField& X);

// g = A + iB, g^{-1} = C + iD:
//   h = [[2A, -2B], [-2B, -2A]],  h^{-1} = 1/2 [[C, D], [D, -C]],
//   k = [[-2B, -2A], [-2A, 2B]],  k^{-1} = 1/2 [[D, -C], [-C, -D]],
// with k(X, Y) = h(JX, Y), J d/dx = d/dy. The inverses and the recombination
// g = 1/2 (h - i k) on the x block are asserted.
RealMetric realify_metric(const HoloMetric& g);
enum class WhichMetric { h, k };
RealVectorField real_gradient(const RPoly& u, const RealMetric& m, WhichMetric which);

struct RealPoissonPair {
  RealBivector R;  // 1/4 [[Re P, Im P], [Im P, -Re P]]
  RealBivector I;  // 1/4 [[Im P, -Re P], [-Re P, -Im P]]
};
RealPoissonPair realify_poisson(const Bivector& P);
// X^b = sum_a Q^{ab} du/dx^a.
RealVectorField real_hamiltonian(const RPoly& u, const RealBivector& Q);
// M^a = sum_b dQ^{ab}/dx^b.
RealVectorField real_modular_field(const RealBivector& Q);
// Cyclic coordinate Jacobiator of a real bivector, all components a<b<c.
std::vector<RPoly> real_jacobiator(const RealBivector& Q);

/// Denominator-cleared theorem check. `complex_residual` is the holomorphic
/// quantity whose vanishing the theorem is about; the real residuals are the
/// cleared real last-multiplier residuals; `identity_*` record whether the
/// real residuals equal the predicted real/imaginary parts exactly.
struct TheoremCheck {
  CPoly complex_residual;
  RPoly real_residual_R;
  RPoly real_residual_I;
  RPoly clearing_factor;
  bool identity_R = false;
  bool identity_I = false;

  bool complex_zero() const { return complex_residual.is_zero(); }
  bool real_zero() const { return real_residual_R.is_zero() && real_residual_I.is_zero(); }
  // Both identities hold and the complex and real verdicts agree.
  bool consistent() const { return identity_R && identity_I && complex_zero() == real_zero(); }
};

// |alpha|^2 against Z_R and W_R: residuals equal 2Re / 2Im of
// conj(alpha) (Z(alpha) + alpha div Z). Throws DomainError for alpha = 0.
TheoremCheck check_thlm(const CPoly& alpha, const VectorField& Z, const VolumeForm& omega);
// alpha against (1/f) grad f, |alpha|^2 against (1/|f|^2) grad_h |f|^2 and
// the k analogue, cleared by f^2 and |f|^4.
TheoremCheck check_tg(const CPoly& alpha, const CPoly& f, const HoloMetric& g);
// Same shape with the Hamiltonian field Z_f and 2 Z^R_{|f|^2}, 2 Z^I_{|f|^2}.
TheoremCheck check_th1(const CPoly& alpha, const CPoly& f, const Bivector& P, const VolumeForm& omega);
// f self-multiplier residual against |f|^2 for Z^R_{|f|^2} and Z^I_{|f|^2}.
TheoremCheck check_th2(const CPoly& f, const Bivector& P, const VolumeForm& omega);

// omega ^ conj(omega) = factor * dx1..dxn dy1..dyn, computed by expanding
// the wedge of dz^k = dx^k + i dy^k; equals |c|^2 (-2i)^n.
GaussRat realified_volume_factor(const VolumeForm& omega);

}  // namespace hlm
