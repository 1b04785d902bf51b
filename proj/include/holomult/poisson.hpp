#pragma once

#include <optional>
#include <vector>

#include "holomult/calculus.hpp"
#include "holomult/multiplier.hpp"
#include "holomult/riemann.hpp"

namespace hlm {

/// Bivector P = sum_{i<j} P^{ij} d_i ^ d_j, P^{ji} = -P^{ij}.
class Bivector {
public:
  Bivector() = default;
  explicit Bivector(std::size_t n) : m_(n, 2) {}
  explicit Bivector(Multivector m);

  std::size_t dim() const { return m_.dim(); }
  // P^{ij} with 0-based indices; antisymmetric, zero on the diagonal.
  CPoly operator()(std::size_t i, std::size_t j) const;
  // Adds f to P^{ij} (and -f to P^{ji}); i != j.
  void add(std::size_t i, std::size_t j, const CPoly& f);
  const Multivector& as_multivector() const { return m_; }
  bool is_zero() const { return m_.is_zero(); }

  friend Bivector operator*(const CPoly& f, const Bivector& P) { return Bivector(P.m_.scaled(f)); }
  friend bool operator==(const Bivector& a, const Bivector& b) { return a.m_ == b.m_; }

private:
  Multivector m_;
};

// Grade-3 multivector; components indexed by i<j<k.
using Trivector = Multivector;

/// Result of a vector-valued predicate: holds iff every component is zero.
struct FieldCheck {
  bool holds = false;
  VectorField residual;

  static FieldCheck of(VectorField r) {
    const bool zero = r.is_zero();
    return FieldCheck{zero, std::move(r)};
  }
};

CPoly poisson_bracket(const CPoly& f, const CPoly& g, const Bivector& P);
// Cyclic sum {{z^i,z^j},z^k} + {{z^j,z^k},z^i} + {{z^k,z^i},z^j}.
Trivector jacobiator(const Bivector& P);
// (Z_f)^j = sum_i P^{ij} df/dz^i, so Z_f(g) = {f, g}.
VectorField hamiltonian_field(const CPoly& f, const Bivector& P);
// P^i = sum_j dP^{ij}/dz^j.
VectorField modular_field(const Bivector& P, const VolumeForm& omega);
FieldCheck is_unimodular_with(const Bivector& P, const CPoly& h, const VolumeForm& omega);
// (alpha Z_omega - Z_alpha)(f): zero iff alpha is a last multiplier for Z_f.
// When h is given and Z_omega = Z_h the form alpha{h,f} - {alpha,f} is
// cross-checked.
CPoly hamiltonian_lm_residual(const CPoly& alpha, const CPoly& f, const Bivector& P, const VolumeForm& omega,
                              const std::optional<CPoly>& h = std::nullopt);
// sum_i P^i df/dz^i.
CPoly self_multiplier_residual(const CPoly& f, const Bivector& P, const VolumeForm& omega);

// (L_X P)^{ij} = X(P^{ij}) - sum_k (P^{kj} d_k X^i + P^{ik} d_k X^j).
Bivector lie_derivative(const VectorField& X, const Bivector& P);

struct ExactnessResult {
  bool exact = false;        // curl(P) == 0
  VectorField curl;          // D_omega P as a field
  bool modular_zero = false;  // coordinate condition: sum_j dP^{ij}/dz^j == 0
  bool poisson = false;       // jacobiator == 0
  // Triple condition, one residual per i<j<k (empty for n < 3).
  std::vector<CPoly> triple_residuals;
  bool triple_zero = true;
};
ExactnessResult exactness_check(const Bivector& P, const VolumeForm& omega);
// sum_{l not in {i,j,k}} d_l(P^{li}P^{jk} + P^{lj}P^{ki} + P^{lk}P^{ij}).
CPoly triple_condition(const Bivector& P, std::size_t i, std::size_t j, std::size_t k);

// Components sum_j d(alpha P^{ij})/dz^j, cross-checked against
// d(alpha flat(P)) and the weighted modular field. Throws DomainError for
// alpha = 0.
FieldCheck bivector_lm_check(const CPoly& alpha, const Bivector& P, const VolumeForm& omega);

struct Dim4Result {
  CPoly pfaffian;
  bool pfaffian_zero = false;
  bool dclosed = false;  // d(iota_P omega) == 0
  bool exact = false;    // curl(P) == 0
  bool poisson = false;
  // True when a vanishing point was supplied and P is zero there; only then
  // is (pfaffian_zero && dclosed) == (exact && poisson) asserted.
  bool hypothesis_met = false;
};
Dim4Result dim4_exactness(const Bivector& P, const VolumeForm& omega,
                          const std::optional<std::vector<GaussRat>>& vanishing_point = std::nullopt);

// D_omega P applied to h, for the euclidean metric; equals g(D_omega P, grad h)
// and div(Z_h). Throws DomainError for a non-euclidean metric.
Check exact_hamiltonian_check(const CPoly& h, const Bivector& P, const HoloMetric& g);

}  // namespace hlm
