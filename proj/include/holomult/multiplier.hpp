#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "holomult/calculus.hpp"
#include "holomult/linsolve.hpp"

namespace hlm {

/// Outcome of a polynomial predicate: holds iff the residual is zero.
struct Check {
  bool holds = false;
  CPoly residual;

  static Check of(CPoly r) {
    const bool zero = r.is_zero();
    return Check{zero, std::move(r)};
  }
};

struct DarbouxPair {
  CPoly poly;
  CPoly cofactor;
};

struct ExponentSolution {
  std::vector<GaussRat> exponents;
  std::vector<DarbouxPair> basis;
  // Further admissible exponent vectors are exponents + span(nullspace).
  std::vector<GaussVector> nullspace;
};

struct DarbouxSearch {
  enum class Status { found, not_darboux, inconsistent };
  Status status = Status::inconsistent;
  ExponentSolution solution;
  std::size_t failed_candidate = 0;  // valid when status == not_darboux
};

struct SymmetryResult {
  std::optional<CPoly> lambda;
  // Components k for which [Z,S]^k != lambda * Z^k, or where no polynomial
  // quotient exists; 0-based.
  std::vector<std::size_t> offending;
};

struct FrameResult {
  bool bracket_ok = false;
  std::vector<std::size_t> bracket_failures;  // frame indices i, 0-based
  CPoly trace;
  bool trace_ok = false;
  CPoly beta;  // weight * det(Z_i^k); meaningful when both checks pass
  Check inverse;
};

Check is_first_integral(const CPoly& f, const VectorField& Z);
// Z(alpha) + alpha div Z; cross-checked against d(alpha iota_Z omega).
Check is_last_multiplier(const CPoly& alpha, const VectorField& Z, const VolumeForm& omega);
// Z(beta) - div(Z) beta.
Check is_inverse_multiplier(const CPoly& beta, const VectorField& Z, const VolumeForm& omega);
// Z*(f) = -Z(f) - f div Z.
CPoly adjoint_apply(const VectorField& Z, const CPoly& f, const VolumeForm& omega);

// Z(f) = g f with polynomial g, or nullopt. Throws DomainError for f = 0.
std::optional<DarbouxPair> darboux_cofactor(const CPoly& f, const VectorField& Z);
// Exponents m with sum m_k g_k = -div Z, by coefficient matching.
DarbouxSearch darboux_multiplier_search(const VectorField& Z, const std::vector<CPoly>& candidates,
                                        const VolumeForm& omega);

// lambda with [Z,S] = lambda Z. Throws DomainError when Z = 0.
SymmetryResult symmetry_coefficient(const VectorField& S, const VectorField& Z);
// beta = iota_{S_{n-1}} ... iota_{S_1} iota_Z omega. Throws DomainError when
// the count is not n-1 or some S_i is not a symmetry of Z.
CPoly inverse_from_symmetries(const std::vector<VectorField>& S, const VectorField& Z,
                              const VolumeForm& omega);
// Verifies [Z, Z_i] = sum_k f_i^k Z_k and sum_k f_k^k = 0; structure[i][k] = f_i^k.
FrameResult inverse_from_frame(const std::vector<VectorField>& frame,
                               const std::vector<std::vector<CPoly>>& structure, const VectorField& Z,
                               const VolumeForm& omega);
// Corollary form: structure constants f_{ij}^k of the frame itself
// (structure[i][j][k]) and coefficients g with Z = sum g_k Z_k. The frame
// brackets are verified before the derived f_j^k are handed to
// inverse_from_frame; a failing frame bracket shows up in bracket_failures.
FrameResult inverse_from_frame_corollary(const std::vector<VectorField>& frame,
                                         const std::vector<std::vector<std::vector<CPoly>>>& structure,
                                         const std::vector<CPoly>& g, const VolumeForm& omega);
// Field Z = sum g_k Z_k.
VectorField combine_frame(const std::vector<VectorField>& frame, const std::vector<CPoly>& g);

// Residual Z(div W) + div W div Z; div W is a last multiplier when it vanishes.
Check divergence_type_check(const VectorField& W, const VectorField& Z, const VolumeForm& omega);

struct ProductPair {
  CPoly beta;
  VectorField field;
};
// (beta1 beta2, Z1 + Z2) on n1 + n2 variables. Throws DomainError when
// either factor is not an inverse multiplier.
ProductPair product_combine(const CPoly& beta1, const VectorField& Z1, const CPoly& beta2,
                            const VectorField& Z2);

// Embed a field on C^m into C^n (n >= m + offset), variables and components
// shifted by offset.
VectorField embed_field(const VectorField& Z, std::size_t n, std::size_t offset);

}  // namespace hlm
