#include "holomult/multiplier.hpp"

#include <set>

namespace hlm {

Check is_first_integral(const CPoly& f, const VectorField& Z) { return Check::of(apply_field(Z, f)); }

Check is_last_multiplier(const CPoly& alpha, const VectorField& Z, const VolumeForm& omega) {
  CPoly r = apply_field(Z, alpha) + alpha * divergence(Z, omega);
  // d(alpha iota_Z omega) = div(alpha Z) omega.
  const Form theta = interior_product(to_multivector(Z), omega.as_form());
  require(partial_d(theta.scaled(alpha)) == omega.as_form().scaled(r),
          "last multiplier: form and divergence paths disagree");
  return Check::of(std::move(r));
}

Check is_inverse_multiplier(const CPoly& beta, const VectorField& Z, const VolumeForm& omega) {
  return Check::of(apply_field(Z, beta) - divergence(Z, omega) * beta);
}

CPoly adjoint_apply(const VectorField& Z, const CPoly& f, const VolumeForm& omega) {
  return -apply_field(Z, f) - f * divergence(Z, omega);
}

std::optional<DarbouxPair> darboux_cofactor(const CPoly& f, const VectorField& Z) {
  if (f.is_zero()) throw DomainError("darboux_cofactor: zero polynomial");
  auto g = exact_divide(apply_field(Z, f), f);
  if (!g) return std::nullopt;
  return DarbouxPair{f, std::move(*g)};
}

DarbouxSearch darboux_multiplier_search(const VectorField& Z, const std::vector<CPoly>& candidates,
                                        const VolumeForm& omega) {
  DarbouxSearch out;
  std::vector<DarbouxPair> basis;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    auto pair = darboux_cofactor(candidates[k], Z);
    if (!pair) {
      out.status = DarbouxSearch::Status::not_darboux;
      out.failed_candidate = k;
      return out;
    }
    basis.push_back(std::move(*pair));
  }
  const CPoly rhs = -divergence(Z, omega);

  // One equation per monomial occurring in any cofactor or in the divergence.
  std::set<Monomial, GrlexGreater> monomials;
  for (const auto& p : basis)
    for (const auto& [m, c] : p.cofactor.terms()) monomials.insert(m);
  for (const auto& [m, c] : rhs.terms()) monomials.insert(m);

  GaussMatrix A;
  GaussVector b;
  for (const auto& m : monomials) {
    GaussVector row;
    for (const auto& p : basis) row.push_back(p.cofactor.coefficient(m));
    A.push_back(std::move(row));
    b.push_back(rhs.coefficient(m));
  }

  if (basis.empty()) {
    out.status = rhs.is_zero() ? DarbouxSearch::Status::found : DarbouxSearch::Status::inconsistent;
    return out;
  }
  if (A.empty()) {
    // All cofactors and the divergence vanish: every exponent vector works.
    out.status = DarbouxSearch::Status::found;
    out.solution.exponents.assign(basis.size(), GaussRat());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      GaussVector e(basis.size());
      e[k] = GaussRat(1);
      out.solution.nullspace.push_back(std::move(e));
    }
    out.solution.basis = std::move(basis);
    return out;
  }
  LinearSolution sol = solve_linear(A, b);
  if (sol.kind == LinearSolution::Kind::inconsistent) {
    out.status = DarbouxSearch::Status::inconsistent;
    return out;
  }
  CPoly check = divergence(Z, omega);
  for (std::size_t k = 0; k < basis.size(); ++k) check += basis[k].cofactor.scaled(sol.particular[k]);
  require(check.is_zero(), "darboux search: exponents do not cancel the divergence");
  out.status = DarbouxSearch::Status::found;
  out.solution.exponents = std::move(sol.particular);
  out.solution.nullspace = std::move(sol.nullspace);
  out.solution.basis = std::move(basis);
  return out;
}

SymmetryResult symmetry_coefficient(const VectorField& S, const VectorField& Z) {
  check_dim(S.dim(), Z.dim(), "symmetry_coefficient");
  if (Z.is_zero()) throw DomainError("symmetry_coefficient: Z is the zero field");
  const VectorField B = lie_bracket(Z, S);
  SymmetryResult out;
  std::size_t pivot = 0;
  while (Z[pivot].is_zero()) ++pivot;
  auto lambda = exact_divide(B[pivot], Z[pivot]);
  if (!lambda) {
    out.offending.push_back(pivot);
    return out;
  }
  for (std::size_t k = 0; k < Z.dim(); ++k)
    if (B[k] != *lambda * Z[k]) out.offending.push_back(k);
  if (out.offending.empty()) out.lambda = std::move(*lambda);
  return out;
}

CPoly inverse_from_symmetries(const std::vector<VectorField>& S, const VectorField& Z,
                              const VolumeForm& omega) {
  const std::size_t n = Z.dim();
  check_dim(omega.dim(), n, "inverse_from_symmetries");
  if (S.size() + 1 != n)
    throw DomainError("inverse_from_symmetries needs n-1 = " + std::to_string(n - 1) + " symmetries, got " +
                      std::to_string(S.size()));
  for (std::size_t i = 0; i < S.size(); ++i)
    if (!symmetry_coefficient(S[i], Z).lambda)
      throw DomainError("inverse_from_symmetries: field " + std::to_string(i + 1) + " is not a symmetry");
  Form phi = interior_product(to_multivector(Z), omega.as_form());
  for (const auto& Si : S) phi = interior_product(to_multivector(Si), phi);
  CPoly beta = phi.component(0);
  require(is_inverse_multiplier(beta, Z, omega).holds, "inverse_from_symmetries: result is not an inverse multiplier");
  return beta;
}

VectorField combine_frame(const std::vector<VectorField>& frame, const std::vector<CPoly>& g) {
  if (frame.empty()) throw DimensionError("empty frame");
  if (g.size() != frame.size()) throw DimensionError("coefficient count does not match frame size");
  VectorField Z(frame.front().dim());
  for (std::size_t k = 0; k < frame.size(); ++k) Z += g[k] * frame[k];
  return Z;
}

FrameResult inverse_from_frame(const std::vector<VectorField>& frame,
                               const std::vector<std::vector<CPoly>>& structure, const VectorField& Z,
                               const VolumeForm& omega) {
  const std::size_t n = Z.dim();
  check_dim(omega.dim(), n, "inverse_from_frame");
  check_dim(frame.size(), n, "frame size");
  check_dim(structure.size(), n, "structure rows");
  for (const auto& row : structure) check_dim(row.size(), n, "structure columns");

  FrameResult out;
  for (std::size_t i = 0; i < n; ++i) {
    check_dim(frame[i].dim(), n, "frame field");
    VectorField rhs(n);
    for (std::size_t k = 0; k < n; ++k) rhs += structure[i][k] * frame[k];
    if (lie_bracket(Z, frame[i]) != rhs) out.bracket_failures.push_back(i);
  }
  out.bracket_ok = out.bracket_failures.empty();
  out.trace = CPoly(n);
  for (std::size_t k = 0; k < n; ++k) out.trace += structure[k][k];
  out.trace_ok = out.trace.is_zero();

  std::vector<std::vector<CPoly>> M;
  for (const auto& Zi : frame) M.push_back(Zi.components());
  out.beta = poly_determinant(M).scaled(omega.weight());
  out.inverse = is_inverse_multiplier(out.beta, Z, omega);
  if (out.bracket_ok && out.trace_ok)
    require(out.inverse.holds, "inverse_from_frame: theorem hypotheses hold but beta fails");
  return out;
}

FrameResult inverse_from_frame_corollary(const std::vector<VectorField>& frame,
                                         const std::vector<std::vector<std::vector<CPoly>>>& structure,
                                         const std::vector<CPoly>& g, const VolumeForm& omega) {
  const std::size_t n = omega.dim();
  check_dim(frame.size(), n, "frame size");
  check_dim(structure.size(), n, "structure size");
  const VectorField Z = combine_frame(frame, g);

  std::vector<std::size_t> frame_failures;
  for (std::size_t i = 0; i < n; ++i) {
    check_dim(structure[i].size(), n, "structure size");
    for (std::size_t j = 0; j < n; ++j) {
      check_dim(structure[i][j].size(), n, "structure size");
      VectorField rhs(n);
      for (std::size_t k = 0; k < n; ++k) rhs += structure[i][j][k] * frame[k];
      if (lie_bracket(frame[i], frame[j]) != rhs) frame_failures.push_back(i);
    }
  }

  // [Z, Z_j] = sum_k (sum_i g_i f_{ij}^k - Z_j(g_k)) Z_k.
  std::vector<std::vector<CPoly>> derived(n, std::vector<CPoly>(n, CPoly(n)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      CPoly v = -apply_field(frame[j], g[k]);
      for (std::size_t i = 0; i < n; ++i) v += g[i] * structure[i][j][k];
      derived[j][k] = std::move(v);
    }
  FrameResult out = inverse_from_frame(frame, derived, Z, omega);
  if (!frame_failures.empty()) {
    out.bracket_ok = false;
    out.bracket_failures.insert(out.bracket_failures.end(), frame_failures.begin(), frame_failures.end());
  }
  return out;
}

Check divergence_type_check(const VectorField& W, const VectorField& Z, const VolumeForm& omega) {
  const CPoly divW = divergence(W, omega);
  Check c = Check::of(apply_field(Z, divW) + divW * divergence(Z, omega));
  if (c.holds) require(is_last_multiplier(divW, Z, omega).holds, "divergence-type multiplier check");
  return c;
}

VectorField embed_field(const VectorField& Z, std::size_t n, std::size_t offset) {
  std::vector<CPoly> comps(n, CPoly(n));
  for (std::size_t k = 0; k < Z.dim(); ++k) comps.at(k + offset) = Z[k].embedded(n, offset);
  return VectorField(std::move(comps));
}

ProductPair product_combine(const CPoly& beta1, const VectorField& Z1, const CPoly& beta2,
                            const VectorField& Z2) {
  const std::size_t n1 = Z1.dim(), n2 = Z2.dim(), n = n1 + n2;
  if (!is_inverse_multiplier(beta1, Z1, VolumeForm(n1)).holds)
    throw DomainError("product_combine: beta1 is not an inverse multiplier of Z1");
  if (!is_inverse_multiplier(beta2, Z2, VolumeForm(n2)).holds)
    throw DomainError("product_combine: beta2 is not an inverse multiplier of Z2");
  ProductPair out{beta1.embedded(n, 0) * beta2.embedded(n, n1), embed_field(Z1, n, 0) + embed_field(Z2, n, n1)};
  require(is_inverse_multiplier(out.beta, out.field, VolumeForm(n)).holds, "product_combine: product check");
  return out;
}

}  // namespace hlm
