#include "holomult/poisson.hpp"

namespace hlm {

namespace {

IndexMask pair_mask(std::size_t i, std::size_t j) { return (IndexMask{1} << i) | (IndexMask{1} << j); }

}  // namespace

Bivector::Bivector(Multivector m) : m_(std::move(m)) {
  if (m_.grade() != 2) throw DomainError("bivector needs a grade-2 multivector");
}

CPoly Bivector::operator()(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw DomainError("bivector index out of range");
  if (i == j) return CPoly(dim());
  CPoly v = m_.component(pair_mask(i, j));
  return i < j ? v : -v;
}

void Bivector::add(std::size_t i, std::size_t j, const CPoly& f) {
  if (i >= dim() || j >= dim() || i == j) throw DomainError("bivector entry needs distinct indices in range");
  m_.add(pair_mask(i, j), i < j ? f : -f);
}

CPoly poisson_bracket(const CPoly& f, const CPoly& g, const Bivector& P) {
  check_dim(f.nvars(), P.dim(), "poisson_bracket");
  check_dim(g.nvars(), P.dim(), "poisson_bracket");
  CPoly out(P.dim());
  for (const auto& [m, pij] : P.as_multivector().components()) {
    const auto idx = mask_indices(m);
    const std::size_t i = idx[0], j = idx[1];
    out += pij * (f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i));
  }
  return out;
}

VectorField hamiltonian_field(const CPoly& f, const Bivector& P) {
  const std::size_t n = P.dim();
  check_dim(f.nvars(), n, "hamiltonian_field");
  std::vector<CPoly> comps(n, CPoly(n));
  for (const auto& [m, pij] : P.as_multivector().components()) {
    const auto idx = mask_indices(m);
    const std::size_t i = idx[0], j = idx[1];
    comps[j] += pij * f.derivative(i);
    comps[i] -= pij * f.derivative(j);
  }
  VectorField Z(std::move(comps));
  for (std::size_t k = 0; k < n; ++k) {
    const CPoly zk = CPoly::variable(n, k);
    require(apply_field(Z, zk) == poisson_bracket(f, zk, P), "hamiltonian field: Z_f(z^k) != {f, z^k}");
  }
  return Z;
}

Trivector jacobiator(const Bivector& P) {
  const std::size_t n = P.dim();
  Trivector out(n, n >= 3 ? 3 : n);
  if (n < 3) return out;
  // {P^{ab}, z^c} = sum_l P^{lc} dP^{ab}/dz^l.
  auto bracket_with = [&](std::size_t a, std::size_t b, std::size_t c) {
    CPoly r(n);
    const CPoly pab = P(a, b);
    for (std::size_t l = 0; l < n; ++l) r += P(l, c) * pab.derivative(l);
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        out.add(pair_mask(i, j) | (IndexMask{1} << k),
                bracket_with(i, j, k) + bracket_with(j, k, i) + bracket_with(k, i, j));
  return out;
}

VectorField modular_field(const Bivector& P, const VolumeForm& omega) {
  const std::size_t n = P.dim();
  check_dim(omega.dim(), n, "modular_field");
  std::vector<CPoly> comps(n, CPoly(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) comps[i] += P(i, j).derivative(j);
  VectorField Zw(std::move(comps));
  for (std::size_t k = 0; k < n; ++k)
    require(Zw[k] == divergence(hamiltonian_field(CPoly::variable(n, k), P), omega),
            "modular field: Z_omega(z^k) != div Z_{z^k}");
  return Zw;
}

FieldCheck is_unimodular_with(const Bivector& P, const CPoly& h, const VolumeForm& omega) {
  return FieldCheck::of(modular_field(P, omega) - hamiltonian_field(h, P));
}

CPoly hamiltonian_lm_residual(const CPoly& alpha, const CPoly& f, const Bivector& P, const VolumeForm& omega,
                              const std::optional<CPoly>& h) {
  const VectorField Zw = modular_field(P, omega);
  CPoly r = alpha * apply_field(Zw, f) - poisson_bracket(alpha, f, P);
  require(r == is_last_multiplier(alpha, hamiltonian_field(f, P), omega).residual,
          "hamiltonian_lm_residual: disagrees with the last-multiplier residual of Z_f");
  if (h && is_unimodular_with(P, *h, omega).holds)
    require(r == alpha * poisson_bracket(*h, f, P) - poisson_bracket(alpha, f, P),
            "hamiltonian_lm_residual: unimodular form disagrees");
  return r;
}

CPoly self_multiplier_residual(const CPoly& f, const Bivector& P, const VolumeForm& omega) {
  return apply_field(modular_field(P, omega), f);
}

Bivector lie_derivative(const VectorField& X, const Bivector& P) {
  const std::size_t n = P.dim();
  check_dim(X.dim(), n, "lie_derivative");
  Bivector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      CPoly v = apply_field(X, P(i, j));
      for (std::size_t k = 0; k < n; ++k) v -= P(k, j) * X[i].derivative(k) + P(i, k) * X[j].derivative(k);
      out.add(i, j, v);
    }
  return out;
}

CPoly triple_condition(const Bivector& P, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = P.dim();
  CPoly out(n);
  for (std::size_t l = 0; l < n; ++l) {
    if (l == i || l == j || l == k) continue;
    out += (P(l, i) * P(j, k) + P(l, j) * P(k, i) + P(l, k) * P(i, j)).derivative(l);
  }
  return out;
}

ExactnessResult exactness_check(const Bivector& P, const VolumeForm& omega) {
  const std::size_t n = P.dim();
  ExactnessResult out;
  out.curl = to_field(curl(P.as_multivector(), omega));
  out.exact = out.curl.is_zero();
  const VectorField Zw = modular_field(P, omega);
  out.modular_zero = Zw.is_zero();
  require(out.curl == Zw, "exactness: curl of P differs from the modular field");
  out.poisson = jacobiator(P).is_zero();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        CPoly t = triple_condition(P, i, j, k);
        if (!t.is_zero()) out.triple_zero = false;
        out.triple_residuals.push_back(std::move(t));
      }
  if (out.exact && out.poisson) require(out.triple_zero, "exactness: triple condition fails for an exact Poisson P");
  return out;
}

FieldCheck bivector_lm_check(const CPoly& alpha, const Bivector& P, const VolumeForm& omega) {
  if (alpha.is_zero()) throw DomainError("bivector_lm_check: alpha must be nonzero");
  const std::size_t n = P.dim();
  check_dim(alpha.nvars(), n, "bivector_lm_check");
  std::vector<CPoly> comps(n, CPoly(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) comps[i] += (alpha * P(i, j)).derivative(j);
  FieldCheck c = FieldCheck::of(VectorField(std::move(comps)));

  // Form path: d(alpha flat P) = flat(D_omega(alpha P)).
  const Bivector aP = alpha * P;
  const Form d = partial_d(flat(aP.as_multivector(), omega));
  require(to_field(sharp(d, omega)) == c.residual, "bivector_lm_check: form path disagrees");
  // Weighted modular field, cleared by alpha: alpha Z_{alpha omega}(z^i) = div(alpha Z_{z^i}).
  for (std::size_t i = 0; i < n; ++i)
    require(divergence(alpha * hamiltonian_field(CPoly::variable(n, i), P), omega) == c.residual[i],
            "bivector_lm_check: weighted modular path disagrees");
  return c;
}

Dim4Result dim4_exactness(const Bivector& P, const VolumeForm& omega,
                          const std::optional<std::vector<GaussRat>>& vanishing_point) {
  if (P.dim() != 4) throw DimensionError("dim4_exactness needs n = 4, got " + std::to_string(P.dim()));
  check_dim(omega.dim(), 4, "dim4_exactness");
  Dim4Result out;
  out.pfaffian = P(0, 1) * P(2, 3) - P(0, 2) * P(1, 3) + P(0, 3) * P(1, 2);
  out.pfaffian_zero = out.pfaffian.is_zero();
  const Form phi = flat(P.as_multivector(), omega);
  const GaussRat c = omega.weight();
  require(wedge(phi, phi) == omega.as_form().scaled(out.pfaffian.scaled(GaussRat(2) * c)),
          "dim4_exactness: iota_P omega ^ iota_P omega != 2 c^2 pf dz^1234");
  out.dclosed = partial_d(phi).is_zero();
  out.exact = curl(P.as_multivector(), omega).is_zero();
  require(out.dclosed == out.exact, "dim4_exactness: d-closedness and curl disagree");
  out.poisson = jacobiator(P).is_zero();
  if (vanishing_point) {
    out.hypothesis_met = true;
    for (const auto& [m, f] : P.as_multivector().components())
      if (!evaluate_exact(f, *vanishing_point).is_zero()) out.hypothesis_met = false;
  }
  if (out.hypothesis_met)
    require((out.pfaffian_zero && out.dclosed) == (out.exact && out.poisson),
            "dim4_exactness: four-dimensional characterization disagrees");
  return out;
}

Check exact_hamiltonian_check(const CPoly& h, const Bivector& P, const HoloMetric& g) {
  if (!g.is_euclidean()) throw DomainError("exact_hamiltonian_check needs the euclidean metric");
  check_dim(g.dim(), P.dim(), "exact_hamiltonian_check");
  const VolumeForm omega = g.volume();
  const VectorField D = to_field(curl(P.as_multivector(), omega));
  CPoly r = apply_field(D, h);
  require(r == metric_pair(g, D, gradient(h, g)), "exact_hamiltonian_check: metric form disagrees");
  require(r == divergence(hamiltonian_field(h, P), omega), "exact_hamiltonian_check: div Z_h disagrees");
  return Check::of(std::move(r));
}

}  // namespace hlm
