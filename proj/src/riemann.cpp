#include "holomult/riemann.hpp"

namespace hlm {

HoloMetric::HoloMetric(GaussMatrix g) : g_(std::move(g)) {
  const std::size_t n = g_.size();
  if (n == 0) throw DomainError("metric needs dimension >= 1");
  for (const auto& row : g_)
    if (row.size() != n) throw DimensionError("metric matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g_[i][j] != g_[j][i])
        throw DomainError("metric is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  ginv_ = mat_inverse(g_);
  if (ginv_.empty()) throw DomainError("metric is singular");
  const GaussRat det = determinant(g_);
  auto c = gauss_sqrt(det);
  if (!c)
    throw DomainError("det g = " + det.to_string() +
                      " has no square root in Q(i); rescale the metric so its determinant is a square");
  c_ = *c;
}

HoloMetric HoloMetric::euclidean(std::size_t n) {
  GaussMatrix g(n, GaussVector(n));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = GaussRat(1);
  return HoloMetric(std::move(g));
}

bool HoloMetric::is_euclidean() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (g_[i][j] != GaussRat(i == j ? 1 : 0)) return false;
  return true;
}

CPoly metric_pair(const HoloMetric& g, const VectorField& X, const VectorField& Y) {
  check_dim(X.dim(), g.dim(), "metric_pair");
  check_dim(Y.dim(), g.dim(), "metric_pair");
  CPoly out(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (!g.g()[i][j].is_zero()) out += (X[i] * Y[j]).scaled(g.g()[i][j]);
  return out;
}

VectorField gradient(const CPoly& f, const HoloMetric& g) {
  const std::size_t n = g.dim();
  check_dim(f.nvars(), n, "gradient");
  std::vector<CPoly> df;
  for (std::size_t i = 0; i < n; ++i) df.push_back(f.derivative(i));
  std::vector<CPoly> comps(n, CPoly(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) comps[j] += df[i].scaled(g.ginv()[i][j]);
  VectorField grad(std::move(comps));
  // Defining identity g(d_k, grad f) = d_k f.
  for (std::size_t k = 0; k < n; ++k)
    require(metric_pair(g, VectorField::coordinate(n, k), grad) == df[k], "gradient defining identity");
  return grad;
}

CPoly laplacian(const CPoly& f, const HoloMetric& g) { return divergence(gradient(f, g), g.volume()); }

CPoly gradient_lm_residual(const CPoly& alpha, const CPoly& f, const HoloMetric& g) {
  check_dim(alpha.nvars(), g.dim(), "gradient_lm_residual");
  return metric_pair(g, gradient(f, g), gradient(alpha, g)) + alpha * laplacian(f, g);
}

Check conformal_equivalence(const CPoly& f, const VectorField& Z) {
  if (f.is_zero()) throw DomainError("conformal_equivalence: conformal factor must be nonzero");
  return Check::of(apply_field(Z, f));
}

}  // namespace hlm
