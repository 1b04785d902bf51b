#include "holomult/numcheck.hpp"

#include <algorithm>
#include <cmath>

namespace hlm {

namespace {

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

Trajectory integrate(const RealVectorField& X, const std::vector<double>& x0, double t_end, double step) {
  if (!(step > 0) || !std::isfinite(step)) throw DomainError("integrate: step must be positive");
  if (!(t_end > 0) || !std::isfinite(t_end)) throw DomainError("integrate: t_end must be positive");
  if (x0.size() != X.dim())
    throw DimensionError("integrate: initial state has " + std::to_string(x0.size()) + " entries, field has " +
                         std::to_string(X.dim()));
  if (!all_finite(x0)) throw DomainError("integrate: initial state is not finite");

  std::vector<CompiledPoly<double>> f;
  for (const auto& c : X.components()) f.emplace_back(c);
  const std::size_t d = X.dim();
  auto rhs = [&](const std::vector<double>& x, std::vector<double>& out) {
    for (std::size_t a = 0; a < d; ++a) out[a] = f[a](x);
  };

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(x0);
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / step - 1e-9));
  std::vector<double> x = x0, k1(d), k2(d), k3(d), k4(d), tmp(d);
  for (std::size_t s = 0; s < steps; ++s) {
    const double t = static_cast<double>(s) * step;
    const double h = std::min(step, t_end - t);
    rhs(x, k1);
    for (std::size_t a = 0; a < d; ++a) tmp[a] = x[a] + 0.5 * h * k1[a];
    rhs(tmp, k2);
    for (std::size_t a = 0; a < d; ++a) tmp[a] = x[a] + 0.5 * h * k2[a];
    rhs(tmp, k3);
    for (std::size_t a = 0; a < d; ++a) tmp[a] = x[a] + h * k3[a];
    rhs(tmp, k4);
    for (std::size_t a = 0; a < d; ++a) tmp[a] = x[a] + h / 6.0 * (k1[a] + 2.0 * k2[a] + 2.0 * k3[a] + k4[a]);
    if (!all_finite(tmp)) {
      traj.truncated = true;
      break;
    }
    x = tmp;
    traj.times.push_back(s + 1 == steps ? t_end : static_cast<double>(s + 1) * step);
    traj.states.push_back(x);
  }
  return traj;
}

double first_integral_drift(const RPoly& f, const Trajectory& traj) {
  if (traj.states.empty()) throw DomainError("first_integral_drift: empty trajectory");
  const CompiledPoly<double> cf(f);
  const double f0 = cf(traj.states.front());
  double drift = 0.0;
  for (const auto& s : traj.states) drift = std::max(drift, std::abs(cf(s) - f0));
  return drift;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double residual_sample(const CPoly& p, std::size_t count, std::uint64_t seed, double box) {
  if (count == 0) throw DomainError("residual_sample: count must be >= 1");
  const CompiledPoly<std::complex<double>> cp(p);
  SplitMix64 rng(seed);
  std::vector<std::complex<double>> z(p.nvars());
  double worst = 0.0;
  for (std::size_t s = 0; s < count; ++s) {
    for (auto& v : z) {
      const double re = rng.symmetric(box);
      v = {re, rng.symmetric(box)};
    }
    worst = std::max(worst, std::abs(cp(z)));
  }
  return worst;
}

double residual_sample(const RPoly& p, std::size_t count, std::uint64_t seed, double box) {
  if (count == 0) throw DomainError("residual_sample: count must be >= 1");
  const CompiledPoly<double> cp(p);
  SplitMix64 rng(seed);
  std::vector<double> x(p.nvars());
  double worst = 0.0;
  for (std::size_t s = 0; s < count; ++s) {
    for (auto& v : x) v = rng.symmetric(box);
    worst = std::max(worst, std::abs(cp(x)));
  }
  return worst;
}

double residual_along(const RPoly& p, const Trajectory& traj) {
  const CompiledPoly<double> cp(p);
  double worst = 0.0;
  for (const auto& s : traj.states) worst = std::max(worst, std::abs(cp(s)));
  return worst;
}

}  // namespace hlm
