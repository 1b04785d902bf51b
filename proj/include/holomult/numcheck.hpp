#pragma once

#include <cstdint>
#include <vector>

#include "holomult/realify.hpp"

namespace hlm {

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  // Set when a non-finite state stopped the integration early; the last
  // stored state is the last finite one.
  bool truncated = false;
};

// Classical fixed-step RK4 on a real polynomial field. The final step is
// shortened so the trajectory ends exactly at t_end. Throws DomainError for
// step <= 0, t_end <= 0 or non-finite x0.
Trajectory integrate(const RealVectorField& X, const std::vector<double>& x0, double t_end, double step);

// max |f(x(t)) - f(x(0))| over the stored samples.
double first_integral_drift(const RPoly& f, const Trajectory& traj);

/// splitmix64: state += 0x9E3779B97F4A7C15, then
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^ (z >> 31).
/// uniform() maps (next() >> 11) * 2^-53 to [0, 1).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [-box, box].
  double symmetric(double box) { return (2.0 * uniform() - 1.0) * box; }

private:
  std::uint64_t state_;
};

// max |p| over `count` points drawn uniformly from [-box, box]^nvars. For a
// CPoly each coordinate takes a real then an imaginary draw.
double residual_sample(const CPoly& p, std::size_t count, std::uint64_t seed, double box);
double residual_sample(const RPoly& p, std::size_t count, std::uint64_t seed, double box);

// max |p| over the trajectory states.
double residual_along(const RPoly& p, const Trajectory& traj);

}  // namespace hlm
