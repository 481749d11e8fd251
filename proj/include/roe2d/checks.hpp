#pragma once

// Randomised property checks of the flux function. Each returns the worst
// measured error next to the tolerance it is judged against; the CLI's
// `verify` subcommand and the acceptance suite print them.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "roe2d/euler.hpp"
#include "roe2d/roe_flux.hpp"

namespace roe2d::checks {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

/// Deterministic generator of admissible states: log-uniform rho, p in
/// [0.1, 10], u, v uniform in [-3, 3].
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);
  PrimitiveState primitive();
  ConservedState conserved(const GasModel& gas) { return prim_to_cons(primitive(), gas); }

 private:
  std::mt19937_64 rng_;
};

/// |f(qr) - f(ql) - R Lambda L (qr - ql)| / (|f(qr)| + |f(ql)|) over n random pairs.
CheckResult roe_property(int n, std::uint64_t seed, const GasModel& gas = {});
/// max |L R - I| at n random Roe means.
CheckResult left_right_inverse(int n, std::uint64_t seed, const GasModel& gas = {});
/// max |A r_k - lambda_k r_k| / (|A| |r_k|) with the analytic Jacobian at the Roe mean.
CheckResult right_eigenvectors(int n, std::uint64_t seed, const GasModel& gas = {});
/// Analytic Jacobian at the Roe mean against central differences of the physical flux.
CheckResult jacobian_vs_finite_difference(int n, std::uint64_t seed, const GasModel& gas = {});
/// interface_flux(q, q) == f(q) for every model.
CheckResult consistency(int n, std::uint64_t seed, const GasModel& gas = {});
/// Blend viscosities scale like M^(1-beta) as M -> 0 and stay in a fixed ratio.
std::vector<CheckResult> mach_scaling(double phi = 5.0);
/// Blends at beta = 0 / 1 reproduce the low / high dissipation speeds.
CheckResult endpoint_reduction(int n, std::uint64_t seed, double phi = 5.0);
/// beta = 0 on contacts, 1 on the Mach 20 normal shock, in [0, 1] on random pairs.
std::vector<CheckResult> indicator(int n, std::uint64_t seed, const GasModel& gas = {});
/// Harten fix: >= delta / 2 everywhere and |lambda| for |lambda| >= delta.
CheckResult harten(int n, std::uint64_t seed);

/// Everything above with the default sample sizes.
std::vector<CheckResult> all(std::uint64_t seed);

}  // namespace roe2d::checks
