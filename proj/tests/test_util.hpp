#pragma once

// Small helpers shared by the unit tests: seeded state generators and
// field builders. Generators are hand-rolled so failures reproduce from the seed.

#include <cmath>
#include <cstdint>
#include <random>

#include "roe2d/euler.hpp"
#include "roe2d/grid.hpp"

namespace roe2d::test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
  }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  PrimitiveState prim() {
    return {log_uniform(0.05, 20.0), uniform(-5.0, 5.0), uniform(-5.0, 5.0),
            log_uniform(0.05, 20.0)};
  }
  ConservedState cons(const GasModel& gas = {}) { return prim_to_cons(prim(), gas); }

 private:
  std::mt19937_64 rng_;
};

inline double rel_err(const Vec4& a, const Vec4& b) {
  return norm2(sub(a, b)) / std::max(1.0, norm2(b));
}

/// Every interior cell set to q.
inline Field2D uniform_field(int nx, int ny, double dx, double dy, const ConservedState& q) {
  Field2D f(nx, ny, dx, dy);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) f.at(i, j) = q;
  return f;
}

inline BoundarySpec all_sides(BoundaryCondition bc) {
  BoundarySpec s;
  for (auto& side : s.sides) side = bc;
  return s;
}

}  // namespace roe2d::test
