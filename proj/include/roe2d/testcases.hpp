#pragma once

// Initial/boundary data for the carbuncle and low-Mach test battery, plus the
// exact solutions (normal shock, Riemann problem) the tests check against.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "roe2d/config.hpp"
#include "roe2d/euler.hpp"
#include "roe2d/grid.hpp"

namespace roe2d {

enum class Quantity {
  density,
  x_velocity,
  transverse_velocity,  // v
  pressure,
  entropy,
  vertical_momentum,  // rho v
};

[[nodiscard]] std::string_view to_string(Quantity q);
[[nodiscard]] Quantity parse_quantity(std::string_view name);
[[nodiscard]] double quantity_value(const ConservedState& q, Quantity what, const GasModel& gas);

struct NoiseSpec {
  double amplitude = 0.0;
  std::uint64_t seed = 0;
  /// rho, u, v, p
  std::array<bool, 4> targets = {true, true, true, true};
};

/// Uniform [-A, A] perturbation of the targeted primitive variables of every
/// interior cell, drawn in row-major order. A draw that would make a cell
/// nonphysical is redrawn.
void apply_noise(Field2D& field, const NoiseSpec& spec, const GasModel& gas);

struct TestCase {
  std::string name;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  int nx = 1, ny = 1;
  BoundarySpec bc;
  std::function<void(Field2D&, const GasModel&)> init;
  NoiseSpec noise;
  double t_end = 1.0;
  Quantity default_quantity = Quantity::density;
  /// 0 = any order accepted.
  int required_order = 0;

  [[nodiscard]] bool is_1d() const { return ny == 1; }
};

/// The registered case names, in a stable order.
[[nodiscard]] const std::vector<std::string>& case_names();

/// Test families as (family, variant names) for listing.
[[nodiscard]] std::vector<std::pair<std::string, std::vector<std::string>>> case_families();

/// Throws std::invalid_argument for an unknown name.
[[nodiscard]] TestCase make_case(std::string_view name, const GasModel& gas = {});

void apply_overrides(TestCase& tc, const CaseOverrides& o);

/// Grid, initial data and seeded noise. Ghost cells are filled at t = 0.
[[nodiscard]] Field2D initial_field(const TestCase& tc, const GasModel& gas, std::uint64_t seed);

// --- exact solutions ------------------------------------------------------

/// Downstream state of a normal shock that the upstream gas enters with Mach
/// number `mach` relative to the shock. The shock speed is upstream.u - mach * c,
/// so upstream.u = mach * c gives a stationary shock. Throws for mach <= 1.
[[nodiscard]] PrimitiveState rankine_hugoniot_downstream(const PrimitiveState& upstream, double mach,
                                                         const GasModel& gas);

struct ExactRiemannSolution {
  PrimitiveState left, right;
  GasModel gas;
  double p_star = 0.0;
  double u_star = 0.0;

  /// Self-similar solution at x/t = xi.
  [[nodiscard]] PrimitiveState sample(double xi) const;
};

/// Exact solution of the 1D Riemann problem (normal velocity u, v passively
/// advected). Throws NonphysicalStateError if the data generate vacuum.
[[nodiscard]] ExactRiemannSolution solve_exact_riemann(const PrimitiveState& left,
                                                       const PrimitiveState& right,
                                                       const GasModel& gas);

[[nodiscard]] inline PrimitiveState exact_riemann(const PrimitiveState& left,
                                                  const PrimitiveState& right, const GasModel& gas,
                                                  double xi) {
  return solve_exact_riemann(left, right, gas).sample(xi);
}

}  // namespace roe2d
