#pragma once

// Per-stage data-parallel kernels.
//
// Two implementations share one contract and must agree bit for bit:
//   roe2d::kernels::serial  straightforward whole-field passes; the reference
//   roe2d::kernels          OpenMP over rows / face rows with per-thread buffers
// Every face flux and every cell update is computed by the same inline
// arithmetic in both, so results do not depend on the thread count.

#include <span>

#include "roe2d/euler.hpp"
#include "roe2d/grid.hpp"
#include "roe2d/roe_flux.hpp"

namespace roe2d {

struct SchemeSettings {
  ViscosityModel model;
  GasModel gas;
  int order = 1;
};

struct KernelStats {
  long reconstruction_fallbacks = 0;
};

namespace kernels {

/// rhs(i,j) = -(Gx(i+1/2) - Gx(i-1/2))/dx - (Gy(j+1/2) - Gy(j-1/2))/dy for interior cells,
/// stored row-major with length nx*ny. Ghost cells of q must be filled.
void flux_divergence(const Field2D& q, const SchemeSettings& s, std::span<ConservedState> rhs,
                     KernelStats* stats = nullptr);

/// out = q + dt * rhs on interior cells.
void euler_update(const Field2D& q, std::span<const ConservedState> rhs, double dt, Field2D& out);

/// out = 1/2 q0 + 1/2 (q1 + dt * rhs) on interior cells.
void ssp2_combine(const Field2D& q0, const Field2D& q1, std::span<const ConservedState> rhs,
                  double dt, Field2D& out);

/// First interior cell in row-major order that is not admissible, as {i, j}; {-1, -1} if none.
[[nodiscard]] std::pair<int, int> first_invalid_cell(const Field2D& q, const GasModel& gas);

}  // namespace kernels

namespace kernels::serial {

void flux_divergence(const Field2D& q, const SchemeSettings& s, std::span<ConservedState> rhs,
                     KernelStats* stats = nullptr);
void euler_update(const Field2D& q, std::span<const ConservedState> rhs, double dt, Field2D& out);
void ssp2_combine(const Field2D& q0, const Field2D& q1, std::span<const ConservedState> rhs,
                  double dt, Field2D& out);
[[nodiscard]] std::pair<int, int> first_invalid_cell(const Field2D& q, const GasModel& gas);

}  // namespace kernels::serial

/// Number of threads the OpenMP kernels will use (1 without OpenMP).
[[nodiscard]] int kernel_threads();

}  // namespace roe2d
