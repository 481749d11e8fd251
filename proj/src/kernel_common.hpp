#pragma once

// Arithmetic shared by the serial and OpenMP kernels. Anything that decides
// a bit of the result lives here so both paths evaluate it identically.

#include <string>

#include "roe2d/kernels.hpp"

namespace roe2d::detail {

inline bool is_zero(const PrimitiveState& s) {
  return s.rho == 0.0 && s.u == 0.0 && s.v == 0.0 && s.p == 0.0;
}

/// Conserved face value of a cell. A flat cell hands over its own state
/// unchanged so piecewise-constant regions never see a round-off round trip.
inline ConservedState face_value(const ConservedState& q, const PrimitiveState& w,
                                 const PrimitiveState& slope, double h, const GasModel& gas) {
  if (is_zero(slope)) return q;
  return prim_to_cons_unchecked(extrapolate(w, slope, h), gas);
}

inline FluxVector flux_x(const ConservedState& ql, const ConservedState& qr,
                         const SchemeSettings& s) {
  return interface_flux(ql, qr, s.model, s.gas);
}

/// y-normal face: solved as an x-normal problem in the rotated frame.
inline FluxVector flux_y(const ConservedState& ql, const ConservedState& qr,
                         const SchemeSettings& s) {
  return rotate_from_x(interface_flux(rotate_to_x(ql), rotate_to_x(qr), s.model, s.gas));
}

inline ConservedState divergence_x(const FluxVector& gl, const FluxVector& gr, double dx) {
  return {-(gr[0] - gl[0]) / dx, -(gr[1] - gl[1]) / dx, -(gr[2] - gl[2]) / dx,
          -(gr[3] - gl[3]) / dx};
}

inline void subtract_divergence_y(ConservedState& r, const FluxVector& gl, const FluxVector& gr,
                                  double dy) {
  r.rho = r.rho - (gr[0] - gl[0]) / dy;
  r.mx = r.mx - (gr[1] - gl[1]) / dy;
  r.my = r.my - (gr[2] - gl[2]) / dy;
  r.E = r.E - (gr[3] - gl[3]) / dy;
}

inline ConservedState euler_cell(const ConservedState& q, const ConservedState& r, double dt) {
  return {q.rho + dt * r.rho, q.mx + dt * r.mx, q.my + dt * r.my, q.E + dt * r.E};
}

inline ConservedState ssp2_cell(const ConservedState& q0, const ConservedState& q1,
                                const ConservedState& r, double dt) {
  return {0.5 * q0.rho + 0.5 * (q1.rho + dt * r.rho), 0.5 * q0.mx + 0.5 * (q1.mx + dt * r.mx),
          0.5 * q0.my + 0.5 * (q1.my + dt * r.my), 0.5 * q0.E + 0.5 * (q1.E + dt * r.E)};
}

[[noreturn]] inline void throw_face_error(const NonphysicalStateError& e, char dir, int i, int j) {
  CellLocation loc;
  loc.i = i;
  loc.j = j;
  throw NonphysicalStateError(e.reason() + " (" + dir + "-face below/left of cell)", loc);
}

}  // namespace roe2d::detail
