#pragma once

// State representations and pointwise physics of the 2D Euler equations for
// an ideal gas. Everything here is a pure function of its arguments.

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace roe2d {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;

/// Flux through a face, laid out like ConservedState (mass, x-mom, y-mom, energy).
using FluxVector = Vec4;

struct GasModel {
  double gamma = 1.4;
};

struct PrimitiveState {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
};

struct ConservedState {
  double rho = 1.0;
  double mx = 0.0;
  double my = 0.0;
  double E = 1.0;

  [[nodiscard]] Vec4 as_vec() const { return {rho, mx, my, E}; }
  static ConservedState from_vec(const Vec4& a) { return {a[0], a[1], a[2], a[3]}; }

  ConservedState& operator+=(const ConservedState& o) {
    rho += o.rho;
    mx += o.mx;
    my += o.my;
    E += o.E;
    return *this;
  }
  ConservedState& operator-=(const ConservedState& o) {
    rho -= o.rho;
    mx -= o.mx;
    my -= o.my;
    E -= o.E;
    return *this;
  }
  ConservedState& operator*=(double s) {
    rho *= s;
    mx *= s;
    my *= s;
    E *= s;
    return *this;
  }
  friend ConservedState operator+(ConservedState a, const ConservedState& b) { return a += b; }
  friend ConservedState operator-(ConservedState a, const ConservedState& b) { return a -= b; }
  friend ConservedState operator*(double s, ConservedState a) { return a *= s; }
  friend bool operator==(const ConservedState&, const ConservedState&) = default;
};

/// Where a nonphysical state was met. Fields that do not apply stay at -1.
struct CellLocation {
  int i = -1;
  int j = -1;
  long step = -1;
  int stage = -1;
  double time = std::numeric_limits<double>::quiet_NaN();

  [[nodiscard]] std::string describe() const;
};

/// Raised when a state leaves the admissible set (rho <= 0, e <= 0, NaN).
class NonphysicalStateError : public std::runtime_error {
 public:
  explicit NonphysicalStateError(const std::string& what, CellLocation loc = {});

  [[nodiscard]] const CellLocation& location() const { return loc_; }
  [[nodiscard]] const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
  CellLocation loc_;
};

// --- validity -------------------------------------------------------------

[[nodiscard]] bool is_physical(const PrimitiveState& w);
[[nodiscard]] bool is_physical(const ConservedState& q, const GasModel& gas);

/// Throws NonphysicalStateError if rho <= 0, p <= 0 or a component is not finite.
void validate_state(const PrimitiveState& w);

// --- conversions ----------------------------------------------------------

[[nodiscard]] ConservedState prim_to_cons(const PrimitiveState& w, const GasModel& gas);
[[nodiscard]] PrimitiveState cons_to_prim(const ConservedState& q, const GasModel& gas);

/// Conversion without validation, for hot loops that check admissibility separately.
[[nodiscard]] inline PrimitiveState cons_to_prim_unchecked(const ConservedState& q,
                                                           const GasModel& gas) {
  const double u = q.mx / q.rho;
  const double v = q.my / q.rho;
  const double p = (gas.gamma - 1.0) * (q.E - 0.5 * (q.mx * u + q.my * v));
  return {q.rho, u, v, p};
}

[[nodiscard]] inline ConservedState prim_to_cons_unchecked(const PrimitiveState& w,
                                                           const GasModel& gas) {
  const double mx = w.rho * w.u;
  const double my = w.rho * w.v;
  return {w.rho, mx, my, w.p / (gas.gamma - 1.0) + 0.5 * (mx * w.u + my * w.v)};
}

[[nodiscard]] double pressure(const ConservedState& q, const GasModel& gas);

/// H = (E + p) / rho
[[nodiscard]] double total_enthalpy(const ConservedState& q, const GasModel& gas);

/// c = sqrt(gamma p / rho)
[[nodiscard]] double sound_speed(const PrimitiveState& w, const GasModel& gas);

/// s = ln(p / rho^gamma)
[[nodiscard]] double entropy_scalar(const PrimitiveState& w, const GasModel& gas);

// --- fluxes ---------------------------------------------------------------

[[nodiscard]] FluxVector physical_flux_x(const ConservedState& q, const GasModel& gas);
[[nodiscard]] FluxVector physical_flux_y(const ConservedState& q, const GasModel& gas);

/// Analytic Jacobian df/dq of the x-flux.
[[nodiscard]] Mat4 flux_jacobian_x(const ConservedState& q, const GasModel& gas);

/// Same Jacobian written in terms of (u, v, H), which is how it is evaluated at a Roe mean.
[[nodiscard]] Mat4 flux_jacobian_x(double u, double v, double H, const GasModel& gas);

// --- frame rotation -------------------------------------------------------
// (u, v) -> (v, -u) maps the y-normal problem onto an x-normal one.

[[nodiscard]] inline ConservedState rotate_to_x(const ConservedState& q) {
  return {q.rho, q.my, -q.mx, q.E};
}
[[nodiscard]] inline ConservedState rotate_from_x(const ConservedState& q) {
  return {q.rho, -q.my, q.mx, q.E};
}
[[nodiscard]] inline PrimitiveState rotate_to_x(const PrimitiveState& w) {
  return {w.rho, w.v, -w.u, w.p};
}
[[nodiscard]] inline PrimitiveState rotate_from_x(const PrimitiveState& w) {
  return {w.rho, -w.v, w.u, w.p};
}
[[nodiscard]] inline FluxVector rotate_from_x(const FluxVector& f) {
  return {f[0], -f[2], f[1], f[3]};
}

// --- small dense helpers --------------------------------------------------

[[nodiscard]] Vec4 matvec(const Mat4& a, const Vec4& x);
[[nodiscard]] Mat4 matmul(const Mat4& a, const Mat4& b);
[[nodiscard]] double norm2(const Vec4& a);
[[nodiscard]] Vec4 sub(const Vec4& a, const Vec4& b);

}  // namespace roe2d
