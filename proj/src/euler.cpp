#include "roe2d/euler.hpp"

#include <sstream>

namespace roe2d {

std::string CellLocation::describe() const {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "cell (" << i << ", " << j << ")";
  if (step >= 0) os << ", step " << step;
  if (stage >= 0) os << ", stage " << stage;
  if (!std::isnan(time)) os << ", t=" << time;
  return os.str();
}

NonphysicalStateError::NonphysicalStateError(const std::string& what, CellLocation loc)
    : std::runtime_error(loc.i >= 0 || loc.j >= 0 ? what + " at " + loc.describe() : what),
      reason_(what),
      loc_(loc) {}

bool is_physical(const PrimitiveState& w) {
  return std::isfinite(w.rho) && std::isfinite(w.u) && std::isfinite(w.v) &&
         std::isfinite(w.p) && w.rho > 0.0 && w.p > 0.0;
}

bool is_physical(const ConservedState& q, const GasModel& gas) {
  if (!(std::isfinite(q.rho) && std::isfinite(q.mx) && std::isfinite(q.my) &&
        std::isfinite(q.E)))
    return false;
  if (!(q.rho > 0.0)) return false;
  return pressure(q, gas) > 0.0;
}

void validate_state(const PrimitiveState& w) {
  if (!(std::isfinite(w.rho) && std::isfinite(w.u) && std::isfinite(w.v) &&
        std::isfinite(w.p)))
    throw NonphysicalStateError("non-finite state");
  if (!(w.rho > 0.0)) throw NonphysicalStateError("nonpositive density");
  if (!(w.p > 0.0)) throw NonphysicalStateError("nonpositive pressure");
}

ConservedState prim_to_cons(const PrimitiveState& w, const GasModel& gas) {
  validate_state(w);
  return prim_to_cons_unchecked(w, gas);
}

PrimitiveState cons_to_prim(const ConservedState& q, const GasModel& gas) {
  if (!(std::isfinite(q.rho) && std::isfinite(q.mx) && std::isfinite(q.my) &&
        std::isfinite(q.E)))
    throw NonphysicalStateError("non-finite state");
  if (!(q.rho > 0.0)) throw NonphysicalStateError("negative density");
  const PrimitiveState w = cons_to_prim_unchecked(q, gas);
  if (!(w.p > 0.0)) throw NonphysicalStateError("negative internal energy");
  return w;
}

double pressure(const ConservedState& q, const GasModel& gas) {
  return (gas.gamma - 1.0) * (q.E - 0.5 * (q.mx * q.mx + q.my * q.my) / q.rho);
}

double total_enthalpy(const ConservedState& q, const GasModel& gas) {
  const PrimitiveState w = cons_to_prim(q, gas);
  return (q.E + w.p) / q.rho;
}

double sound_speed(const PrimitiveState& w, const GasModel& gas) {
  validate_state(w);
  return std::sqrt(gas.gamma * w.p / w.rho);
}

double entropy_scalar(const PrimitiveState& w, const GasModel& gas) {
  validate_state(w);
  return std::log(w.p) - gas.gamma * std::log(w.rho);
}

FluxVector physical_flux_x(const ConservedState& q, const GasModel& gas) {
  const double u = q.mx / q.rho;
  const double p = pressure(q, gas);
  return {q.mx, q.mx * u + p, q.my * u, (q.E + p) * u};
}

FluxVector physical_flux_y(const ConservedState& q, const GasModel& gas) {
  const double v = q.my / q.rho;
  const double p = pressure(q, gas);
  return {q.my, q.mx * v, q.my * v + p, (q.E + p) * v};
}

Mat4 flux_jacobian_x(double u, double v, double H, const GasModel& gas) {
  const double g1 = gas.gamma - 1.0;
  const double half_q2 = 0.5 * (u * u + v * v);
  return {{
      {0.0, 1.0, 0.0, 0.0},
      {g1 * half_q2 - u * u, (3.0 - gas.gamma) * u, -g1 * v, g1},
      {-u * v, v, u, 0.0},
      {u * (g1 * half_q2 - H), H - g1 * u * u, -g1 * u * v, gas.gamma * u},
  }};
}

Mat4 flux_jacobian_x(const ConservedState& q, const GasModel& gas) {
  const double H = total_enthalpy(q, gas);
  return flux_jacobian_x(q.mx / q.rho, q.my / q.rho, H, gas);
}

Vec4 matvec(const Mat4& a, const Vec4& x) {
  Vec4 y{};
  for (int r = 0; r < 4; ++r)
    y[r] = a[r][0] * x[0] + a[r][1] * x[1] + a[r][2] * x[2] + a[r][3] * x[3];
  return y;
}

Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k)
      for (int s = 0; s < 4; ++s) c[r][k] += a[r][s] * b[s][k];
  return c;
}

double norm2(const Vec4& a) {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
}

Vec4 sub(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

}  // namespace roe2d
