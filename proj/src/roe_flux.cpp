#include "roe2d/roe_flux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace roe2d {

namespace {

// sign(0) = +1: only |lambda| reaches the viscosity, so the choice just keeps
// the high-dissipation floor active at stagnation.
inline double upwind_sign(double u) { return u < 0.0 ? -1.0 : 1.0; }

// Magnitude of the acoustic correction, i.e. lambda~_{1,4} = u~ -+ a.
inline double acoustic_speed(const RoeAverage& avg, WaveModel mode, double phi, double beta) {
  switch (mode) {
    case WaveModel::standard:
    case WaveModel::high_diss:
      return avg.c;
    case WaveModel::low_diss:
      return std::min(phi * std::abs(avg.u), avg.c);
    case WaveModel::blend_geometric: {
      const double low = std::min(phi * std::abs(avg.u), avg.c);
      return std::pow(avg.c, beta) * std::pow(low, 1.0 - beta);
    }
    case WaveModel::blend_arithmetic: {
      const double low = std::min(phi * std::abs(avg.u), avg.c);
      return beta * avg.c + (1.0 - beta) * low;
    }
  }
  return avg.c;
}

inline double advective_speed(const RoeAverage& avg, WaveModel mode, double phi, double beta) {
  switch (mode) {
    case WaveModel::standard:
    case WaveModel::low_diss:
      return avg.u;
    case WaveModel::high_diss:
      return upwind_sign(avg.u) * std::max(avg.c / phi, std::abs(avg.u));
    case WaveModel::blend_geometric: {
      const double high = std::max(avg.c / phi, std::abs(avg.u));
      return upwind_sign(avg.u) * std::pow(high, beta) * std::pow(std::abs(avg.u), 1.0 - beta);
    }
    case WaveModel::blend_arithmetic: {
      const double high = upwind_sign(avg.u) * std::max(avg.c / phi, std::abs(avg.u));
      return beta * high + (1.0 - beta) * avg.u;
    }
  }
  return avg.u;
}

}  // namespace

std::string_view to_string(WaveModel m) {
  switch (m) {
    case WaveModel::standard: return "standard";
    case WaveModel::low_diss: return "low_diss";
    case WaveModel::high_diss: return "high_diss";
    case WaveModel::blend_geometric: return "blend_geo";
    case WaveModel::blend_arithmetic: return "blend_arith";
  }
  return "?";
}

std::string_view to_string(IndicatorScale s) {
  switch (s) {
    case IndicatorScale::min_side: return "min_side";
    case IndicatorScale::roe_mean: return "roe_mean";
    case IndicatorScale::unscaled: return "unscaled";
  }
  return "?";
}

WaveModel parse_wave_model(std::string_view name) {
  if (name == "standard") return WaveModel::standard;
  if (name == "low_diss") return WaveModel::low_diss;
  if (name == "high_diss") return WaveModel::high_diss;
  if (name == "blend_geo" || name == "blend_geometric") return WaveModel::blend_geometric;
  if (name == "blend_arith" || name == "blend_arithmetic") return WaveModel::blend_arithmetic;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

IndicatorScale parse_indicator_scale(std::string_view name) {
  if (name == "min_side") return IndicatorScale::min_side;
  if (name == "roe_mean") return IndicatorScale::roe_mean;
  if (name == "unscaled") return IndicatorScale::unscaled;
  throw std::invalid_argument("unknown indicator scale '" + std::string(name) + "'");
}

void ViscosityModel::validate() const {
  if (!(phi > 0.0)) throw std::invalid_argument("phi must be positive");
  if (!(delta_frac >= 0.0 && delta_frac < 1.0))
    throw std::invalid_argument("delta_frac must lie in [0, 1)");
  if (!(beta_fixed >= 0.0 && beta_fixed <= 1.0))
    throw std::invalid_argument("beta must lie in [0, 1]");
}

RoeAverage roe_average(const ConservedState& ql, const ConservedState& qr, const GasModel& gas) {
  const PrimitiveState wl = cons_to_prim(ql, gas);
  const PrimitiveState wr = cons_to_prim(qr, gas);
  const double sl = std::sqrt(wl.rho);
  const double sr = std::sqrt(wr.rho);
  const double inv = 1.0 / (sl + sr);
  const double Hl = (ql.E + wl.p) / wl.rho;
  const double Hr = (qr.E + wr.p) / wr.rho;

  RoeAverage avg;
  avg.rho = sl * sr;
  avg.u = (sl * wl.u + sr * wr.u) * inv;
  avg.v = (sl * wl.v + sr * wr.v) * inv;
  avg.H = (sl * Hl + sr * Hr) * inv;
  const double c2 = (gas.gamma - 1.0) * (avg.H - 0.5 * (avg.u * avg.u + avg.v * avg.v));
  avg.c = c2 > 0.0 ? std::sqrt(c2) : 0.0;
  return avg;
}

WaveSystem eigensystem(const RoeAverage& avg, const GasModel& gas) {
  if (!(avg.c > 0.0)) throw NonphysicalStateError("degenerate Roe mean (c <= 0)");
  const double u = avg.u, v = avg.v, H = avg.H, c = avg.c;
  const double q2h = 0.5 * (u * u + v * v);
  const double b1 = (gas.gamma - 1.0) / (c * c);
  const double b2 = b1 * q2h;

  WaveSystem ws;
  ws.lambda = {u - c, u, u, u + c};
  ws.lambda_visc = ws.lambda;
  // columns r1..r4
  ws.R = {{
      {1.0, 1.0, 0.0, 1.0},
      {u - c, u, 0.0, u + c},
      {v, v, 1.0, v},
      {H - u * c, q2h, v, H + u * c},
  }};
  ws.L = {{
      {0.5 * (b2 + u / c), 0.5 * (-b1 * u - 1.0 / c), -0.5 * b1 * v, 0.5 * b1},
      {1.0 - b2, b1 * u, b1 * v, -b1},
      {-v, 0.0, 1.0, 0.0},
      {0.5 * (b2 - u / c), 0.5 * (-b1 * u + 1.0 / c), -0.5 * b1 * v, 0.5 * b1},
  }};
  return ws;
}

Vec4 wave_speed_model(const RoeAverage& avg, WaveModel mode, double phi, double beta) {
  const double a = acoustic_speed(avg, mode, phi, beta);
  const double adv = advective_speed(avg, mode, phi, beta);
  return {avg.u - a, adv, adv, avg.u + a};
}

FluxVector rh_residual(const ConservedState& ql, const ConservedState& qr,
                       const RoeAverage& avg, const GasModel& gas) {
  const FluxVector fl = physical_flux_x(ql, gas);
  const FluxVector fr = physical_flux_x(qr, gas);
  const Vec4 dq = sub(qr.as_vec(), ql.as_vec());
  FluxVector r{};
  for (int k = 0; k < 4; ++k) r[k] = fr[k] - fl[k] - avg.u * dq[k];
  return r;
}

IndicatorReference indicator_reference(const ConservedState& ql, const ConservedState& qr,
                                       const RoeAverage& avg, const GasModel& gas,
                                       IndicatorScale scale) {
  if (scale == IndicatorScale::roe_mean) return {avg.rho, avg.c};
  if (scale == IndicatorScale::unscaled) return {1.0, 1.0};
  const double cl = std::sqrt(gas.gamma * pressure(ql, gas) / ql.rho);
  const double cr = std::sqrt(gas.gamma * pressure(qr, gas) / qr.rho);
  return {std::min(ql.rho, qr.rho), std::min(cl, cr)};
}

double indicator_strength(const FluxVector& residual, const RoeAverage& avg,
                          const IndicatorReference& ref) {
  const double rc = ref.rho * ref.c;
  const Vec4 scaled = {residual[0] / (avg.c * ref.rho), residual[1] / (avg.c * rc),
                       residual[2] / (avg.c * rc), residual[3] / (avg.c * rc * ref.c)};
  return norm2(scaled);
}

double beta_from_strength(double s) {
  // NaN falls through to 1: an unreadable residual is treated as a shock.
  if (s <= 1.0) return 0.0;
  if (!(s < 10.0)) return 1.0;
  return std::log10(s);
}

double beta_indicator(const FluxVector& residual, const RoeAverage& avg,
                      const IndicatorReference& ref) {
  return beta_from_strength(indicator_strength(residual, avg, ref));
}

double face_beta(const ConservedState& ql, const ConservedState& qr, const RoeAverage& avg,
                 const ViscosityModel& model, const GasModel& gas) {
  if (!model.is_blend()) return 0.0;
  if (!model.indicator) return model.beta_fixed;
  const FluxVector r = rh_residual(ql, qr, avg, gas);
  return beta_indicator(r, avg, indicator_reference(ql, qr, avg, gas, model.indicator_scale));
}

WaveSystem interface_waves(const ConservedState& ql, const ConservedState& qr,
                           const ViscosityModel& model, const GasModel& gas) {
  const RoeAverage avg = roe_average(ql, qr, gas);
  WaveSystem ws = eigensystem(avg, gas);
  const double beta = face_beta(ql, qr, avg, model, gas);
  ws.lambda_visc = wave_speed_model(avg, model.mode, model.phi, beta);
  ws.alpha = matvec(ws.L, sub(qr.as_vec(), ql.as_vec()));
  return ws;
}

namespace {

// Per-side quantities the flux needs, computed once.
struct FaceSide {
  double rho, u, v, p, H, sqrt_rho;
  FluxVector f;
};

inline bool load_side(const ConservedState& q, const GasModel& gas, FaceSide& s) {
  if (!(std::isfinite(q.rho) && std::isfinite(q.mx) && std::isfinite(q.my) &&
        std::isfinite(q.E)) ||
      !(q.rho > 0.0))
    return false;
  s.rho = q.rho;
  s.u = q.mx / q.rho;
  s.v = q.my / q.rho;
  s.p = (gas.gamma - 1.0) * (q.E - 0.5 * (q.mx * q.mx + q.my * q.my) / q.rho);
  if (!(s.p > 0.0)) return false;
  s.H = (q.E + s.p) / q.rho;
  s.sqrt_rho = std::sqrt(q.rho);
  s.f = {q.mx, q.mx * s.u + s.p, q.my * s.u, (q.E + s.p) * s.u};
  return true;
}

}  // namespace

FluxVector interface_flux(const ConservedState& ql, const ConservedState& qr,
                          const ViscosityModel& model, const GasModel& gas) {
  FaceSide L, R;
  if (!load_side(ql, gas, L) || !load_side(qr, gas, R))
    throw NonphysicalStateError("invalid state entering interface flux");

  RoeAverage avg;
  const double inv = 1.0 / (L.sqrt_rho + R.sqrt_rho);
  avg.rho = L.sqrt_rho * R.sqrt_rho;
  avg.u = (L.sqrt_rho * L.u + R.sqrt_rho * R.u) * inv;
  avg.v = (L.sqrt_rho * L.v + R.sqrt_rho * R.v) * inv;
  avg.H = (L.sqrt_rho * L.H + R.sqrt_rho * R.H) * inv;
  const double q2h = 0.5 * (avg.u * avg.u + avg.v * avg.v);
  const double c2 = (gas.gamma - 1.0) * (avg.H - q2h);
  if (!(c2 > 0.0)) throw NonphysicalStateError("degenerate Roe mean (c <= 0)");
  avg.c = std::sqrt(c2);
  const double u = avg.u, v = avg.v, H = avg.H, c = avg.c;

  const Vec4 dq = {qr.rho - ql.rho, qr.mx - ql.mx, qr.my - ql.my, qr.E - ql.E};

  double beta = 0.0;
  if (model.is_blend()) {
    if (!model.indicator) {
      beta = model.beta_fixed;
    } else {
      FluxVector res;
      for (int k = 0; k < 4; ++k) res[k] = R.f[k] - L.f[k] - u * dq[k];
      IndicatorReference ref{1.0, 1.0};
      if (model.indicator_scale == IndicatorScale::roe_mean) {
        ref = {avg.rho, c};
      } else if (model.indicator_scale == IndicatorScale::min_side) {
        ref = {std::min(L.rho, R.rho),
               std::min(std::sqrt(gas.gamma * L.p / L.rho), std::sqrt(gas.gamma * R.p / R.rho))};
      }
      beta = beta_indicator(res, avg, ref);
    }
  }
  const Vec4 speed = wave_speed_model(avg, model.mode, model.phi, beta);

  // Harten's fix acts on the acoustic pair only; delta scales with the
  // acoustic viscosity speed so the low-Mach ordering is kept.
  const double a = 0.5 * (speed[3] - speed[0]);
  const double delta = model.delta_frac * a;
  const double visc1 = harten_fix(speed[0], delta), visc4 = harten_fix(speed[3], delta);
  const double visc2 = std::abs(speed[1]), visc3 = std::abs(speed[2]);

  // wave strengths: rows of the left eigenvector matrix applied to dq
  const double b1 = (gas.gamma - 1.0) / c2;
  const double b2 = b1 * q2h;
  const double common = b2 * dq[0] - b1 * u * dq[1] - b1 * v * dq[2] + b1 * dq[3];
  const double sound = (u * dq[0] - dq[1]) / c;
  const double a1 = 0.5 * (common + sound);
  const double a2 = dq[0] - common;
  const double a3 = dq[2] - v * dq[0];
  const double a4 = 0.5 * (common - sound);

  const double w1 = visc1 * a1, w2 = visc2 * a2, w3 = visc3 * a3, w4 = visc4 * a4;
  const double mass = w1 + w2 + w4;
  const FluxVector d = {mass, mass * u - (w1 - w4) * c, mass * v + w3,
                        (w1 + w4) * H - (w1 - w4) * u * c + w2 * q2h + w3 * v};

  FluxVector g;
  for (int k = 0; k < 4; ++k) g[k] = 0.5 * (L.f[k] + R.f[k]) - 0.5 * d[k];
  if (!(std::isfinite(g[0]) && std::isfinite(g[1]) && std::isfinite(g[2]) &&
        std::isfinite(g[3])))
    throw NonphysicalStateError("non-finite interface flux");
  return g;
}

}  // namespace roe2d
