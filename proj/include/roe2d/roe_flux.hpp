#pragma once

// Roe-type interface flux with selectable numerical-viscosity models.
//
// The flux has the form
//   G(ql, qr) = 1/2 (f(ql) + f(qr)) - 1/2 R |Lambda~| L (qr - ql)
// where R, L are the eigenvectors of the flux Jacobian at the Roe mean and
// Lambda~ holds the "viscosity speeds". Only Lambda~ depends on the model;
// the Roe mean, eigenvectors and wave strengths are shared by all of them.

#include <string>
#include <string_view>

#include "roe2d/euler.hpp"

namespace roe2d {

enum class WaveModel {
  standard,          // plain Roe: u -+ c, u, u
  low_diss,          // acoustic speeds capped by phi |u|
  high_diss,         // advective speeds floored by c / phi
  blend_geometric,   // weighted geometric mean of the two, weight beta
  blend_arithmetic,  // weighted arithmetic mean of the two, weight beta
};

/// How the Rankine-Hugoniot residual is made dimensionless before taking its norm.
enum class IndicatorScale {
  min_side,  // smaller of the two face-adjacent densities and sound speeds
  roe_mean,  // Roe-mean density and sound speed
  unscaled,  // |r| / c~ as it stands; not dimensionless
};

[[nodiscard]] std::string_view to_string(WaveModel m);
[[nodiscard]] std::string_view to_string(IndicatorScale s);
/// Accepts the short CLI spellings (blend_geo, blend_arith) as well as the long ones.
[[nodiscard]] WaveModel parse_wave_model(std::string_view name);
[[nodiscard]] IndicatorScale parse_indicator_scale(std::string_view name);

struct ViscosityModel {
  WaveModel mode = WaveModel::standard;
  double phi = 5.0;
  /// Harten parameter as a fraction of the acoustic viscosity speed. 0 disables the fix.
  double delta_frac = 0.1;
  /// When false the blends use beta_fixed at every face.
  bool indicator = true;
  double beta_fixed = 0.5;
  IndicatorScale indicator_scale = IndicatorScale::unscaled;

  /// Throws std::invalid_argument unless phi > 0, 0 <= delta_frac < 1, beta_fixed in [0,1].
  void validate() const;
  [[nodiscard]] bool is_blend() const {
    return mode == WaveModel::blend_geometric || mode == WaveModel::blend_arithmetic;
  }
};

struct RoeAverage {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double H = 0.0;
  double c = 0.0;
};

struct WaveSystem {
  Vec4 lambda{};       // signed characteristic speeds u-c, u, u, u+c
  Vec4 lambda_visc{};  // signed viscosity speeds after the model is applied
  Mat4 R{};            // right eigenvectors as columns
  Mat4 L{};            // left eigenvectors as rows, L = R^-1
  Vec4 alpha{};        // wave strengths L (qr - ql)
};

[[nodiscard]] RoeAverage roe_average(const ConservedState& ql, const ConservedState& qr,
                                     const GasModel& gas);

/// Characteristic speeds and eigenvectors at a Roe mean. Throws on c <= 0.
[[nodiscard]] WaveSystem eigensystem(const RoeAverage& avg, const GasModel& gas);

/// Harten's smooth replacement of |lambda|, bounded below by delta / 2.
[[nodiscard]] inline double harten_fix(double lambda, double delta) {
  const double a = lambda < 0.0 ? -lambda : lambda;
  if (a >= delta) return a;
  // (lambda^2 + delta^2) / (2 delta), written so rounding cannot dip below delta / 2
  return 0.5 * delta + lambda * lambda / (2.0 * delta);
}

/// Signed viscosity speeds for the given model. beta is ignored by the non-blend modes.
[[nodiscard]] Vec4 wave_speed_model(const RoeAverage& avg, WaveModel mode, double phi,
                                    double beta);

/// r = f(qr) - f(ql) - u~ (qr - ql). Vanishes for pure contact/shear jumps.
[[nodiscard]] FluxVector rh_residual(const ConservedState& ql, const ConservedState& qr,
                                     const RoeAverage& avg, const GasModel& gas);

/// Reference density and sound speed used to make the residual dimensionless.
/// The unscaled choice uses {1, 1}, i.e. s = |r| / c~.
struct IndicatorReference {
  double rho = 1.0;
  double c = 1.0;
};

[[nodiscard]] IndicatorReference indicator_reference(const ConservedState& ql,
                                                     const ConservedState& qr,
                                                     const RoeAverage& avg,
                                                     const GasModel& gas, IndicatorScale scale);

/// Dimensionless shock strength s = |r / c~| with components scaled by
/// (rho, rho c, rho c, rho c^2) of the reference.
[[nodiscard]] double indicator_strength(const FluxVector& residual, const RoeAverage& avg,
                                        const IndicatorReference& ref);

/// beta = min(log10(max(s, 1)), 1)
[[nodiscard]] double beta_from_strength(double s);

[[nodiscard]] double beta_indicator(const FluxVector& residual, const RoeAverage& avg,
                                    const IndicatorReference& ref);

/// Blend weight the flux would use at this face.
[[nodiscard]] double face_beta(const ConservedState& ql, const ConservedState& qr,
                               const RoeAverage& avg, const ViscosityModel& model,
                               const GasModel& gas);

/// The full wave decomposition used by interface_flux, including lambda_visc and alpha.
[[nodiscard]] WaveSystem interface_waves(const ConservedState& ql, const ConservedState& qr,
                                         const ViscosityModel& model, const GasModel& gas);

/// Numerical flux through an x-normal face. Throws NonphysicalStateError on
/// invalid input states or a non-finite result.
[[nodiscard]] FluxVector interface_flux(const ConservedState& ql, const ConservedState& qr,
                                        const ViscosityModel& model, const GasModel& gas);

}  // namespace roe2d
