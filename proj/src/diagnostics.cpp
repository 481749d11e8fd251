#include "roe2d/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace roe2d {

double max_abs(const Field2D& f, Quantity q, const GasModel& gas) {
  double m = 0.0;
  for (int j = 0; j < f.ny(); ++j)
    for (int i = 0; i < f.nx(); ++i) m = std::max(m, std::abs(quantity_value(f.at(i, j), q, gas)));
  return m;
}

double max_difference(const Field2D& a, const Field2D& b) {
  double m = 0.0;
  for (int j = 0; j < a.ny(); ++j)
    for (int i = 0; i < a.nx(); ++i) {
      const Vec4 x = a.at(i, j).as_vec(), y = b.at(i, j).as_vec();
      for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(x[k] - y[k]));
    }
  return m;
}

double oscillation_amplitude(const Field2D& f, Quantity q, const GasModel& gas, double x_lo,
                             double x_hi) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int j = 0; j < f.ny(); ++j)
    for (int i = 0; i < f.nx(); ++i) {
      const double x = f.xc(i);
      if (x < x_lo || x > x_hi) continue;
      const double v = quantity_value(f.at(i, j), q, gas);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  return hi >= lo ? hi - lo : std::numeric_limits<double>::quiet_NaN();
}

int shear_layer_width(const Field2D& f, const GasModel& gas, int j, double threshold) {
  int n = 0;
  for (int i = 0; i < f.nx(); ++i)
    if (std::abs(quantity_value(f.at(i, j), Quantity::transverse_velocity, gas)) < threshold) ++n;
  return n;
}

std::optional<int> rising_density_face(const Field2D& f, int j, double threshold) {
  for (int i = 1; i < f.nx(); ++i)
    if (f.at(i - 1, j).rho < threshold && f.at(i, j).rho >= threshold) return i;
  return std::nullopt;
}

int rightmost_above(const Field2D& f, int j, double threshold) {
  for (int i = f.nx() - 1; i >= 0; --i)
    if (f.at(i, j).rho > threshold) return i;
  return -1;
}

double running_shock_oscillation(const Field2D& f, const GasModel& gas, double threshold) {
  double xs = std::numeric_limits<double>::infinity();
  for (int j = 0; j < f.ny(); ++j) {
    const int i = rightmost_above(f, j, threshold);
    if (i < 0) return std::numeric_limits<double>::quiet_NaN();
    xs = std::min(xs, f.xc(i));
  }
  const double lo = f.x0() + 0.5 * (xs - f.x0());
  return oscillation_amplitude(f, Quantity::density, gas, lo, xs - 20.0 * f.dx());
}

double colliding_oscillation(const Field2D& f, int margin) {
  const int nx = f.nx();
  const int mid = nx / 2;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int j = 0; j < f.ny(); ++j)
    for (int i = margin; i < nx - margin; ++i) {
      if (i >= mid - margin && i < mid + margin) continue;
      lo = std::min(lo, f.at(i, j).rho);
      hi = std::max(hi, f.at(i, j).rho);
    }
  return hi - lo;
}

double front_distortion(const Field2D& f, double y_max, double threshold) {
  std::vector<double> ys, xs;
  for (int j = 0; j < f.ny() && f.yc(j) < y_max; ++j) {
    const int i = rightmost_above(f, j, threshold);
    if (i < 0) continue;
    ys.push_back(f.yc(j));
    xs.push_back(f.xc(i));
  }
  const std::size_t n = ys.size();
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  double sy = 0, sx = 0, syy = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    sy += ys[k];
    sx += xs[k];
    syy += ys[k] * ys[k];
    sxy += ys[k] * xs[k];
  }
  const double den = n * syy - sy * sy;
  const double slope = den != 0.0 ? (n * sxy - sy * sx) / den : 0.0;
  const double icpt = (sx - slope * sy) / n;
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(xs[k] - (icpt + slope * ys[k])));
  return worst;
}

std::vector<SignedRun> rho_v_regions(const Field2D& f, int j, double threshold, double x_lo,
                                     double x_hi, int gap) {
  std::vector<SignedRun> runs;
  int last = -1;
  for (int i = 0; i < f.nx(); ++i) {
    const double x = f.xc(i), m = f.at(i, j).my;
    if (x < x_lo || x > x_hi || std::abs(m) < threshold) continue;
    const int sign = m > 0.0 ? 1 : -1;
    if (!runs.empty() && runs.back().sign == sign && i - last - 1 <= gap)
      runs.back().x_end = x;
    else
      runs.push_back({sign, x, x});
    last = i;
  }
  return runs;
}

CaseSummary summarize(std::string_view case_name, const Field2D& f, const GasModel& gas) {
  CaseSummary s;
  s.max_abs_v = max_abs(f, Quantity::transverse_velocity, gas);
  if (case_name.starts_with("colliding"))
    s.oscillation = colliding_oscillation(f);
  else if (case_name == "quirk")
    s.oscillation = running_shock_oscillation(f, gas, 3.0);
  return s;
}

}  // namespace roe2d
