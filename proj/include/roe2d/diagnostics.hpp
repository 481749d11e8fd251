#pragma once

// Scalar measurements of a field used by the sweep table and the
// figure-level acceptance checks.

#include <optional>
#include <string_view>
#include <vector>

#include "roe2d/grid.hpp"
#include "roe2d/testcases.hpp"

namespace roe2d {

/// max |q| over interior cells.
[[nodiscard]] double max_abs(const Field2D& f, Quantity q, const GasModel& gas);

/// max over interior cells and components of |a - b|.
[[nodiscard]] double max_difference(const Field2D& a, const Field2D& b);

/// max - min of q over all rows, restricted to cells whose centre lies in [x_lo, x_hi].
[[nodiscard]] double oscillation_amplitude(const Field2D& f, Quantity q, const GasModel& gas,
                                           double x_lo, double x_hi);

/// Number of cells in row j with |v| < threshold.
[[nodiscard]] int shear_layer_width(const Field2D& f, const GasModel& gas, int j = 0,
                                    double threshold = 0.9);

/// First face (0..nx) in row j whose right neighbour has density >= threshold
/// while its left neighbour is below it; nullopt if no such crossing.
[[nodiscard]] std::optional<int> rising_density_face(const Field2D& f, int j, double threshold);

/// Largest i in row j with density above threshold, or -1.
[[nodiscard]] int rightmost_above(const Field2D& f, int j, double threshold);

/// Density threshold between the quiescent state and the plateau behind the
/// running shock, then the plateau oscillation in [x_s / 2, x_s - 20] where x_s
/// is the leftmost shock position over all rows. NaN if no shock is found.
[[nodiscard]] double running_shock_oscillation(const Field2D& f, const GasModel& gas,
                                               double threshold);

/// Plateau oscillation of the colliding-flow case: density over the domain
/// with `margin` cells removed at both ends and around the centre line.
[[nodiscard]] double colliding_oscillation(const Field2D& f, int margin = 5);

/// Front of the reflected shock near the wall: for each row with centre y < y_max,
/// the x of the rightmost cell with density above `threshold`. The metric is
/// the largest deviation of those positions from their least-squares line.
[[nodiscard]] double front_distortion(const Field2D& f, double y_max, double threshold);

/// A maximal run of cells in one row where rho v has one sign and |rho v| >= threshold.
struct SignedRun {
  int sign = 0;
  double x_begin = 0.0, x_end = 0.0;
};

/// Mach stems: the signed rho v runs of row j whose cell centres lie in [x_lo, x_hi].
/// Runs of the same sign separated by at most `gap` weaker cells are merged.
[[nodiscard]] std::vector<SignedRun> rho_v_regions(const Field2D& f, int j, double threshold,
                                                   double x_lo, double x_hi, int gap = 2);

/// Columns for the sweep table.
struct CaseSummary {
  double oscillation = std::numeric_limits<double>::quiet_NaN();
  double max_abs_v = 0.0;
};

[[nodiscard]] CaseSummary summarize(std::string_view case_name, const Field2D& f,
                                    const GasModel& gas);

}  // namespace roe2d
