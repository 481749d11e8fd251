#pragma once

// Cell-centred Cartesian grid with ghost layers, boundary conditions,
// minmod/MUSCL reconstruction and the CFL time step.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "roe2d/euler.hpp"

namespace roe2d {

class Field2D {
 public:
  Field2D() = default;
  /// nx x ny interior cells of size dx x dy, lower-left corner (x0, y0).
  /// ny == 1 denotes a one-dimensional problem: no y sweep, no y term in the CFL limit.
  Field2D(int nx, int ny, double dx, double dy, double x0 = 0.0, double y0 = 0.0, int ghost = 2);

  [[nodiscard]] int nx() const { return nx_; }
  [[nodiscard]] int ny() const { return ny_; }
  [[nodiscard]] double dx() const { return dx_; }
  [[nodiscard]] double dy() const { return dy_; }
  [[nodiscard]] double x0() const { return x0_; }
  [[nodiscard]] double y0() const { return y0_; }
  [[nodiscard]] int ghost() const { return ghost_; }
  [[nodiscard]] bool is_1d() const { return ny_ == 1; }

  [[nodiscard]] double xc(int i) const { return x0_ + (i + 0.5) * dx_; }
  [[nodiscard]] double yc(int j) const { return y0_ + (j + 0.5) * dy_; }

  /// Row-major storage, i fastest. Valid for -ghost <= i < nx + ghost (same for j).
  [[nodiscard]] std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + ghost_) * row_stride() + static_cast<std::size_t>(i + ghost_);
  }
  [[nodiscard]] std::size_t row_stride() const { return static_cast<std::size_t>(nx_ + 2 * ghost_); }
  [[nodiscard]] std::size_t total_rows() const { return static_cast<std::size_t>(ny_ + 2 * ghost_); }

  ConservedState& at(int i, int j) { return data_[index(i, j)]; }
  [[nodiscard]] const ConservedState& at(int i, int j) const { return data_[index(i, j)]; }

  [[nodiscard]] std::span<ConservedState> raw() { return data_; }
  [[nodiscard]] std::span<const ConservedState> raw() const { return data_; }

  /// Sum over interior cells of q * dx * dy.
  [[nodiscard]] ConservedState totals() const;

  /// Interior cells equal (ghosts ignored).
  [[nodiscard]] bool same_interior(const Field2D& other) const;

 private:
  int nx_ = 0, ny_ = 0;
  double dx_ = 1.0, dy_ = 1.0;
  double x0_ = 0.0, y0_ = 0.0;
  int ghost_ = 2;
  std::vector<ConservedState> data_;
};

// --- boundary conditions --------------------------------------------------

enum class Side { left = 0, right = 1, bottom = 2, top = 3 };
enum class BoundaryKind { dirichlet, outflow, reflective, periodic, custom };

/// What a custom boundary sees when filling one ghost cell.
struct GhostContext {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
  ConservedState mirror;   // interior cell mirrored across the boundary
  ConservedState nearest;  // interior cell adjacent to the boundary
  Side side = Side::left;
};

using GhostFn = std::function<ConservedState(const GhostContext&)>;

struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::outflow;
  PrimitiveState state{};  // dirichlet only
  GhostFn fn;              // custom only
  std::string id;          // custom only; names the callback in manifests

  static BoundaryCondition dirichlet(const PrimitiveState& w) {
    return {BoundaryKind::dirichlet, w, {}, {}};
  }
  static BoundaryCondition outflow() { return {BoundaryKind::outflow, {}, {}, {}}; }
  static BoundaryCondition reflective() { return {BoundaryKind::reflective, {}, {}, {}}; }
  static BoundaryCondition periodic() { return {BoundaryKind::periodic, {}, {}, {}}; }
  static BoundaryCondition custom(std::string id, GhostFn fn) {
    return {BoundaryKind::custom, {}, std::move(fn), std::move(id)};
  }
};

struct BoundarySpec {
  std::array<BoundaryCondition, 4> sides;  // indexed by Side

  [[nodiscard]] const BoundaryCondition& operator[](Side s) const {
    return sides[static_cast<int>(s)];
  }
  BoundaryCondition& operator[](Side s) { return sides[static_cast<int>(s)]; }

  /// Periodic sides must come in opposite pairs.
  void validate() const;
};

[[nodiscard]] std::string_view to_string(BoundaryKind k);

/// Fills every ghost cell. x sides first (interior rows), then y sides over the full width.
void apply_boundaries(Field2D& field, const BoundarySpec& bc, const GasModel& gas, double t);

// --- reconstruction -------------------------------------------------------

[[nodiscard]] inline double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return a < b ? a : b;
  if (a < 0.0 && b < 0.0) return a > b ? a : b;
  return 0.0;
}

[[nodiscard]] inline PrimitiveState minmod_slope(const PrimitiveState& wm, const PrimitiveState& w0,
                                                 const PrimitiveState& wp) {
  return {minmod(w0.rho - wm.rho, wp.rho - w0.rho), minmod(w0.u - wm.u, wp.u - w0.u),
          minmod(w0.v - wm.v, wp.v - w0.v), minmod(w0.p - wm.p, wp.p - w0.p)};
}

/// w + h * s, componentwise.
[[nodiscard]] inline PrimitiveState extrapolate(const PrimitiveState& w, const PrimitiveState& s,
                                                double h) {
  return {w.rho + h * s.rho, w.u + h * s.u, w.v + h * s.v, w.p + h * s.p};
}

/// Limited slope of one cell along a line, or zero if either face value it
/// produces would be nonphysical. Sets *fell_back in that case.
[[nodiscard]] inline PrimitiveState limited_slope(const PrimitiveState& wm, const PrimitiveState& w0,
                                                  const PrimitiveState& wp, bool* fell_back) {
  const PrimitiveState s = minmod_slope(wm, w0, wp);
  if (is_physical(extrapolate(w0, s, -0.5)) && is_physical(extrapolate(w0, s, 0.5))) return s;
  *fell_back = true;
  return {0.0, 0.0, 0.0, 0.0};
}

enum class Direction { x, y };

/// Face states for one sweep direction. Faces along a line are numbered
/// 0..n, face f separating cells f-1 and f. x: line = row j, n = nx.
/// y: line = column i, n = ny. Storage is line-major.
struct FaceStates {
  int faces_per_line = 0;
  int lines = 0;
  std::vector<PrimitiveState> left;
  std::vector<PrimitiveState> right;
  long fallbacks = 0;

  [[nodiscard]] std::size_t index(int line, int face) const {
    return static_cast<std::size_t>(line) * static_cast<std::size_t>(faces_per_line) +
           static_cast<std::size_t>(face);
  }
};

/// Piecewise-linear (order 2) or piecewise-constant (order 1) face states
/// from primitive variables. Ghost cells must be populated.
[[nodiscard]] FaceStates reconstruct_muscl(const Field2D& field, Direction dir, const GasModel& gas,
                                           int order = 2);

/// dt = cfl / max((|u|+c)/dx + (|v|+c)/dy) over interior cells.
/// Throws NonphysicalStateError naming the first offending cell.
[[nodiscard]] double compute_dt(const Field2D& field, double cfl, const GasModel& gas);

}  // namespace roe2d
