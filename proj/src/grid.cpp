#include "roe2d/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace roe2d {

Field2D::Field2D(int nx, int ny, double dx, double dy, double x0, double y0, int ghost)
    : nx_(nx), ny_(ny), dx_(dx), dy_(dy), x0_(x0), y0_(y0), ghost_(ghost) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("grid needs at least one cell per direction");
  if (!(dx > 0.0) || !(dy > 0.0)) throw std::invalid_argument("grid spacing must be positive");
  if (ghost < 2) throw std::invalid_argument("second-order reconstruction needs two ghost layers");
  data_.assign(row_stride() * total_rows(), ConservedState{});
}

ConservedState Field2D::totals() const {
  ConservedState sum{0.0, 0.0, 0.0, 0.0};
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i) sum += at(i, j);
  sum *= dx_ * dy_;
  return sum;
}

bool Field2D::same_interior(const Field2D& other) const {
  if (other.nx_ != nx_ || other.ny_ != ny_) return false;
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i)
      if (!(at(i, j) == other.at(i, j))) return false;
  return true;
}

std::string_view to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::dirichlet: return "dirichlet";
    case BoundaryKind::outflow: return "outflow";
    case BoundaryKind::reflective: return "reflective";
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::custom: return "custom";
  }
  return "?";
}

void BoundarySpec::validate() const {
  auto periodic = [&](Side s) { return (*this)[s].kind == BoundaryKind::periodic; };
  if (periodic(Side::left) != periodic(Side::right))
    throw std::invalid_argument("periodic boundary on left/right must be paired");
  if (periodic(Side::bottom) != periodic(Side::top))
    throw std::invalid_argument("periodic boundary on bottom/top must be paired");
  for (const auto& s : sides)
    if (s.kind == BoundaryKind::custom && !s.fn)
      throw std::invalid_argument("custom boundary '" + s.id + "' has no callback");
}

namespace {

// Ghost value for layer k (1-based) on one side, given the mirrored and the
// adjacent interior cell.
ConservedState ghost_value(const BoundaryCondition& bc, const GasModel& gas, const GhostContext& ctx,
                           const ConservedState& periodic_src) {
  switch (bc.kind) {
    case BoundaryKind::dirichlet:
      return prim_to_cons_unchecked(bc.state, gas);
    case BoundaryKind::outflow:
      return ctx.nearest;
    case BoundaryKind::reflective: {
      ConservedState g = ctx.mirror;
      if (ctx.side == Side::left || ctx.side == Side::right)
        g.mx = -g.mx;
      else
        g.my = -g.my;
      return g;
    }
    case BoundaryKind::periodic:
      return periodic_src;
    case BoundaryKind::custom:
      return bc.fn(ctx);
  }
  return ctx.nearest;
}

}  // namespace

void apply_boundaries(Field2D& f, const BoundarySpec& bc, const GasModel& gas, double t) {
  const int nx = f.nx(), ny = f.ny(), g = f.ghost();

  for (int j = 0; j < ny; ++j) {
    for (int k = 1; k <= g; ++k) {
      GhostContext ctx;
      ctx.t = t;
      ctx.y = f.yc(j);

      ctx.side = Side::left;
      ctx.x = f.xc(-k);
      ctx.mirror = f.at(std::min(k - 1, nx - 1), j);
      ctx.nearest = f.at(0, j);
      f.at(-k, j) = ghost_value(bc[Side::left], gas, ctx, f.at(((nx - k) % nx + nx) % nx, j));

      ctx.side = Side::right;
      ctx.x = f.xc(nx - 1 + k);
      ctx.mirror = f.at(std::max(nx - k, 0), j);
      ctx.nearest = f.at(nx - 1, j);
      f.at(nx - 1 + k, j) = ghost_value(bc[Side::right], gas, ctx, f.at((k - 1) % nx, j));
    }
  }

  for (int i = -g; i < nx + g; ++i) {
    for (int k = 1; k <= g; ++k) {
      GhostContext ctx;
      ctx.t = t;
      ctx.x = f.xc(i);

      ctx.side = Side::bottom;
      ctx.y = f.yc(-k);
      ctx.mirror = f.at(i, std::min(k - 1, ny - 1));
      ctx.nearest = f.at(i, 0);
      f.at(i, -k) = ghost_value(bc[Side::bottom], gas, ctx, f.at(i, ((ny - k) % ny + ny) % ny));

      ctx.side = Side::top;
      ctx.y = f.yc(ny - 1 + k);
      ctx.mirror = f.at(i, std::max(ny - k, 0));
      ctx.nearest = f.at(i, ny - 1);
      f.at(i, ny - 1 + k) = ghost_value(bc[Side::top], gas, ctx, f.at(i, (k - 1) % ny));
    }
  }
}

FaceStates reconstruct_muscl(const Field2D& field, Direction dir, const GasModel& gas, int order) {
  const bool along_x = dir == Direction::x;
  const int n = along_x ? field.nx() : field.ny();
  const int lines = along_x ? field.ny() : field.nx();

  FaceStates out;
  out.faces_per_line = n + 1;
  out.lines = lines;
  out.left.resize(static_cast<std::size_t>(lines) * (n + 1));
  out.right.resize(out.left.size());

  std::vector<PrimitiveState> w(static_cast<std::size_t>(n + 4));
  std::vector<PrimitiveState> slope(static_cast<std::size_t>(n + 2));
  for (int line = 0; line < lines; ++line) {
    // w[m] holds cell m - 2 along the line
    for (int m = -2; m < n + 2; ++m) {
      const ConservedState& q = along_x ? field.at(m, line) : field.at(line, m);
      w[m + 2] = cons_to_prim_unchecked(q, gas);
    }
    // slope[m] holds cell m - 1, m in [0, n + 1]
    for (int m = -1; m <= n; ++m) {
      if (order < 2) {
        slope[m + 1] = {0.0, 0.0, 0.0, 0.0};
        continue;
      }
      bool fell_back = false;
      slope[m + 1] = limited_slope(w[m + 1], w[m + 2], w[m + 3], &fell_back);
      if (fell_back) ++out.fallbacks;
    }
    for (int f = 0; f <= n; ++f) {
      out.left[out.index(line, f)] = extrapolate(w[f + 1], slope[f], 0.5);
      out.right[out.index(line, f)] = extrapolate(w[f + 2], slope[f + 1], -0.5);
    }
  }
  return out;
}

double compute_dt(const Field2D& field, double cfl, const GasModel& gas) {
  double max_rate = 0.0;
  const bool one_d = field.is_1d();
  for (int j = 0; j < field.ny(); ++j) {
    for (int i = 0; i < field.nx(); ++i) {
      const ConservedState& q = field.at(i, j);
      if (!is_physical(q, gas)) {
        CellLocation loc;
        loc.i = i;
        loc.j = j;
        throw NonphysicalStateError("nonphysical state in time-step control", loc);
      }
      const PrimitiveState w = cons_to_prim_unchecked(q, gas);
      const double c = std::sqrt(gas.gamma * w.p / w.rho);
      double rate = (std::abs(w.u) + c) / field.dx();
      if (!one_d) rate += (std::abs(w.v) + c) / field.dy();
      max_rate = std::max(max_rate, rate);
    }
  }
  return cfl / max_rate;
}

}  // namespace roe2d
