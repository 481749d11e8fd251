#include "roe2d/testcases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace roe2d {

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::density: return "density";
    case Quantity::x_velocity: return "x_velocity";
    case Quantity::transverse_velocity: return "transverse_velocity";
    case Quantity::pressure: return "pressure";
    case Quantity::entropy: return "entropy";
    case Quantity::vertical_momentum: return "vertical_momentum";
  }
  return "?";
}

Quantity parse_quantity(std::string_view name) {
  for (Quantity q : {Quantity::density, Quantity::x_velocity, Quantity::transverse_velocity,
                     Quantity::pressure, Quantity::entropy, Quantity::vertical_momentum})
    if (to_string(q) == name) return q;
  throw std::invalid_argument("unknown quantity '" + std::string(name) + "'");
}

double quantity_value(const ConservedState& q, Quantity what, const GasModel& gas) {
  switch (what) {
    case Quantity::density: return q.rho;
    case Quantity::x_velocity: return q.mx / q.rho;
    case Quantity::transverse_velocity: return q.my / q.rho;
    case Quantity::pressure: return pressure(q, gas);
    case Quantity::entropy: return entropy_scalar(cons_to_prim(q, gas), gas);
    case Quantity::vertical_momentum: return q.my;
  }
  return 0.0;
}

// --- noise ----------------------------------------------------------------

void apply_noise(Field2D& field, const NoiseSpec& spec, const GasModel& gas) {
  if (spec.amplitude < 0.0) throw std::invalid_argument("noise amplitude must be >= 0");
  if (spec.amplitude == 0.0) return;
  std::mt19937_64 rng(spec.seed);
  // 53 random bits mapped to [-A, A); independent of the standard library's
  // distribution implementations.
  auto draw = [&] {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return spec.amplitude * (2.0 * unit - 1.0);
  };
  for (int j = 0; j < field.ny(); ++j)
    for (int i = 0; i < field.nx(); ++i) {
      const PrimitiveState w0 = cons_to_prim(field.at(i, j), gas);
      PrimitiveState w = w0;
      for (int attempt = 0;; ++attempt) {
        w = w0;
        if (spec.targets[0]) w.rho += draw();
        if (spec.targets[1]) w.u += draw();
        if (spec.targets[2]) w.v += draw();
        if (spec.targets[3]) w.p += draw();
        if (is_physical(w)) break;
        if (attempt > 100) {
          CellLocation loc;
          loc.i = i;
          loc.j = j;
          throw NonphysicalStateError("noise amplitude too large for the state", loc);
        }
      }
      field.at(i, j) = prim_to_cons_unchecked(w, gas);
    }
}

// --- exact solutions --------------------------------------------------------

PrimitiveState rankine_hugoniot_downstream(const PrimitiveState& up, double mach,
                                           const GasModel& gas) {
  if (!(mach > 1.0)) throw std::invalid_argument("shock Mach number must exceed 1");
  validate_state(up);
  const double g = gas.gamma;
  const double m2 = mach * mach;
  const double c1 = std::sqrt(g * up.p / up.rho);
  const double rho_ratio = (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0);
  const double p_ratio = 1.0 + 2.0 * g / (g + 1.0) * (m2 - 1.0);
  const double w1 = mach * c1;  // upstream speed relative to the shock
  const double shock_speed = up.u - w1;
  return {up.rho * rho_ratio, shock_speed + w1 / rho_ratio, up.v, up.p * p_ratio};
}

namespace {

struct Side1D {
  double rho, u, p, c;
};

// Toro's pressure function for one side and its derivative.
void pressure_function(double p, const Side1D& k, double g, double& f, double& df) {
  if (p > k.p) {
    const double a = 2.0 / ((g + 1.0) * k.rho);
    const double b = (g - 1.0) / (g + 1.0) * k.p;
    const double s = std::sqrt(a / (p + b));
    f = (p - k.p) * s;
    df = s * (1.0 - 0.5 * (p - k.p) / (p + b));
  } else {
    const double ratio = p / k.p;
    f = 2.0 * k.c / (g - 1.0) * (std::pow(ratio, (g - 1.0) / (2.0 * g)) - 1.0);
    df = std::pow(ratio, -(g + 1.0) / (2.0 * g)) / (k.rho * k.c);
  }
}

}  // namespace

ExactRiemannSolution solve_exact_riemann(const PrimitiveState& left, const PrimitiveState& right,
                                         const GasModel& gas) {
  validate_state(left);
  validate_state(right);
  const double g = gas.gamma;
  const Side1D L{left.rho, left.u, left.p, std::sqrt(g * left.p / left.rho)};
  const Side1D R{right.rho, right.u, right.p, std::sqrt(g * right.p / right.rho)};
  const double du = R.u - L.u;
  if (2.0 * (L.c + R.c) / (g - 1.0) <= du)
    throw NonphysicalStateError("Riemann data generate vacuum");

  auto total = [&](double p, double& df) {
    double fl, dfl, fr, dfr;
    pressure_function(p, L, g, fl, dfl);
    pressure_function(p, R, g, fr, dfr);
    df = dfl + dfr;
    return fl + fr + du;
  };

  // f is increasing in p; bracket the root, then Newton with bisection fallback.
  double lo = 1e-300, hi = std::max(L.p, R.p);
  double dtmp;
  while (total(hi, dtmp) < 0.0) hi *= 2.0;
  const double pv = 0.5 * (L.p + R.p) - 0.125 * du * (L.rho + R.rho) * (L.c + R.c);
  double p = std::clamp(pv, 1e-8 * hi, hi);
  for (int it = 0; it < 200; ++it) {
    double df;
    const double f = total(p, df);
    if (f == 0.0) break;
    if (f < 0.0)
      lo = p;
    else
      hi = p;
    double next = p - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - p) <= 1e-15 * p) {
      p = next;
      break;
    }
    p = next;
  }

  double fl, fr, d;
  pressure_function(p, L, g, fl, d);
  pressure_function(p, R, g, fr, d);
  ExactRiemannSolution sol;
  sol.left = left;
  sol.right = right;
  sol.gas = gas;
  sol.p_star = p;
  sol.u_star = 0.5 * (L.u + R.u) + 0.5 * (fr - fl);
  return sol;
}

PrimitiveState ExactRiemannSolution::sample(double xi) const {
  const double g = gas.gamma;
  const double ps = p_star, us = u_star;
  const double gm = (g - 1.0) / (g + 1.0);

  if (xi <= us) {
    const PrimitiveState& k = left;
    const double c = std::sqrt(g * k.p / k.rho);
    if (ps > k.p) {
      const double pr = ps / k.p;
      const double s = k.u - c * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
      if (xi <= s) return k;
      return {k.rho * (pr + gm) / (gm * pr + 1.0), us, k.v, ps};
    }
    const double c_star = c * std::pow(ps / k.p, (g - 1.0) / (2.0 * g));
    const double head = k.u - c, tail = us - c_star;
    if (xi <= head) return k;
    if (xi >= tail) return {k.rho * std::pow(ps / k.p, 1.0 / g), us, k.v, ps};
    const double cf = 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * (k.u - xi));
    const double uf = 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * k.u + xi);
    const double rf = k.rho * std::pow(cf / c, 2.0 / (g - 1.0));
    return {rf, uf, k.v, k.p * std::pow(cf / c, 2.0 * g / (g - 1.0))};
  }

  const PrimitiveState& k = right;
  const double c = std::sqrt(g * k.p / k.rho);
  if (ps > k.p) {
    const double pr = ps / k.p;
    const double s = k.u + c * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
    if (xi >= s) return k;
    return {k.rho * (pr + gm) / (gm * pr + 1.0), us, k.v, ps};
  }
  const double c_star = c * std::pow(ps / k.p, (g - 1.0) / (2.0 * g));
  const double head = k.u + c, tail = us + c_star;
  if (xi >= head) return k;
  if (xi <= tail) return {k.rho * std::pow(ps / k.p, 1.0 / g), us, k.v, ps};
  const double cf = 2.0 / (g + 1.0) * (c - 0.5 * (g - 1.0) * (k.u - xi));
  const double uf = 2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * k.u + xi);
  const double rf = k.rho * std::pow(cf / c, 2.0 / (g - 1.0));
  return {rf, uf, k.v, k.p * std::pow(cf / c, 2.0 * g / (g - 1.0))};
}

// --- case registry ----------------------------------------------------------

namespace {

using Init = std::function<void(Field2D&, const GasModel&)>;

Init fill_with(std::function<PrimitiveState(double x, double y, int i, int j)> prim) {
  return [prim = std::move(prim)](Field2D& f, const GasModel& gas) {
    for (int j = 0; j < f.ny(); ++j)
      for (int i = 0; i < f.nx(); ++i) f.at(i, j) = prim_to_cons(prim(f.xc(i), f.yc(j), i, j), gas);
  };
}

BoundarySpec quasi_1d_bc(BoundaryCondition left, BoundaryCondition right) {
  BoundarySpec bc;
  bc[Side::left] = std::move(left);
  bc[Side::right] = std::move(right);
  bc[Side::bottom] = BoundaryCondition::periodic();
  bc[Side::top] = BoundaryCondition::periodic();
  return bc;
}

TestCase shear(bool two_d) {
  TestCase tc;
  tc.name = two_d ? "shear_2d" : "shear_1d";
  tc.x0 = 0.0;
  tc.x1 = 2.0;
  tc.y0 = 0.0;
  tc.y1 = two_d ? 1.0 : 0.05;
  tc.nx = 40;
  tc.ny = two_d ? 20 : 1;
  tc.bc = quasi_1d_bc(BoundaryCondition::outflow(), BoundaryCondition::outflow());
  // jump on the grid line x = 1
  tc.init = fill_with([](double x, double, int, int) {
    return PrimitiveState{1.0, 0.0, x < 1.0 ? -1.0 : 1.0, 1.0};
  });
  tc.noise.amplitude = 1e-6;
  tc.t_end = 2.5;
  tc.default_quantity = Quantity::transverse_velocity;
  return tc;
}

TestCase colliding(bool two_d) {
  TestCase tc;
  tc.name = two_d ? "colliding_2d" : "colliding_1d";
  tc.x1 = 60.0;
  tc.y1 = two_d ? 30.0 : 1.0;
  tc.nx = 60;
  tc.ny = two_d ? 30 : 1;
  tc.bc = quasi_1d_bc(BoundaryCondition::outflow(), BoundaryCondition::outflow());
  tc.init = fill_with([](double x, double, int, int) {
    return PrimitiveState{1.0, x < 30.0 ? 20.0 : -20.0, 0.0, 1.0};
  });
  tc.noise.amplitude = 1e-6;
  tc.t_end = 30.0;
  return tc;
}

TestCase uniform(double mach, const GasModel& gas) {
  TestCase tc;
  tc.name = mach > 1.0 ? "uniform_supersonic" : "uniform_subsonic";
  tc.x1 = 2.0;
  tc.y1 = 1.0;
  tc.nx = 40;
  tc.ny = 20;
  tc.bc = quasi_1d_bc(BoundaryCondition::outflow(), BoundaryCondition::outflow());
  const double p = 1.0 / (gas.gamma * mach * mach);
  tc.init = fill_with([p](double, double, int, int) { return PrimitiveState{1.0, 1.0, 0.0, p}; });
  tc.noise.amplitude = 1e-6;
  tc.t_end = 5.0;
  return tc;
}

// Upstream state of the Mach 20 steady shock and its downstream partner.
std::pair<PrimitiveState, PrimitiveState> steady_shock_states(const GasModel& gas) {
  const double mach = 20.0;
  const PrimitiveState up{1.0, 1.0, 0.0, 1.0 / (gas.gamma * mach * mach)};
  return {up, rankine_hugoniot_downstream(up, mach, gas)};
}

constexpr double kSteadyShockFace = 50.0;

TestCase steady_shock(const GasModel& gas) {
  TestCase tc;
  tc.name = "steady_shock";
  tc.x1 = 100.0;
  tc.y1 = 40.0;
  tc.nx = 100;
  tc.ny = 40;
  const auto [up, down] = steady_shock_states(gas);
  tc.bc = quasi_1d_bc(BoundaryCondition::dirichlet(up), BoundaryCondition::outflow());
  tc.init = fill_with([up, down](double x, double, int, int) {
    return x < kSteadyShockFace ? up : down;
  });
  tc.noise.amplitude = 1e-6;
  tc.t_end = 100.0;
  return tc;
}

TestCase elling(const GasModel& gas) {
  TestCase tc = steady_shock(gas);
  tc.name = "elling";
  const auto [up, down] = steady_shock_states(gas);
  const int mid = tc.ny / 2;
  const double dy = (tc.y1 - tc.y0) / tc.ny;
  const double y0 = tc.y0;
  // The stagnant slice also enters through the inflow boundary.
  PrimitiveState still = up;
  still.u = 0.0;
  still.v = 0.0;
  tc.bc[Side::left] = BoundaryCondition::custom(
      "elling_inflow", [=](const GhostContext& ctx) {
        const int row = static_cast<int>(std::floor((ctx.y - y0) / dy));
        return prim_to_cons(row == mid ? still : up, gas);
      });
  tc.init = fill_with([=](double x, double, int, int j) {
    if (x >= kSteadyShockFace) return down;
    return j == mid ? still : up;
  });
  tc.default_quantity = Quantity::density;
  return tc;
}

TestCase quirk(const GasModel& gas) {
  TestCase tc;
  tc.name = "quirk";
  tc.x1 = 1600.0;
  tc.y1 = 20.0;
  tc.nx = 1600;
  tc.ny = 20;
  const PrimitiveState inflow{5.26829268, 4.86111111, 0.0, 29.88095238};
  tc.bc[Side::left] = BoundaryCondition::dirichlet(inflow);
  tc.bc[Side::right] = BoundaryCondition::outflow();
  tc.bc[Side::bottom] = BoundaryCondition::reflective();
  tc.bc[Side::top] = BoundaryCondition::reflective();
  const double p0 = 1.0 / gas.gamma;
  tc.init = fill_with([p0](double, double, int, int) { return PrimitiveState{1.0, 0.0, 0.0, p0}; });
  tc.noise.amplitude = 1e-3;
  tc.t_end = 150.0;
  return tc;
}

TestCase kelvin_helmholtz(const GasModel& gas) {
  TestCase tc;
  tc.name = "kelvin_helmholtz";
  tc.nx = 100;
  tc.ny = 100;
  for (auto& s : tc.bc.sides) s = BoundaryCondition::periodic();
  const double speed = 0.5 * std::sqrt(gas.gamma);
  tc.init = fill_with([speed](double x, double y, int, int) {
    const double u = std::abs(y - 0.5) < 0.25 ? -speed : speed;
    return PrimitiveState{1.0, u, 0.01 * std::sin(2.0 * std::numbers::pi * x), 1.0};
  });
  tc.t_end = 4.0;
  tc.default_quantity = Quantity::entropy;
  tc.required_order = 2;
  return tc;
}

TestCase double_mach_reflection(const GasModel& gas) {
  TestCase tc;
  tc.name = "dmr";
  tc.x1 = 4.0;
  tc.y1 = 2.0;
  tc.nx = 480;
  tc.ny = 240;

  // Mach 10 shock into gas at rest; post-shock velocity points along the shock normal.
  const PrimitiveState pre{1.4, 0.0, 0.0, 1.0};
  const PrimitiveState behind = rankine_hugoniot_downstream(pre, 10.0, gas);
  const double speed = -behind.u;
  const double angle = std::numbers::pi / 6.0;  // normal is 30 deg below the x axis
  const PrimitiveState post{behind.rho, speed * std::cos(angle), -speed * std::sin(angle), behind.p};
  const double x_ramp = 1.0 / 6.0;
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const double shock_speed_x = 20.0 * inv_sqrt3;  // 10 / sin(60 deg)

  tc.bc[Side::left] = BoundaryCondition::dirichlet(post);
  tc.bc[Side::right] = BoundaryCondition::outflow();
  tc.bc[Side::bottom] = BoundaryCondition::custom("dmr_wall", [=](const GhostContext& ctx) {
    if (ctx.x < x_ramp) return prim_to_cons(post, gas);
    ConservedState g = ctx.mirror;
    g.my = -g.my;
    return g;
  });
  tc.bc[Side::top] = BoundaryCondition::custom("dmr_shock", [=](const GhostContext& ctx) {
    const double xs = x_ramp + ctx.y * inv_sqrt3 + shock_speed_x * ctx.t;
    return prim_to_cons(ctx.x < xs ? post : pre, gas);
  });
  tc.init = fill_with([=](double x, double y, int, int) {
    return x < x_ramp + y * inv_sqrt3 ? post : pre;
  });
  tc.t_end = 0.2;
  tc.default_quantity = Quantity::vertical_momentum;
  return tc;
}

}  // namespace

const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names = {
      "shear_1d",           "shear_2d",         "colliding_1d", "colliding_2d",
      "uniform_supersonic", "uniform_subsonic", "steady_shock", "quirk",
      "elling",             "kelvin_helmholtz", "dmr"};
  return names;
}

std::vector<std::pair<std::string, std::vector<std::string>>> case_families() {
  return {
      {"steady shear wave", {"shear_1d", "shear_2d"}},
      {"colliding flow", {"colliding_1d", "colliding_2d"}},
      {"uniform flow", {"uniform_supersonic", "uniform_subsonic"}},
      {"steady shock", {"steady_shock"}},
      {"quirk", {"quirk"}},
      {"elling", {"elling"}},
      {"kelvin-helmholtz", {"kelvin_helmholtz"}},
      {"double mach reflection", {"dmr"}},
  };
}

TestCase make_case(std::string_view name, const GasModel& gas) {
  if (name == "shear_1d") return shear(false);
  if (name == "shear_2d") return shear(true);
  if (name == "colliding_1d") return colliding(false);
  if (name == "colliding_2d") return colliding(true);
  if (name == "uniform_supersonic") return uniform(20.0, gas);
  if (name == "uniform_subsonic") return uniform(1.0 / 20.0, gas);
  if (name == "steady_shock") return steady_shock(gas);
  if (name == "quirk") return quirk(gas);
  if (name == "elling") return elling(gas);
  if (name == "kelvin_helmholtz") return kelvin_helmholtz(gas);
  if (name == "dmr") return double_mach_reflection(gas);
  throw std::invalid_argument("unknown case '" + std::string(name) + "'");
}

void apply_overrides(TestCase& tc, const CaseOverrides& o) {
  if (o.nx) {
    if (*o.nx < 1) throw std::invalid_argument("nx must be positive");
    tc.nx = *o.nx;
  }
  if (o.ny) {
    if (*o.ny < 1) throw std::invalid_argument("ny must be positive");
    tc.ny = *o.ny;
  }
  if (o.noise) {
    if (*o.noise < 0.0) throw std::invalid_argument("noise amplitude must be >= 0");
    tc.noise.amplitude = *o.noise;
  }
}

Field2D initial_field(const TestCase& tc, const GasModel& gas, std::uint64_t seed) {
  Field2D f(tc.nx, tc.ny, (tc.x1 - tc.x0) / tc.nx, (tc.y1 - tc.y0) / tc.ny, tc.x0, tc.y0);
  tc.init(f, gas);
  NoiseSpec noise = tc.noise;
  noise.seed = seed;
  apply_noise(f, noise, gas);
  tc.bc.validate();
  apply_boundaries(f, tc.bc, gas, 0.0);
  return f;
}

}  // namespace roe2d
