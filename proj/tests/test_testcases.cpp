#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "roe2d/diagnostics.hpp"
#include "roe2d/kernels.hpp"
#include "roe2d/solver.hpp"
#include "roe2d/testcases.hpp"
#include "test_util.hpp"

using namespace roe2d;

TEST(RankineHugoniot, Mach20Ratios) {
  const GasModel gas;
  const PrimitiveState up{1.0, 1.0, 0.0, 1.0 / (1.4 * 400.0)};
  const PrimitiveState down = rankine_hugoniot_downstream(up, 20.0, gas);
  EXPECT_NEAR(down.rho / up.rho, 960.0 / 162.0, 1e-12);
  EXPECT_NEAR(down.rho / up.rho, 5.9259, 1e-4);
  EXPECT_NEAR(down.p / up.p, 466.5, 1e-9);
  EXPECT_EQ(down.v, 0.0);
  // stationary shock: equal fluxes on both sides
  const FluxVector fu = physical_flux_x(prim_to_cons(up, gas), gas);
  const FluxVector fd = physical_flux_x(prim_to_cons(down, gas), gas);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(fu[k], fd[k], 1e-12 * (1 + std::abs(fu[k])));
  EXPECT_GT(entropy_scalar(down, gas), entropy_scalar(up, gas));
}

TEST(RankineHugoniot, RandomShocksSatisfyJumpConditions) {
  // in the shock frame mass, momentum and energy fluxes match
  test::Gen g(41);
  const GasModel gas;
  for (int n = 0; n < 1000; ++n) {
    const PrimitiveState up{g.log_uniform(0.1, 10), g.uniform(-3, 3), g.uniform(-1, 1),
                            g.log_uniform(0.1, 10)};
    const double mach = g.uniform(1.01, 30.0);
    const PrimitiveState down = rankine_hugoniot_downstream(up, mach, gas);
    const double s = up.u - mach * sound_speed(up, gas);
    const PrimitiveState a{up.rho, up.u - s, up.v, up.p}, b{down.rho, down.u - s, down.v, down.p};
    const FluxVector fa = physical_flux_x(prim_to_cons(a, gas), gas);
    const FluxVector fb = physical_flux_x(prim_to_cons(b, gas), gas);
    for (int k = 0; k < 4; ++k) ASSERT_NEAR(fa[k], fb[k], 1e-11 * (1 + norm2(fa)));
    ASSERT_GT(entropy_scalar(down, gas), entropy_scalar(up, gas));
    ASSERT_GT(down.rho, up.rho);
  }
}

TEST(RankineHugoniot, WeakShockLimitAndErrors) {
  const GasModel gas;
  const PrimitiveState up{1.0, 2.0, 0.5, 1.0};
  const PrimitiveState down = rankine_hugoniot_downstream(up, 1.0 + 1e-9, gas);
  EXPECT_NEAR(down.rho, up.rho, 1e-8);
  EXPECT_NEAR(down.u, up.u, 1e-8);
  EXPECT_NEAR(down.p, up.p, 1e-8);
  EXPECT_THROW((void)rankine_hugoniot_downstream(up, 1.0, gas), std::invalid_argument);
  EXPECT_THROW((void)rankine_hugoniot_downstream(up, 0.5, gas), std::invalid_argument);
}

TEST(ExactRiemann, SodStarState) {
  const GasModel gas;
  const ExactRiemannSolution s = solve_exact_riemann({1.0, 0.0, 0.0, 1.0}, {0.125, 0.0, 0.0, 0.1}, gas);
  EXPECT_NEAR(s.p_star, 0.30313, 1e-4);
  EXPECT_NEAR(s.u_star, 0.92745, 1e-4);
  // far field and the region between contact and shock
  EXPECT_DOUBLE_EQ(s.sample(-5.0).rho, 1.0);
  EXPECT_DOUBLE_EQ(s.sample(5.0).rho, 0.125);
  EXPECT_NEAR(s.sample(1.5).rho, 0.26557, 1e-4);
  EXPECT_NEAR(s.sample(0.5).rho, 0.42632, 1e-4);
}

TEST(ExactRiemann, SolutionRespectsWaveStructure) {
  // pressure and normal velocity are continuous across the contact, and the
  // tangential velocity jumps there
  test::Gen g(43);
  const GasModel gas;
  for (int n = 0; n < 300; ++n) {
    const PrimitiveState l{g.log_uniform(0.1, 10), g.uniform(-1, 1), g.uniform(-1, 1), g.log_uniform(0.1, 10)};
    const PrimitiveState r{g.log_uniform(0.1, 10), g.uniform(-1, 1), g.uniform(-1, 1), g.log_uniform(0.1, 10)};
    const ExactRiemannSolution s = solve_exact_riemann(l, r, gas);
    const PrimitiveState a = s.sample(s.u_star - 1e-9), b = s.sample(s.u_star + 1e-9);
    ASSERT_NEAR(a.p, b.p, 1e-7 * s.p_star);
    ASSERT_NEAR(a.u, b.u, 1e-7);
    ASSERT_NEAR(a.p, s.p_star, 1e-7 * s.p_star);
    ASSERT_EQ(a.v, l.v);
    ASSERT_EQ(b.v, r.v);
  }
}

TEST(ExactRiemann, TrivialCases) {
  const GasModel gas;
  const PrimitiveState w{1.3, 0.4, -0.2, 2.0};
  for (double xi : {-3.0, 0.0, 0.4, 3.0}) {
    const PrimitiveState s = exact_riemann(w, w, gas, xi);
    EXPECT_NEAR(s.rho, w.rho, 1e-12);
    EXPECT_NEAR(s.u, w.u, 1e-12);
    EXPECT_NEAR(s.p, w.p, 1e-12);
  }
  // pure contact moving at u = 0.5
  const PrimitiveState l{1.0, 0.5, 0.0, 1.0}, r{4.0, 0.5, 0.0, 1.0};
  EXPECT_NEAR(exact_riemann(l, r, gas, 0.49).rho, 1.0, 1e-12);
  EXPECT_NEAR(exact_riemann(l, r, gas, 0.51).rho, 4.0, 1e-12);
  EXPECT_NEAR(exact_riemann(l, r, gas, 0.51).p, 1.0, 1e-12);
}

TEST(ExactRiemann, VacuumIsRejected) {
  const GasModel gas;
  EXPECT_THROW((void)solve_exact_riemann({1.0, -20.0, 0.0, 1.0}, {1.0, 20.0, 0.0, 1.0}, gas),
               NonphysicalStateError);
}

TEST(Cases, RegistryAndParameters) {
  const GasModel gas;
  EXPECT_EQ(case_names().size(), 11u);
  EXPECT_EQ(case_families().size(), 8u);
  std::set<std::string> from_families;
  for (const auto& [fam, names] : case_families()) from_families.insert(names.begin(), names.end());
  EXPECT_EQ(from_families, std::set<std::string>(case_names().begin(), case_names().end()));
  EXPECT_THROW((void)make_case("sod_tube", gas), std::invalid_argument);

  const TestCase quirk = make_case("quirk", gas);
  EXPECT_EQ(quirk.noise.amplitude, 1e-3);
  EXPECT_EQ(quirk.nx, 1600);
  EXPECT_EQ(quirk.ny, 20);
  EXPECT_EQ(quirk.t_end, 150.0);
  const PrimitiveState in = quirk.bc[Side::left].state;
  EXPECT_GT(in.u, sound_speed(in, gas));  // supersonic inflow

  const TestCase col = make_case("colliding_2d", gas);
  EXPECT_EQ(col.nx, 60);
  EXPECT_EQ(col.ny, 30);
  EXPECT_EQ(col.t_end, 30.0);
  EXPECT_TRUE(make_case("colliding_1d", gas).is_1d());
  EXPECT_EQ(make_case("kelvin_helmholtz", gas).required_order, 2);
  EXPECT_EQ(make_case("shear_1d", gas).t_end, 2.5);
  EXPECT_EQ(make_case("dmr", gas).nx, 480);
  EXPECT_EQ(make_case("dmr", gas).default_quantity, Quantity::vertical_momentum);
}

TEST(Cases, InitialFieldsAreAdmissible) {
  const GasModel gas;
  for (const auto& name : case_names()) {
    const TestCase tc = make_case(name, gas);
    const Field2D f = initial_field(tc, gas, 7);
    EXPECT_EQ(f.nx(), tc.nx) << name;
    EXPECT_EQ(kernels::first_invalid_cell(f, gas), std::make_pair(-1, -1)) << name;
  }
}

TEST(Cases, ShearAndCollidingData) {
  const GasModel gas;
  TestCase tc = make_case("shear_1d", gas);
  tc.noise.amplitude = 0.0;
  const Field2D s = initial_field(tc, gas, 1);
  EXPECT_EQ(cons_to_prim(s.at(0, 0), gas).v, -1.0);
  EXPECT_EQ(cons_to_prim(s.at(s.nx() - 1, 0), gas).v, 1.0);
  EXPECT_EQ(cons_to_prim(s.at(0, 0), gas).u, 0.0);

  TestCase c = make_case("colliding_1d", gas);
  c.noise.amplitude = 0.0;
  const Field2D f = initial_field(c, gas, 1);
  EXPECT_EQ(cons_to_prim(f.at(0, 0), gas).u, 20.0);
  EXPECT_EQ(cons_to_prim(f.at(59, 0), gas).u, -20.0);
}

TEST(Cases, SteadyShockSitsOnAFace) {
  const GasModel gas;
  TestCase tc = make_case("steady_shock", gas);
  tc.noise.amplitude = 0.0;
  const Field2D f = initial_field(tc, gas, 1);
  for (int j = 0; j < f.ny(); ++j) {
    const auto face = rising_density_face(f, j, 2.0);
    ASSERT_TRUE(face.has_value());
    EXPECT_DOUBLE_EQ(f.x0() + *face * f.dx(), 50.0);
  }
  const PrimitiveState up = cons_to_prim(f.at(0, 0), gas);
  EXPECT_NEAR(up.u / sound_speed(up, gas), 20.0, 1e-12);

  // the Elling variant stops the middle row upstream and nothing else
  TestCase el = make_case("elling", gas);
  el.noise.amplitude = 0.0;
  const Field2D e = initial_field(el, gas, 1);
  const int mid = e.ny() / 2;
  EXPECT_EQ(e.at(3, mid).mx, 0.0);
  EXPECT_EQ(e.at(3, mid - 1), f.at(3, mid - 1));
  EXPECT_EQ(e.at(70, mid), f.at(70, mid));
}

TEST(Cases, Overrides) {
  const GasModel gas;
  TestCase tc = make_case("shear_2d", gas);
  CaseOverrides o;
  o.nx = 10;
  o.ny = 4;
  o.noise = 0.0;
  apply_overrides(tc, o);
  EXPECT_EQ(tc.nx, 10);
  EXPECT_EQ(tc.ny, 4);
  EXPECT_EQ(tc.noise.amplitude, 0.0);
  CaseOverrides bad;
  bad.nx = 0;
  EXPECT_THROW(apply_overrides(tc, bad), std::invalid_argument);
}

TEST(Noise, BoundedCenteredAndSeeded) {
  const GasModel gas;
  const ConservedState q = prim_to_cons({1.0, 0.0, 0.0, 1.0}, gas);
  Field2D f = test::uniform_field(200, 100, 1.0, 1.0, q);
  Field2D g = f, h = f;
  apply_noise(f, {1e-6, 5, {true, false, false, false}}, gas);
  apply_noise(g, {1e-6, 5, {true, false, false, false}}, gas);
  apply_noise(h, {1e-6, 6, {true, false, false, false}}, gas);
  EXPECT_TRUE(f.same_interior(g));
  EXPECT_FALSE(f.same_interior(h));
  double sum = 0.0, worst = 0.0;
  for (int j = 0; j < 100; ++j)
    for (int i = 0; i < 200; ++i) {
      const double d = f.at(i, j).rho - 1.0;
      sum += d;
      worst = std::max(worst, std::abs(d));
      ASSERT_EQ(f.at(i, j).mx, 0.0);  // untargeted components stay put
    }
  EXPECT_LE(worst, 1e-6);
  EXPECT_GT(worst, 0.9e-6);
  // mean of 2e4 uniform draws: standard error A / sqrt(3 n) ~ 4e-9
  EXPECT_LT(std::abs(sum / 20000.0), 3e-8);
}

TEST(Noise, RedrawsKeepStatesPhysical) {
  const GasModel gas;
  Field2D f = test::uniform_field(50, 50, 1.0, 1.0, prim_to_cons({0.01, 0.0, 0.0, 0.01}, gas));
  apply_noise(f, {0.0105, 3, {true, true, true, true}}, gas);
  EXPECT_EQ(kernels::first_invalid_cell(f, gas), std::make_pair(-1, -1));
  Field2D g = test::uniform_field(5, 5, 1.0, 1.0, prim_to_cons({1e-3, 0.0, 0.0, 1.0}, gas));
  EXPECT_THROW(apply_noise(g, {-1.0, 3}, gas), std::invalid_argument);
}
