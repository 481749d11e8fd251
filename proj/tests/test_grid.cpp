#include <gtest/gtest.h>

#include <cmath>

#include "roe2d/grid.hpp"
#include "test_util.hpp"

using namespace roe2d;

TEST(Grid, Minmod) {
  EXPECT_EQ(minmod(1.0, 2.0), 1.0);
  EXPECT_EQ(minmod(-3.0, -2.0), -2.0);
  EXPECT_EQ(minmod(1.0, -1.0), 0.0);
  EXPECT_EQ(minmod(0.0, 5.0), 0.0);
  test::Gen g(1);
  for (int n = 0; n < 10000; ++n) {
    const double a = g.uniform(-1, 1), b = g.uniform(-1, 1);
    const double m = minmod(a, b);
    ASSERT_LE(std::abs(m), std::min(std::abs(a), std::abs(b)));
    ASSERT_GE(m * a, 0.0);
    ASSERT_GE(m * b, 0.0);
    ASSERT_EQ(m, minmod(b, a));
  }
}

TEST(Grid, GeometryAndTotals) {
  Field2D f(4, 3, 0.5, 2.0, 1.0, -1.0);
  EXPECT_DOUBLE_EQ(f.xc(0), 1.25);
  EXPECT_DOUBLE_EQ(f.yc(2), 4.0);
  EXPECT_FALSE(f.is_1d());
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 4; ++i) f.at(i, j) = {1.0, 2.0, 0.0, 3.0};
  f.at(-1, 0) = {100.0, 0.0, 0.0, 100.0};  // ghosts do not count
  const ConservedState t = f.totals();
  EXPECT_DOUBLE_EQ(t.rho, 12.0);
  EXPECT_DOUBLE_EQ(t.mx, 24.0);
  EXPECT_DOUBLE_EQ(t.E, 36.0);
}

TEST(Grid, LinearRampReconstructsExactly) {
  const GasModel gas;
  Field2D f(8, 1, 1.0, 1.0);
  for (int i = -2; i < 10; ++i) f.at(i, 0) = prim_to_cons({1.0 + 0.1 * i, 0.5, 0.0, 2.0}, gas);
  const FaceStates fs = reconstruct_muscl(f, Direction::x, gas, 2);
  EXPECT_EQ(fs.fallbacks, 0);
  for (int face = 0; face <= 8; ++face) {
    const double rho_face = 1.0 + 0.1 * (face - 0.5);
    EXPECT_NEAR(fs.left[fs.index(0, face)].rho, rho_face, 1e-14);
    EXPECT_NEAR(fs.right[fs.index(0, face)].rho, rho_face, 1e-14);
    EXPECT_NEAR(fs.left[fs.index(0, face)].p, 2.0, 1e-14);
  }
}

TEST(Grid, SpikeIsNotSharpened) {
  const GasModel gas;
  Field2D f(5, 1, 1.0, 1.0);
  for (int i = -2; i < 7; ++i) f.at(i, 0) = prim_to_cons({1.0, 0.0, 0.0, 1.0}, gas);
  f.at(2, 0) = prim_to_cons({3.0, 0.0, 0.0, 1.0}, gas);
  const FaceStates fs = reconstruct_muscl(f, Direction::x, gas, 2);
  // local extremum: slope limited to zero, both faces of cell 2 keep the cell value
  EXPECT_DOUBLE_EQ(fs.left[fs.index(0, 3)].rho, 3.0);
  EXPECT_DOUBLE_EQ(fs.right[fs.index(0, 2)].rho, 3.0);
  for (int face = 0; face <= 5; ++face) {
    EXPECT_GE(fs.left[fs.index(0, face)].rho, 1.0);
    EXPECT_LE(fs.left[fs.index(0, face)].rho, 3.0);
  }
}

TEST(Grid, FirstOrderUsesCellValues) {
  const GasModel gas;
  test::Gen g(3);
  Field2D f(6, 4, 1.0, 1.0);
  for (int j = -2; j < 6; ++j)
    for (int i = -2; i < 8; ++i) f.at(i, j) = g.cons(gas);
  const FaceStates fx = reconstruct_muscl(f, Direction::x, gas, 1);
  const FaceStates fy = reconstruct_muscl(f, Direction::y, gas, 1);
  for (int j = 0; j < 4; ++j)
    for (int face = 0; face <= 6; ++face)
      EXPECT_DOUBLE_EQ(fx.left[fx.index(j, face)].rho, f.at(face - 1, j).rho);
  for (int i = 0; i < 6; ++i)
    for (int face = 0; face <= 4; ++face)
      EXPECT_DOUBLE_EQ(fy.right[fy.index(i, face)].rho, f.at(i, face).rho);
}

TEST(Grid, FaceValuesStayPositiveAcrossSteepDrop) {
  // minmod face values lie between neighbouring cell values, so positive
  // cells never need the zero-slope fallback
  const GasModel gas;
  Field2D f(3, 1, 1.0, 1.0);
  const double p[] = {100.0, 100.0, 1e-3, 1e-3, 1e-3, 1e-3, 1e-3};
  for (int i = -2; i < 5; ++i) f.at(i, 0) = prim_to_cons({1.0, 0.0, 0.0, p[i + 2]}, gas);
  f.at(0, 0) = prim_to_cons({1.0, 0.0, 0.0, 50.0}, gas);
  const FaceStates fs = reconstruct_muscl(f, Direction::x, gas, 2);
  for (int face = 0; face <= 3; ++face) {
    EXPECT_GT(fs.left[fs.index(0, face)].p, 0.0);
    EXPECT_GT(fs.right[fs.index(0, face)].p, 0.0);
  }
  EXPECT_EQ(fs.fallbacks, 0);
}

TEST(Grid, ComputeDt) {
  const GasModel gas;
  const ConservedState q = prim_to_cons({1.0, 0.0, 0.0, 1.0}, gas);
  Field2D f = test::uniform_field(4, 4, 1.0, 1.0, q);
  const double c = std::sqrt(1.4);
  EXPECT_NEAR(compute_dt(f, 0.45, gas), 0.45 / (2.0 * c), 1e-15);
  Field2D wide = test::uniform_field(4, 4, 2.0, 2.0, q);
  EXPECT_NEAR(compute_dt(wide, 0.45, gas), 2.0 * compute_dt(f, 0.45, gas), 1e-15);
  Field2D line = test::uniform_field(4, 1, 1.0, 1.0, q);
  EXPECT_NEAR(compute_dt(line, 0.45, gas), 0.45 / c, 1e-15);
}

TEST(Grid, ComputeDtNamesBadCell) {
  const GasModel gas;
  Field2D f = test::uniform_field(4, 3, 1.0, 1.0, prim_to_cons({1, 0, 0, 1}, gas));
  f.at(2, 1).rho = std::nan("");
  try {
    (void)compute_dt(f, 0.5, gas);
    FAIL() << "expected NonphysicalStateError";
  } catch (const NonphysicalStateError& e) {
    EXPECT_EQ(e.location().i, 2);
    EXPECT_EQ(e.location().j, 1);
  }
}

TEST(Grid, PeriodicGhosts) {
  const GasModel gas;
  Field2D f(5, 4, 1.0, 1.0);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 5; ++i) f.at(i, j) = {1.0 + i + 10.0 * j, 0.0, 0.0, 5.0};
  apply_boundaries(f, test::all_sides(BoundaryCondition::periodic()), gas, 0.0);
  for (int j = 0; j < 4; ++j) {
    EXPECT_EQ(f.at(-1, j), f.at(4, j));
    EXPECT_EQ(f.at(-2, j), f.at(3, j));
    EXPECT_EQ(f.at(5, j), f.at(0, j));
    EXPECT_EQ(f.at(6, j), f.at(1, j));
  }
  for (int i = -2; i < 7; ++i) {
    EXPECT_EQ(f.at(i, -1), f.at(i, 3));
    EXPECT_EQ(f.at(i, 4), f.at(i, 0));
    EXPECT_EQ(f.at(i, 5), f.at(i, 1));
  }
}

TEST(Grid, ReflectiveGhostsMirrorNormalMomentum) {
  const GasModel gas;
  Field2D f(3, 3, 1.0, 1.0);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) f.at(i, j) = {1.0 + i, 0.1 * (i + 1), 0.2 * (j + 1), 5.0 + j};
  apply_boundaries(f, test::all_sides(BoundaryCondition::reflective()), gas, 0.0);
  const ConservedState& in = f.at(1, 0);
  const ConservedState& gh = f.at(-2, 0);  // mirror of cell 1 across the left wall
  EXPECT_EQ(gh.rho, in.rho);
  EXPECT_EQ(gh.mx, -in.mx);
  EXPECT_EQ(gh.my, in.my);
  const ConservedState& top = f.at(2, 3);  // mirror of (2, 2) across the top
  EXPECT_EQ(top.my, -f.at(2, 2).my);
  EXPECT_EQ(top.mx, f.at(2, 2).mx);
}

TEST(Grid, DirichletOutflowAndCustom) {
  const GasModel gas;
  Field2D f(3, 2, 1.0, 1.0);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 3; ++i) f.at(i, j) = {1.0 + i, 0.0, 0.0, 5.0};
  BoundarySpec bc = test::all_sides(BoundaryCondition::outflow());
  bc[Side::left] = BoundaryCondition::dirichlet({2.0, 1.0, 0.0, 1.0});
  double seen_t = -1;
  bc[Side::top] = BoundaryCondition::custom("probe", [&](const GhostContext& c) {
    seen_t = c.t;
    return ConservedState{9.0, 0.0, 0.0, 9.0};
  });
  apply_boundaries(f, bc, gas, 0.75);
  EXPECT_EQ(f.at(-1, 0), prim_to_cons({2.0, 1.0, 0.0, 1.0}, gas));
  EXPECT_EQ(f.at(3, 1), f.at(2, 1));
  EXPECT_EQ(f.at(4, 1), f.at(2, 1));
  EXPECT_EQ(f.at(1, -2), f.at(1, 0));
  EXPECT_EQ(f.at(1, 2).rho, 9.0);
  EXPECT_EQ(seen_t, 0.75);
}

TEST(Grid, BoundarySpecValidation) {
  BoundarySpec bc = test::all_sides(BoundaryCondition::outflow());
  EXPECT_NO_THROW(bc.validate());
  bc[Side::left] = BoundaryCondition::periodic();
  EXPECT_THROW(bc.validate(), std::invalid_argument);
  bc[Side::right] = BoundaryCondition::periodic();
  EXPECT_NO_THROW(bc.validate());
  bc[Side::top] = BoundaryCondition::custom("nothing", {});
  EXPECT_THROW(bc.validate(), std::invalid_argument);
}
