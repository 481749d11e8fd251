#include <gtest/gtest.h>

#include <cmath>

#include "roe2d/diagnostics.hpp"
#include "test_util.hpp"

using namespace roe2d;

namespace {

const GasModel kGas;

ConservedState cell(double rho, double u, double v, double p = 1.0) {
  return prim_to_cons({rho, u, v, p}, kGas);
}

}  // namespace

TEST(Diagnostics, MaxAbsAndDifference) {
  Field2D a = test::uniform_field(5, 3, 1.0, 1.0, cell(1, 0, 0.5));
  a.at(3, 2) = cell(1, 0, -2.0);
  EXPECT_DOUBLE_EQ(max_abs(a, Quantity::transverse_velocity, kGas), 2.0);
  Field2D b = a;
  b.at(0, 1).E += 0.25;
  EXPECT_DOUBLE_EQ(max_difference(a, b), 0.25);
  EXPECT_EQ(max_difference(a, a), 0.0);
}

TEST(Diagnostics, OscillationWindow) {
  Field2D f = test::uniform_field(10, 2, 1.0, 1.0, cell(1, 0, 0));
  f.at(1, 0) = cell(3, 0, 0);  // x = 1.5, outside [3, 8]
  f.at(4, 1) = cell(1.5, 0, 0);
  f.at(6, 0) = cell(0.75, 0, 0);
  EXPECT_DOUBLE_EQ(oscillation_amplitude(f, Quantity::density, kGas, 3.0, 8.0), 0.75);
  EXPECT_TRUE(std::isnan(oscillation_amplitude(f, Quantity::density, kGas, 20.0, 30.0)));
}

TEST(Diagnostics, ShearWidthCountsSlowCells) {
  Field2D f(8, 1, 1.0, 1.0);
  const double v[] = {-1, -1, -0.95, -0.3, 0.2, 0.89, 1, 1};
  for (int i = 0; i < 8; ++i) f.at(i, 0) = cell(1, 0, v[i]);
  EXPECT_EQ(shear_layer_width(f, kGas), 3);
}

TEST(Diagnostics, DensityFronts) {
  Field2D f(6, 1, 1.0, 1.0);
  const double rho[] = {1, 1, 4, 4, 1, 1};
  for (int i = 0; i < 6; ++i) f.at(i, 0) = cell(rho[i], 0, 0);
  EXPECT_EQ(rising_density_face(f, 0, 2.0), 2);
  EXPECT_EQ(rightmost_above(f, 0, 2.0), 3);
  EXPECT_EQ(rightmost_above(f, 0, 5.0), -1);
  EXPECT_FALSE(rising_density_face(f, 0, 5.0).has_value());
}

TEST(Diagnostics, CollidingOscillationSkipsEdgesAndCentre) {
  Field2D f = test::uniform_field(40, 1, 1.0, 1.0, cell(2, 0, 0));
  f.at(2, 0) = cell(9, 0, 0);   // edge
  f.at(21, 0) = cell(9, 0, 0);  // centre
  f.at(10, 0) = cell(2.5, 0, 0);
  EXPECT_DOUBLE_EQ(colliding_oscillation(f, 5), 0.5);
}

TEST(Diagnostics, RunningShockOscillationUsesThePlateau) {
  // plateau on [0, 60), quiescent gas to the right; wiggle inside [30, 40]
  Field2D f = test::uniform_field(100, 2, 1.0, 1.0, cell(1, 0, 0));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 60; ++i) f.at(i, j) = cell(4, 0, 0);
  f.at(35, 1) = cell(4.2, 0, 0);
  f.at(10, 0) = cell(9, 0, 0);  // left of x_s / 2, ignored
  EXPECT_NEAR(running_shock_oscillation(f, kGas, 3.0), 0.2, 1e-12);
}

TEST(Diagnostics, FrontDistortionOfStraightAndKinkedFronts) {
  // oblique front x = 10 + j cells: lies on a line
  Field2D f = test::uniform_field(40, 10, 1.0, 1.0, cell(1, 0, 0));
  for (int j = 0; j < 10; ++j)
    for (int i = 0; i <= 10 + j; ++i) f.at(i, j) = cell(5, 0, 0);
  EXPECT_NEAR(front_distortion(f, 10.0, 2.0), 0.0, 1e-12);

  // bulge the bottom three rows forward by 6 cells
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i <= 16 + j; ++i) f.at(i, j) = cell(5, 0, 0);
  const double kinked = front_distortion(f, 10.0, 2.0);
  EXPECT_GT(kinked, 2.0);
  // the rows above y_max do not enter
  EXPECT_NEAR(front_distortion(f, 3.0, 2.0), 0.0, 1e-12);
  EXPECT_TRUE(std::isnan(front_distortion(f, 10.0, 50.0)));
}

TEST(Diagnostics, SignedRhoVRuns) {
  Field2D f = test::uniform_field(20, 1, 0.5, 1.0, cell(1, 0, 0));
  const auto set = [&](int i, double rv) { f.at(i, 0) = cell(1, 0, rv); };
  set(0, -10);  // x = 0.25, outside the window
  set(4, -6);
  set(5, -8);
  set(7, -7);  // one weak cell in between: merged with gap 2
  set(6, -1);
  set(12, 9);
  set(13, 12);
  set(15, -5);
  const auto runs = rho_v_regions(f, 0, 5.0, 1.0, 9.0);
  ASSERT_EQ(runs.size(), 3u);
  EXPECT_EQ(runs[0].sign, -1);
  EXPECT_DOUBLE_EQ(runs[0].x_begin, 2.25);
  EXPECT_DOUBLE_EQ(runs[0].x_end, 3.75);
  EXPECT_EQ(runs[1].sign, 1);
  EXPECT_DOUBLE_EQ(runs[1].x_begin, 6.25);
  EXPECT_DOUBLE_EQ(runs[1].x_end, 6.75);
  EXPECT_EQ(runs[2].sign, -1);
  EXPECT_DOUBLE_EQ(runs[2].x_begin, 7.75);
  // gap 0: the weak cell splits the first run
  EXPECT_EQ(rho_v_regions(f, 0, 5.0, 1.0, 9.0, 0).size(), 4u);
}

TEST(Diagnostics, SummaryColumns) {
  Field2D f = test::uniform_field(30, 1, 1.0, 1.0, cell(1, 0, 0.125));
  const CaseSummary plain = summarize("shear_1d", f, kGas);
  EXPECT_DOUBLE_EQ(plain.max_abs_v, 0.125);
  EXPECT_TRUE(std::isnan(plain.oscillation));
  EXPECT_EQ(summarize("colliding_1d", f, kGas).oscillation, 0.0);
}
