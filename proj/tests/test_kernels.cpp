#include <gtest/gtest.h>
#include <omp.h>

#include <cstring>
#include <vector>

#include "roe2d/kernels.hpp"
#include "roe2d/testcases.hpp"
#include "test_util.hpp"

using namespace roe2d;

namespace {

bool bitwise_equal(std::span<const ConservedState> a, std::span<const ConservedState> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size_bytes()) == 0;
}

Field2D random_field(int nx, int ny, std::uint64_t seed, const GasModel& gas) {
  test::Gen g(seed);
  Field2D f(nx, ny, 0.1, 0.07);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) f.at(i, j) = g.cons(gas);
  apply_boundaries(f, test::all_sides(BoundaryCondition::periodic()), gas, 0.0);
  return f;
}

class KernelsAgree : public ::testing::TestWithParam<std::tuple<int, WaveModel, int>> {};

}  // namespace

TEST_P(KernelsAgree, SerialAndParallelAreBitwiseEqual) {
  const auto [order, mode, threads] = GetParam();
  SchemeSettings s;
  s.order = order;
  s.model.mode = mode;
  const Field2D q = random_field(37, 23, 99 + order, s.gas);
  const std::size_t n = 37 * 23;

  std::vector<ConservedState> ref(n), par(n);
  KernelStats st_ref, st_par;
  kernels::serial::flux_divergence(q, s, ref, &st_ref);

  const int saved = omp_get_max_threads();
  omp_set_num_threads(threads);
  kernels::flux_divergence(q, s, par, &st_par);
  omp_set_num_threads(saved);
  EXPECT_TRUE(bitwise_equal(ref, par));
  EXPECT_EQ(st_ref.reconstruction_fallbacks, st_par.reconstruction_fallbacks);

  Field2D out_ref = q, out_par = q;
  kernels::serial::euler_update(q, ref, 1e-3, out_ref);
  omp_set_num_threads(threads);
  kernels::euler_update(q, par, 1e-3, out_par);
  Field2D c_ref = q, c_par = q;
  kernels::ssp2_combine(q, out_par, par, 1e-3, c_par);
  omp_set_num_threads(saved);
  kernels::serial::ssp2_combine(q, out_ref, ref, 1e-3, c_ref);
  EXPECT_TRUE(bitwise_equal(out_ref.raw(), out_par.raw()));
  EXPECT_TRUE(bitwise_equal(c_ref.raw(), c_par.raw()));
}

INSTANTIATE_TEST_SUITE_P(
    OrdersModesThreads, KernelsAgree,
    ::testing::Combine(::testing::Values(1, 2),
                       ::testing::Values(WaveModel::standard, WaveModel::low_diss,
                                         WaveModel::blend_geometric),
                       ::testing::Values(1, 2, 3, 7)));

TEST(Kernels, OneDimensionalFieldHasNoYFlux) {
  const GasModel gas;
  SchemeSettings s;
  s.order = 2;
  test::Gen g(5);
  Field2D f(12, 1, 0.1, 0.1);
  for (int i = 0; i < 12; ++i) f.at(i, 0) = g.cons(gas);
  // ghost rows disagree wildly; a 1D field must ignore them
  BoundarySpec bc = test::all_sides(BoundaryCondition::outflow());
  bc[Side::bottom] = BoundaryCondition::dirichlet({9.0, 3.0, -4.0, 7.0});
  bc[Side::top] = BoundaryCondition::dirichlet({0.2, -3.0, 4.0, 0.1});
  apply_boundaries(f, bc, gas, 0.0);
  std::vector<ConservedState> a(12), b(12);
  kernels::serial::flux_divergence(f, s, a);
  apply_boundaries(f, test::all_sides(BoundaryCondition::outflow()), gas, 0.0);
  kernels::serial::flux_divergence(f, s, b);
  EXPECT_TRUE(bitwise_equal(a, b));
}

TEST(Kernels, UniformStateHasZeroDivergence) {
  const GasModel gas;
  SchemeSettings s;
  s.order = 2;
  s.model.mode = WaveModel::blend_arithmetic;
  Field2D f = test::uniform_field(9, 7, 0.3, 0.2, prim_to_cons({1.3, 0.7, -0.4, 2.1}, gas));
  apply_boundaries(f, test::all_sides(BoundaryCondition::periodic()), gas, 0.0);
  std::vector<ConservedState> rhs(63);
  kernels::flux_divergence(f, s, rhs);
  for (const auto& r : rhs) {
    EXPECT_EQ(r.rho, 0.0);
    EXPECT_EQ(r.mx, 0.0);
    EXPECT_EQ(r.my, 0.0);
    EXPECT_EQ(r.E, 0.0);
  }
}

TEST(Kernels, FirstInvalidCellIsRowMajor) {
  const GasModel gas;
  Field2D f = test::uniform_field(5, 4, 1.0, 1.0, prim_to_cons({1, 0, 0, 1}, gas));
  EXPECT_EQ(kernels::first_invalid_cell(f, gas), std::make_pair(-1, -1));
  f.at(3, 2).E = -1.0;
  f.at(1, 3).rho = -1.0;
  EXPECT_EQ(kernels::first_invalid_cell(f, gas), std::make_pair(3, 2));
  EXPECT_EQ(kernels::serial::first_invalid_cell(f, gas), std::make_pair(3, 2));
}
