// Serial reference vs OpenMP flux divergence on a DMR-sized field, plus one
// full step. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "roe2d/kernels.hpp"
#include "roe2d/solver.hpp"
#include "roe2d/testcases.hpp"

using namespace roe2d;

namespace {

struct Setup {
  Field2D field;
  SchemeSettings scheme;
  BoundarySpec bc;
};

Setup make_setup(int nx, WaveModel m, int order) {
  const GasModel gas;
  TestCase tc = make_case("colliding_2d", gas);
  tc.nx = nx;
  tc.ny = nx / 2;
  tc.noise.amplitude = 1e-3;
  Setup s{initial_field(tc, gas, 7), {}, tc.bc};
  s.scheme.model.mode = m;
  s.scheme.order = order;
  return s;
}

template <bool Serial>
void BM_FluxDivergence(benchmark::State& state) {
  const auto m = static_cast<WaveModel>(state.range(1));
  const Setup s = make_setup(static_cast<int>(state.range(0)), m, static_cast<int>(state.range(2)));
  std::vector<ConservedState> rhs(static_cast<std::size_t>(s.field.nx()) * s.field.ny());
  for (auto _ : state) {
    if constexpr (Serial)
      kernels::serial::flux_divergence(s.field, s.scheme, rhs);
    else
      kernels::flux_divergence(s.field, s.scheme, rhs);
    benchmark::DoNotOptimize(rhs.data());
  }
  state.SetItemsProcessed(state.iterations() * s.field.nx() * s.field.ny());
  state.counters["threads"] = Serial ? 1 : kernel_threads();
}

void BM_Step(benchmark::State& state) {
  Setup s = make_setup(static_cast<int>(state.range(0)), WaveModel::blend_geometric, 2);
  Stepper stepper(s.bc, s.scheme, state.range(1) != 0);
  const double dt = 0.1 * stepper.stable_dt(s.field, 0.45);
  long k = 0;
  for (auto _ : state) {
    Field2D q = s.field;
    stepper.step(q, 0.0, dt, k++);
    benchmark::DoNotOptimize(q.at(0, 0));
  }
  state.SetItemsProcessed(state.iterations() * s.field.nx() * s.field.ny());
}

void flux_args(benchmark::internal::Benchmark* b) {
  b->ArgNames({"nx", "mode", "order"});
  for (int nx : {128, 480})
    for (WaveModel m : {WaveModel::standard, WaveModel::blend_geometric})
      for (int order : {1, 2}) b->Args({nx, static_cast<int>(m), order});
}

}  // namespace

BENCHMARK(BM_FluxDivergence<true>)->Name("flux_divergence/serial")->Apply(flux_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FluxDivergence<false>)->Name("flux_divergence/omp")->Apply(flux_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Step)->ArgNames({"nx", "serial"})->Args({480, 1})->Args({480, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
