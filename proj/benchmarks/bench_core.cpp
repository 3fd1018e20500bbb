#include <benchmark/benchmark.h>

#include "dicke3/dicke3.hpp"

using namespace dicke3;

static void BM_HamiltonianAssembly(benchmark::State& state) {
  const SystemParams p{1.0, 0.2, 1.0, 0.7, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_matrix(p));
}
BENCHMARK(BM_HamiltonianAssembly)->Arg(40)->Arg(160);

static void BM_LowSpectrum(benchmark::State& state) {
  const SystemParams p{1.0, 0.0, 1.0, 1.0, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(low_spectrum(p, 8));
}
BENCHMARK(BM_LowSpectrum)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

static void BM_GroundState(benchmark::State& state) {
  const SystemParams p{10.0, 0.0, 1.0, 1.0, 60};
  for (auto _ : state) benchmark::DoNotOptimize(ground_state(p));
}
BENCHMARK(BM_GroundState)->Unit(benchmark::kMillisecond);

static void BM_Wigner(benchmark::State& state) {
  const SystemParams p{10.0, 0.0, 1.0, 1.0, 40};
  const auto rho = partial_trace(ground_state(p).state, Keep::oscillator);
  GridSpec g = GridSpec::for_coupling(1.0, 1.0);
  g.nx = g.np = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wigner_function(rho, g));
}
BENCHMARK(BM_Wigner)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);

static void BM_QFunction(benchmark::State& state) {
  const SystemParams p{10.0, 0.0, 1.0, 1.0, 40};
  const auto rho = partial_trace(ground_state(p).state, Keep::oscillator);
  const GridSpec g = GridSpec::for_coupling(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(q_function(rho, g));
}
BENCHMARK(BM_QFunction)->Unit(benchmark::kMillisecond);

static void BM_DisplacedOverlap(benchmark::State& state) {
  for (auto _ : state) {
    double s = 0.0;
    for (int m = 0; m <= 20; ++m) {
      for (int n = 0; n <= 20; ++n) s += displaced_overlap(m, n, 1.3);
    }
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_DisplacedOverlap);

static void BM_DisplacementMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(displacement_operator(1.3, 40));
}
BENCHMARK(BM_DisplacementMatrix)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
