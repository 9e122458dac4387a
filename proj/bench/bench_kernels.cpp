// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference against the OpenMP kernels. Set OMP_NUM_THREADS to vary
// the thread count.

#include <benchmark/benchmark.h>

#include "xeop/eigensolve.hpp"
#include "xeop/grid.hpp"
#include "xeop/potentials.hpp"

namespace {

const xeop::OscillatorModel& model() {
  static const xeop::OscillatorModel M(1.0, 3, 0, 2);
  return M;
}

xeop::RadialGrid grid(const benchmark::State& state) {
  return {1e-4, 20.0, static_cast<std::size_t>(state.range(0))};
}

void BM_SampleSerial(benchmark::State& state) {
  const auto g = grid(state);
  const auto V = xeop::solver_potential(model());
  for (auto _ : state) benchmark::DoNotOptimize(xeop::sample_on_grid_serial(V, g));
}

void BM_SampleParallel(benchmark::State& state) {
  const auto g = grid(state);
  const auto V = xeop::solver_potential(model());
  for (auto _ : state) benchmark::DoNotOptimize(xeop::sample_on_grid(V, g));
}

void BM_HamiltonianSerial(benchmark::State& state) {
  const auto g = grid(state);
  const auto V = xeop::solver_potential(model());
  for (auto _ : state) benchmark::DoNotOptimize(xeop::build_hamiltonian_serial(V, g));
}

void BM_HamiltonianParallel(benchmark::State& state) {
  const auto g = grid(state);
  const auto V = xeop::solver_potential(model());
  for (auto _ : state) benchmark::DoNotOptimize(xeop::build_hamiltonian(V, g));
}

void BM_EigenpairsSerial(benchmark::State& state) {
  const auto H = xeop::build_hamiltonian(xeop::solver_potential(model()), grid(state));
  for (auto _ : state) benchmark::DoNotOptimize(xeop::lowest_eigenpairs_serial(H, 8));
}

void BM_EigenpairsParallel(benchmark::State& state) {
  const auto H = xeop::build_hamiltonian(xeop::solver_potential(model()), grid(state));
  for (auto _ : state) benchmark::DoNotOptimize(xeop::lowest_eigenpairs(H, 8));
}

}  // namespace

BENCHMARK(BM_SampleSerial)->Arg(4000)->Arg(64000);
BENCHMARK(BM_SampleParallel)->Arg(4000)->Arg(64000);
BENCHMARK(BM_HamiltonianSerial)->Arg(4000)->Arg(64000);
BENCHMARK(BM_HamiltonianParallel)->Arg(4000)->Arg(64000);
BENCHMARK(BM_EigenpairsSerial)->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EigenpairsParallel)->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
