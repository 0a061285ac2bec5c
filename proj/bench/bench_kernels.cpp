// Copyright 2026 The mgdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels.

#include <random>

#include <benchmark/benchmark.h>

#include "mgd/discord.hpp"
#include "mgd/measurement.hpp"
#include "mgd/reference.hpp"
#include "mgd/surface.hpp"

namespace {

mgd::DensityMatrix family_state(int n) {
  std::mt19937_64 rng(7);
  return mgd::to_density_matrix(
      mgd::PauliFamilyState::make(n, mgd::random_physical_coefficients(n, rng)));
}

template <bool Parallel>
void BM_ApplyChain(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const auto rho = family_state(n);
  std::mt19937_64 rng(11);
  const auto tree = mgd::MeasurementTree::random(n - 1, rng);
  for (auto _ : state) {
    auto post = Parallel ? mgd::apply_chain(rho, tree) : mgd::reference::apply_chain(rho, tree);
    benchmark::DoNotOptimize(post);
  }
}

void BM_MeasuredResidual(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const auto rho = family_state(n);
  std::mt19937_64 rng(13);
  const auto tree = mgd::MeasurementTree::random(n - 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mgd::measured_residual(rho.matrix(), tree));
}

template <bool Parallel>
void BM_MinimizeNumeric(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const auto rho = family_state(n);
  mgd::OptimizerConfig cfg;
  cfg.restarts = 16;
  for (auto _ : state) {
    auto r = Parallel ? mgd::minimize_numeric(rho, cfg) : mgd::reference::minimize_numeric(rho, cfg);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_LevelSurface(benchmark::State &state) {
  mgd::SurfaceGridSpec spec;
  spec.grid_resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto pts = Parallel ? mgd::level_surface(spec) : mgd::reference::level_surface(spec);
    benchmark::DoNotOptimize(pts);
  }
}

}  // namespace

BENCHMARK(BM_ApplyChain<false>)->Name("apply_chain/serial")->DenseRange(2, 6);
BENCHMARK(BM_ApplyChain<true>)->Name("apply_chain/omp")->DenseRange(2, 6);
BENCHMARK(BM_MeasuredResidual)->Name("measured_residual")->DenseRange(2, 6);
BENCHMARK(BM_MinimizeNumeric<false>)->Name("minimize_numeric/serial")->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimizeNumeric<true>)->Name("minimize_numeric/omp")->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelSurface<false>)->Name("level_surface/serial")->Arg(41)->Arg(81)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelSurface<true>)->Name("level_surface/omp")->Arg(41)->Arg(81)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
