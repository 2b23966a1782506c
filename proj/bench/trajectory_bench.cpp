// Copyright 2026 The gaussent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference against the OpenMP grid kernel on the figure presets.

#include "gaussent/trajectory.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace gaussent;

namespace {

Scenario scenario(Mode mode) {
    Scenario sc;
    sc.mode = mode;
    sc.state = InitialState(0.25, 1.0);
    sc.params.gamma1 = sc.params.gamma2 = 0.2;
    sc.params.omega0 = mode == Mode::Harmonic ? 1.0 : 0.0;
    return sc;
}

void BM_Serial(benchmark::State& state) {
    const Scenario sc = scenario(static_cast<Mode>(state.range(0)));
    const auto grid = uniform_grid(60.0, static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_trajectory_serial(sc, grid));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_Parallel(benchmark::State& state) {
    const Scenario sc = scenario(static_cast<Mode>(state.range(0)));
    const auto grid = uniform_grid(60.0, static_cast<std::size_t>(state.range(1)));
    omp_set_num_threads(static_cast<int>(state.range(2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_trajectory(sc, grid));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

} // namespace

BENCHMARK(BM_Serial)->ArgsProduct({{0, 1}, {2401}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)
    ->ArgsProduct({{0, 1}, {2401}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
