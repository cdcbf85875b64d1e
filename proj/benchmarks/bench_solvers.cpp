// Copyright 2026 The cutq Authors
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

#include <benchmark/benchmark.h>

#include "cutq/analytic.hpp"
#include "cutq/baselines.hpp"
#include "cutq/oracle.hpp"
#include "cutq/optimize.hpp"
#include "cutq/regular.hpp"

namespace {

using namespace cutq;

void BM_BruteForce(benchmark::State& state) {
    const Graph g = generate_regular(static_cast<int>(state.range(0)), 3, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_maxcut(g));
    }
}
BENCHMARK(BM_BruteForce)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_TiedMixerRun(benchmark::State& state) {
    const Graph g = generate_regular(32, 3, 9);
    const auto eval = std::make_shared<AnalyticEvaluator>(g);
    const int m = g.edge_count(), n = g.vertex_count();
    const Objective f = [eval, m, n](std::span<const double> x) {
        thread_local AnalyticEvaluator::Workspace ws;
        return eval->xeqy(x.subspan(0, static_cast<std::size_t>(m)),
                          x.subspan(static_cast<std::size_t>(m), static_cast<std::size_t>(n)), ws);
    };
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const std::vector<double> x0 = init_random(Variant::XeqY, g, seed++).free_parameters();
        benchmark::DoNotOptimize(lbfgs_maximize(f, x0, {}));
    }
}
BENCHMARK(BM_TiedMixerRun)->Unit(benchmark::kMillisecond);

void BM_GwSolve(benchmark::State& state) {
    const Graph g = generate_regular(static_cast<int>(state.range(0)), 3, 11);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gw_solve(g, 0, seed++));
    }
}
BENCHMARK(BM_GwSolve)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_RegularGeneration(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_regular(128, 3, seed++));
    }
}
BENCHMARK(BM_RegularGeneration)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
