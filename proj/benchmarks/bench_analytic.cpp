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

#include <vector>

#include "cutq/analytic.hpp"
#include "cutq/regular.hpp"
#include "cutq/rng.hpp"

namespace {

using namespace cutq;

struct Fixture {
    Graph graph;
    AnalyticEvaluator eval;
    std::vector<double> gamma, beta, alpha;

    Fixture(int n, int degree)
        : graph(generate_regular(n, degree, 1)), eval(graph) {
        Rng rng(2);
        gamma.resize(static_cast<std::size_t>(graph.edge_count()));
        beta.resize(static_cast<std::size_t>(graph.vertex_count()));
        alpha.resize(beta.size());
        for (auto& x : gamma) x = rng.uniform(0.0, 6.28);
        for (auto& x : beta) x = rng.uniform(0.0, 3.14);
        for (auto& x : alpha) x = rng.uniform(0.0, 3.14);
    }
};

void BM_FullMixerExpectation(benchmark::State& state) {
    Fixture fx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    AnalyticEvaluator::Workspace ws;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fx.eval.xy(fx.gamma, fx.beta, fx.alpha, ws));
    }
}
BENCHMARK(BM_FullMixerExpectation)->Args({256, 10})->Args({128, 3})->Args({32, 3});

void BM_TiedMixerExpectation(benchmark::State& state) {
    Fixture fx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    AnalyticEvaluator::Workspace ws;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fx.eval.xeqy(fx.gamma, fx.beta, ws));
    }
}
BENCHMARK(BM_TiedMixerExpectation)->Args({256, 10})->Args({32, 3})->Args({32, 6});

void BM_SharedAngleExpectation(benchmark::State& state) {
    Fixture fx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    AnalyticEvaluator::Workspace ws;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fx.eval.qaoa1(0.7, 0.3, ws));
    }
}
BENCHMARK(BM_SharedAngleExpectation)->Args({256, 10})->Args({128, 3});

void BM_EvaluatorConstruction(benchmark::State& state) {
    const Graph g = generate_regular(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
    for (auto _ : state) {
        AnalyticEvaluator eval(g);
        benchmark::DoNotOptimize(&eval);
    }
}
BENCHMARK(BM_EvaluatorConstruction)->Args({256, 10})->Args({32, 3});

}  // namespace
