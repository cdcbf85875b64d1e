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

#include "cutq/optimize.hpp"
#include "cutq/regular.hpp"
#include "cutq/statevector.hpp"

namespace {

using namespace cutq;

void BM_BuildState(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int depth = static_cast<int>(state.range(1));
    const Graph g = generate_regular(n, 3, 1);
    const AngleAssignment a = init_random(Variant::XeqY, g, 7, depth);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_state(g, a));
    }
}
BENCHMARK(BM_BuildState)->Args({16, 1})->Args({16, 3})->Args({20, 1});

void BM_Expectation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = generate_regular(n, 3, 1);
    const AngleAssignment a = init_random(Variant::XeqY, g, 7);
    const Statevector psi = build_state(g, a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expectation(psi, g));
    }
}
BENCHMARK(BM_Expectation)->Arg(16)->Arg(20);

void BM_Sample1024(benchmark::State& state) {
    const Graph g = generate_regular(16, 3, 1);
    const AngleAssignment a = init_random(Variant::XeqY, g, 7);
    const Statevector psi = build_state(g, a);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(psi, 1024, seed++));
    }
}
BENCHMARK(BM_Sample1024);

}  // namespace
