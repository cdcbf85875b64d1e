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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "cutq/analytic.hpp"
#include "cutq/graph.hpp"
#include "cutq/optimize.hpp"
#include "cutq/regular.hpp"
#include "cutq/rng.hpp"

namespace cutq {
namespace {

constexpr double kPi = 3.14159265358979323846;

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    return Graph(n, std::move(edges));
}

TEST(CgaGradient, ExactForQuadratics) {
    const Objective f = [](std::span<const double> x) { return x[0] * x[0]; };
    const std::vector<double> x{1.0};
    const auto g = cga_gradient(f, x, 1e-5);
    EXPECT_NEAR(g[0], 2.0, 1e-9);
}

TEST(CgaGradient, ZeroForConstants) {
    const Objective f = [](std::span<const double>) { return 3.25; };
    const std::vector<double> x{0.4, -1.0, 2.0};
    for (double gi : cga_gradient(f, x, 1e-6)) EXPECT_EQ(gi, 0.0);
}

TEST(CgaGradient, MatchesHigherOrderStencilOnTriangleObjective) {
    // Oracle: five-point stencil with fourth-order error.
    const Graph k3 = complete_graph(3);
    const auto eval = std::make_shared<AnalyticEvaluator>(k3);
    const Objective f = [eval](std::span<const double> x) { return eval->qaoa1(x[0], x[1]); };
    const std::vector<double> x{0.4, 0.3};
    const double h = 1e-4;
    const auto g = cga_gradient(f, x, h);
    for (std::size_t i = 0; i < 2; ++i) {
        auto at = [&](double delta) {
            std::vector<double> p(x);
            p[i] += delta;
            return f(p);
        };
        const double oracle = (8.0 * (at(h) - at(-h)) - (at(2.0 * h) - at(-2.0 * h))) / (12.0 * h);
        EXPECT_NEAR(g[i], oracle, 1e-7);
    }
}

TEST(CgaGradient, SecondOrderConvergence) {
    // Halving the step should cut the error against the high-order oracle by
    // about 4x; measured order must stay near 2.
    const Graph k3 = complete_graph(3);
    const auto eval = std::make_shared<AnalyticEvaluator>(k3);
    const Objective f = [eval](std::span<const double> x) { return eval->qaoa1(x[0], x[1]); };
    const std::vector<double> x{0.4, 0.3};

    auto error_vs_oracle = [&](double h) {
        const auto g = cga_gradient(f, x, h);
        double err = 0.0;
        for (std::size_t i = 0; i < 2; ++i) {
            auto at = [&](double delta) {
                std::vector<double> p(x);
                p[i] += delta;
                return f(p);
            };
            const double tiny = 1e-4;
            const double oracle =
                (8.0 * (at(tiny) - at(-tiny)) - (at(2.0 * tiny) - at(-2.0 * tiny))) / (12.0 * tiny);
            err = std::max(err, std::abs(g[i] - oracle));
        }
        return err;
    };

    double order_sum = 0.0;
    int count = 0;
    for (double h : {2e-2, 1e-2, 5e-3}) {
        const double e1 = error_vs_oracle(h);
        const double e2 = error_vs_oracle(h / 2.0);
        order_sum += std::log2(e1 / e2);
        ++count;
    }
    EXPECT_GE(order_sum / count, 1.9);
}

TEST(CgaGradient, NonFiniteObjectiveReportsCoordinate) {
    const Objective f = [](std::span<const double> x) {
        return x[1] > 0.5 ? std::numeric_limits<double>::infinity() : 0.0;
    };
    const std::vector<double> x{0.0, 0.5};
    try {
        cga_gradient(f, x, 1e-2);
        FAIL() << "expected a non-finite error";
    } catch (const NonFiniteObjectiveError& err) {
        EXPECT_EQ(err.coordinate(), 1);
    }
}

TEST(CgaGradient, WorkerCountDoesNotChangeGradient) {
    const Graph g = generate_regular(12, 3, 7);
    const auto eval = std::make_shared<AnalyticEvaluator>(g);
    const int m = g.edge_count(), n = g.vertex_count();
    const Objective f = [eval, m, n](std::span<const double> x) {
        thread_local AnalyticEvaluator::Workspace ws;
        return eval->xeqy(x.subspan(0, static_cast<std::size_t>(m)),
                          x.subspan(static_cast<std::size_t>(m), static_cast<std::size_t>(n)), ws);
    };
    Rng rng(3);
    std::vector<double> x(static_cast<std::size_t>(n + m));
    for (auto& xi : x) xi = rng.uniform(0.0, 2.0 * kPi);

    const auto serial = cga_gradient(f, x, 1e-6);
    ThreadPool pool(8);
    const auto parallel = cga_gradient(f, x, 1e-6, &pool);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) EXPECT_EQ(serial[i], parallel[i]);
}

TEST(Lbfgs, RosenbrockFromStandardStart) {
    const Objective f = [](std::span<const double> x) {
        const double a = 1.0 - x[0];
        const double b = x[1] - x[0] * x[0];
        return -(a * a + 100.0 * b * b);  // maximize the negated valley
    };
    OptimizerConfig cfg;
    cfg.grad_tolerance = 1e-8;
    const std::vector<double> x0{-1.2, 1.0};
    const OptimizationRun run = lbfgs_maximize(f, x0, cfg);
    EXPECT_TRUE(run.converged);
    EXPECT_NEAR(run.x_final[0], 1.0, 1e-6);
    EXPECT_NEAR(run.x_final[1], 1.0, 1e-6);
}

TEST(Lbfgs, SingleEdgeOptimum) {
    const Graph g(2, {{0, 1, 1.0}});
    const auto eval = std::make_shared<AnalyticEvaluator>(g);
    const Objective f = [eval](std::span<const double> x) { return eval->qaoa1(x[0], x[1]); };
    const std::vector<double> x0{0.3, 0.2};
    const OptimizationRun run = lbfgs_maximize(f, x0, {});
    EXPECT_NEAR(run.best_value, 1.0, 1e-8);
}

TEST(Lbfgs, TraceIsMonotoneAndConsistent) {
    const Objective f = [](std::span<const double> x) {
        return -(x[0] * x[0] + 0.5 * x[1] * x[1] + 0.1 * x[0] * x[1]);
    };
    const std::vector<double> x0{3.0, -2.0};
    const OptimizationRun run = lbfgs_maximize(f, x0, {});
    ASSERT_FALSE(run.objective_trace.empty());
    for (std::size_t i = 1; i < run.objective_trace.size(); ++i) {
        EXPECT_GE(run.objective_trace[i].second, run.objective_trace[i - 1].second);
        EXPECT_GE(run.objective_trace[i].first, run.objective_trace[i - 1].first);
    }
    EXPECT_NEAR(run.best_value, f(run.x_final), 1e-12);
    EXPECT_EQ(run.objective_trace.back().second, run.best_value);
}

TEST(Lbfgs, BudgetExhaustionIsNotAnError) {
    const Objective f = [](std::span<const double> x) { return -x[0] * x[0]; };
    OptimizerConfig cfg;
    cfg.max_evaluations = 7;
    const OptimizationRun run = lbfgs_maximize(f, std::vector<double>{5.0}, cfg);
    EXPECT_FALSE(run.converged);
    EXPECT_LE(run.evaluations, 7);
}

TEST(Lbfgs, DeterministicForFixedInputs) {
    const Graph g = generate_regular(10, 3, 13);
    const auto eval = std::make_shared<AnalyticEvaluator>(g);
    const int m = g.edge_count(), n = g.vertex_count();
    const Objective f = [eval, m, n](std::span<const double> x) {
        thread_local AnalyticEvaluator::Workspace ws;
        return eval->ma(x.subspan(0, static_cast<std::size_t>(m)),
                        x.subspan(static_cast<std::size_t>(m), static_cast<std::size_t>(n)), ws);
    };
    const AngleAssignment init = init_random(Variant::Ma, g, 5);
    const std::vector<double> x0 = init.free_parameters();
    const OptimizationRun a = lbfgs_maximize(f, x0, {});
    const OptimizationRun b = lbfgs_maximize(f, x0, {});
    EXPECT_EQ(a.best_value, b.best_value);
    EXPECT_EQ(a.evaluations, b.evaluations);
    EXPECT_EQ(a.objective_trace, b.objective_trace);
    ThreadPool pool(4);
    const OptimizationRun c = lbfgs_maximize(f, x0, {}, &pool);
    EXPECT_EQ(a.best_value, c.best_value);
    EXPECT_EQ(a.objective_trace, c.objective_trace);
}

TEST(Multistart, SingleRestartEqualsDirectRun) {
    const Objective f = [](std::span<const double> x) { return -(x[0] - 2.0) * (x[0] - 2.0); };
    const InitialPointSampler sampler = [](std::uint64_t seed) {
        Rng rng(seed);
        return std::vector<double>{rng.uniform(-5.0, 5.0)};
    };
    const MultistartResult ms = multistart(f, sampler, 1, 77, {});
    const OptimizationRun direct = lbfgs_maximize(f, sampler(derive_seed(77, 0)), {});
    EXPECT_EQ(ms.best.best_value, direct.best_value);
}

TEST(Multistart, PrefixProperty) {
    // Run k's seed depends only on (master, k): growing the restart count
    // never changes earlier runs, so the best value never decreases.
    const Graph g = generate_regular(12, 3, 19);
    const auto eval = std::make_shared<AnalyticEvaluator>(g);
    const Objective f = [eval](std::span<const double> x) { return eval->qaoa1(x[0], x[1]); };
    const InitialPointSampler sampler = [](std::uint64_t seed) {
        Rng rng(seed);
        return std::vector<double>{rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, kPi)};
    };
    const MultistartResult small = multistart(f, sampler, 4, 123, {});
    const MultistartResult large = multistart(f, sampler, 10, 123, {});
    for (std::size_t k = 0; k < small.runs.size(); ++k)
        EXPECT_EQ(small.runs[k].best_value, large.runs[k].best_value);
    EXPECT_GE(large.best.best_value, small.best.best_value);
}

TEST(Multistart, ParallelMatchesSerial) {
    const Graph g = generate_regular(10, 3, 23);
    const auto eval = std::make_shared<AnalyticEvaluator>(g);
    const Objective f = [eval](std::span<const double> x) { return eval->qaoa1(x[0], x[1]); };
    const InitialPointSampler sampler = [](std::uint64_t seed) {
        Rng rng(seed);
        return std::vector<double>{rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, kPi)};
    };
    const MultistartResult serial = multistart(f, sampler, 6, 321, {});
    ThreadPool pool(4);
    const MultistartResult parallel = multistart(f, sampler, 6, 321, {}, &pool);
    for (std::size_t k = 0; k < serial.runs.size(); ++k)
        EXPECT_EQ(serial.runs[k].best_value, parallel.runs[k].best_value);
}

TEST(Init, InformedWindow) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto [gamma, beta] = init_qaoa_informed(seed);
        EXPECT_GE(gamma, 0.0);
        EXPECT_LE(gamma, kPi / 4.0);
        EXPECT_GE(beta, 0.0);
        EXPECT_LE(beta, kPi / 4.0);
    }
}

TEST(Init, RandomAssignmentShapes) {
    std::vector<Edge> edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {0, 4, 1.0}, {0, 2, 1.0}};
    const Graph g(5, std::move(edges));  // n=5, m=6
    EXPECT_EQ(init_random(Variant::Ma, g, 1).free_parameters().size(), 11u);
    EXPECT_EQ(init_random(Variant::Xy, g, 1).free_parameters().size(), 16u);
    EXPECT_EQ(init_random(Variant::XeqY, g, 1).free_parameters().size(), 11u);
    EXPECT_EQ(init_random(Variant::YOnly, g, 1).free_parameters().size(), 11u);
    EXPECT_EQ(init_random(Variant::Qaoa, g, 1).free_parameters().size(), 2u);

    const AngleAssignment a = init_random(Variant::Xy, g, 9);
    for (int e = 0; e < g.edge_count(); ++e) {
        EXPECT_GE(a.gamma(0, e), 0.0);
        EXPECT_LT(a.gamma(0, e), 2.0 * kPi);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        EXPECT_GE(a.beta(0, v), 0.0);
        EXPECT_LT(a.beta(0, v), kPi);
        EXPECT_GE(a.alpha(0, v), 0.0);
        EXPECT_LT(a.alpha(0, v), kPi);
    }
}

TEST(Init, InformedBeatsRandomOnDenseRegular) {
    // Paired multistart on a 6-regular instance: the plateau-free window
    // should do at least as well as unrestricted random starts.
    const Graph g = generate_regular(32, 6, 41);
    const auto eval = std::make_shared<AnalyticEvaluator>(g);
    const Objective f = [eval](std::span<const double> x) {
        thread_local AnalyticEvaluator::Workspace ws;
        return eval->qaoa1(x[0], x[1], ws);
    };
    const InitialPointSampler informed = [](std::uint64_t seed) {
        const auto [gamma, beta] = init_qaoa_informed(seed);
        return std::vector<double>{gamma, beta};
    };
    const InitialPointSampler random = [](std::uint64_t seed) {
        Rng rng(derive_seed(seed, tag_hash("random-init")));
        return std::vector<double>{rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, kPi)};
    };
    ThreadPool pool(2);
    const MultistartResult a = multistart(f, informed, 50, 99, {}, &pool);
    const MultistartResult b = multistart(f, random, 50, 99, {}, &pool);
    EXPECT_GE(a.best.best_value, b.best.best_value - 1e-9);
}

TEST(Powell, QuadraticBowl) {
    const Objective f = [](std::span<const double> x) {
        return -((x[0] - 1.0) * (x[0] - 1.0) + 2.0 * (x[1] + 0.5) * (x[1] + 0.5));
    };
    OptimizerConfig cfg;
    cfg.max_evaluations = 20000;
    const OptimizationRun run = powell_maximize(f, std::vector<double>{4.0, 4.0}, cfg);
    EXPECT_NEAR(run.x_final[0], 1.0, 1e-3);
    EXPECT_NEAR(run.x_final[1], -0.5, 1e-3);
}

}  // namespace
}  // namespace cutq
