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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cutq/angles.hpp"
#include "cutq/graph.hpp"
#include "cutq/parallel.hpp"

namespace cutq {

/// Objective to maximize. Must be a pure function: evaluations are issued
/// concurrently from the gradient pool.
using Objective = std::function<double(std::span<const double>)>;

/// Thrown when an evaluation comes back non-finite during a gradient stencil.
class NonFiniteObjectiveError : public std::runtime_error {
  public:
    NonFiniteObjectiveError(int coordinate, double value);
    int coordinate() const { return coordinate_; }

  private:
    int coordinate_;
};

struct OptimizerConfig {
    int memory = 10;                 // LBFGS history length
    double grad_step = 1e-6;         // base central-difference step
    bool scale_grad_step = true;     // per-coordinate h_i = grad_step * max(1, |x_i|)
    double grad_tolerance = 1e-6;    // stop when max_i |g_i| <= tolerance
    std::int64_t max_evaluations = 100000;  // objective-call budget
    int workers = 1;                 // concurrent evaluations in the gradient pool
};

struct OptimizationRun {
    std::vector<double> x0;
    std::vector<double> x_final;  // best point seen
    std::vector<std::pair<std::int64_t, double>> objective_trace;  // (evals, best-so-far)
    double best_value = 0.0;
    bool converged = false;
    double gradient_norm_final = 0.0;  // max-norm at the last gradient
    std::uint64_t seed = 0;
    std::int64_t evaluations = 0;
    double wall_time_ms = 0.0;
};

/// Central-difference gradient: g_i = (f(x + h_i e_i) - f(x - h_i e_i)) / (2 h_i).
/// The 2n evaluations run concurrently on `pool` when given; results land in
/// per-coordinate slots, so the gradient is identical for any worker count.
std::vector<double> cga_gradient(const Objective& f, std::span<const double> x, double step,
                                 ThreadPool* pool = nullptr);
std::vector<double> cga_gradient(const Objective& f, std::span<const double> x,
                                 std::span<const double> step_per_coordinate, ThreadPool* pool = nullptr);

/// Maximizes f by limited-memory BFGS on the negated objective with
/// central-difference gradients and a strong-Wolfe line search. Terminates
/// when the gradient max-norm reaches cfg.grad_tolerance (converged = true)
/// or the evaluation budget runs out (converged = false, best point kept).
OptimizationRun lbfgs_maximize(const Objective& f, std::span<const double> x0, const OptimizerConfig& cfg,
                               ThreadPool* pool = nullptr, std::uint64_t seed = 0);

/// Draws an initial point for run index k from the master seed.
using InitialPointSampler = std::function<std::vector<double>(std::uint64_t run_seed)>;

struct MultistartResult {
    OptimizationRun best;              // argmax over runs (ties: lowest run index)
    std::vector<OptimizationRun> runs;
};

/// Independent seeded restarts, executed concurrently. Run k's seed depends
/// only on (seed, k), so growing the restart count extends the sequence
/// without perturbing earlier runs.
MultistartResult multistart(const Objective& f, const InitialPointSampler& sampler, int restarts,
                            std::uint64_t seed, const OptimizerConfig& cfg, ThreadPool* pool = nullptr);

/// Initial angles inside the plateau-free window near the origin.
std::pair<double, double> init_qaoa_informed(std::uint64_t seed);

/// Random initial assignment: phase angles uniform over [0, 2*pi), mixer
/// angles uniform over [0, pi), shaped to the variant's free parameters.
AngleAssignment init_random(Variant variant, const Graph& g, std::uint64_t seed, int depth = 1);

/// Derivative-free maximizer (Powell's conjugate directions with a bracketed
/// 1-D search). Hook for shot-noise objectives where finite differences are
/// meaningless; not used on exact objectives.
OptimizationRun powell_maximize(const Objective& f, std::span<const double> x0, const OptimizerConfig& cfg,
                                std::uint64_t seed = 0);

}  // namespace cutq
