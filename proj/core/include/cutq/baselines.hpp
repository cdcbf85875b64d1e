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
#include <vector>

#include "cutq/angles.hpp"
#include "cutq/graph.hpp"
#include "cutq/optimize.hpp"

namespace cutq {

enum class RelaxationKind : std::uint8_t { ClassicalRelaxed, GoemansWilliamson };

/// Continuous relaxation state: per-vertex angles for the sine relaxation,
/// or per-vertex unit vectors (rank-r factorization) for the vector program.
struct RelaxedSolution {
    RelaxationKind kind = RelaxationKind::ClassicalRelaxed;
    std::vector<double> theta;    // ClassicalRelaxed
    std::vector<double> vectors;  // GoemansWilliamson: row-major n x rank, rows unit-norm
    int rank = 0;
    double objective_value = 0.0;
    bool converged = true;
};

/// The relaxed objective sum_{uv} (w/2)(1 - sin(theta_u) sin(theta_v)).
double classical_relaxed_objective(const Graph& g, std::span<const double> theta);

/// Maximizes the sine relaxation by multistart LBFGS and rounds each run by
/// the sign of sin(theta). Returns the relaxation state and rounded cut of
/// the run with the best rounded cut (ties: higher relaxed objective).
std::pair<RelaxedSolution, CutResult> classical_relaxed(const Graph& g, int restarts, std::uint64_t seed,
                                                        const OptimizerConfig& cfg = {},
                                                        ThreadPool* pool = nullptr);

/// Solves the cut vector program max sum (w/2)(1 - v_u . v_v) over unit
/// vectors by low-rank factorization: raw coordinates are optimized with the
/// shared LBFGS engine and normalized onto the sphere inside the objective.
/// rank <= 0 picks ceil(sqrt(2n)) + 1. Multiple seeded restarts are run and
/// the best kept; non-convergence is reported through the flag, not thrown.
RelaxedSolution gw_solve(const Graph& g, int rank, std::uint64_t seed, int restarts = 5,
                         const OptimizerConfig& cfg = {}, ThreadPool* pool = nullptr);

/// One hyperplane rounding trial per draw: a standard Gaussian vector r
/// assigns vertex u to side [r . v_u >= 0]. Returns the best cut and every
/// trial's value.
std::pair<CutResult, std::vector<double>> gw_round(const Graph& g, const RelaxedSolution& sol, int trials,
                                                   std::uint64_t seed, ThreadPool* pool = nullptr);

/// Rounding guarantee data for a solved relaxation.
struct GwCertificate {
    double sdp_value = 0.0;       // relaxed objective at the solution
    double expected_cut = 0.0;    // sum over edges of w * angle / pi
    double guarantee_constant = 0.0;  // min over theta of (2/pi) theta / (1 - cos theta)
    double worst_angle = 0.0;         // the minimizing theta
};

GwCertificate gw_certificate(const Graph& g, const RelaxedSolution& sol);

/// The rounding constant and its minimizing angle, found numerically.
std::pair<double, double> gw_guarantee_constant();

/// Classical readout of a converged X=Y run. Each edge's effective phase
/// angle (gamma * w, mod 2*pi) is snapped to the nearest of {0, pi, 2*pi};
/// a vertex flips once per incident snapped-pi edge, and the flip parity
/// together with beta snapped to pi/4 or 3*pi/4 fixes its bit.
struct ExtractedCut {
    CutResult cut;
    std::vector<int> non_transitioned;  // vertices whose beta sat > pi/8 from both snap points
    std::vector<double> snapped_gamma;  // per edge, in {0, pi, 2*pi} (effective angle)
    std::vector<double> snapped_beta;   // per vertex, in {pi/4, 3*pi/4}
};

ExtractedCut extract_cut_xeqy(const Graph& g, const AngleAssignment& a);

}  // namespace cutq
