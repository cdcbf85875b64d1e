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
#include <memory>
#include <span>
#include <vector>

#include "cutq/angles.hpp"
#include "cutq/graph.hpp"

namespace cutq {

/// Closed-form depth-1 expectation values of the cut operator for every
/// mixer family. Each edge's value depends only on the phase angles of its
/// neighboring edges, through cosine products over three index lists per
/// edge: the edges from v to its exclusive neighbors, the edges from u to its
/// exclusive neighbors, and paired edges to common neighbors.
///
/// The evaluator precomputes those lists once per graph; it is immutable and
/// safe to share across threads. Full-graph evaluations fill a table of
/// cos/sin of every edge's weighted phase angle and then combine entries per
/// edge, so total cost is linear in the sum of endpoint degrees; the
/// single-edge entry points compute their own neighborhood trig on the fly
/// and cost only that edge's degree sum. Products over empty lists are 1, so
/// an isolated edge reduces to the single-edge form.
///
/// Edge terms are accumulated in a fixed serial order inside each call, so
/// results never depend on the worker count around the evaluation
/// (cross-thread-count drift is exactly zero, well under the 1e-12 budget).
/// The referenced Graph must outlive the evaluator.
class AnalyticEvaluator {
  public:
    /// Reusable evaluation buffers. Callers that evaluate in a loop (the
    /// optimizer objectives) keep one per thread; the workspace-free
    /// overloads allocate a fresh one per call.
    struct Workspace {
        std::vector<double> cos_g, sin_g;
        std::vector<double> cos2b, sin2b, cos2a, sin2a;
    };

    explicit AnalyticEvaluator(const Graph& g);

    const Graph& graph() const { return *graph_; }

    /// Shared-angle family: one gamma, one beta.
    double qaoa1(double gamma, double beta, Workspace& ws) const;
    double qaoa1(double gamma, double beta) const;
    double qaoa1_edge(int edge, double gamma, double beta) const;

    /// Per-edge gamma, per-vertex beta.
    double ma(std::span<const double> gamma, std::span<const double> beta, Workspace& ws) const;
    double ma(std::span<const double> gamma, std::span<const double> beta) const;
    double ma_edge(int edge, std::span<const double> gamma, std::span<const double> beta) const;

    /// Per-edge gamma, independent per-vertex beta (X) and alpha (Y).
    double xy(std::span<const double> gamma, std::span<const double> beta, std::span<const double> alpha,
              Workspace& ws) const;
    double xy(std::span<const double> gamma, std::span<const double> beta,
              std::span<const double> alpha) const;
    double xy_edge(int edge, std::span<const double> gamma, std::span<const double> beta,
                   std::span<const double> alpha) const;

    /// Tied mixer: alpha == beta.
    double xeqy(std::span<const double> gamma, std::span<const double> beta, Workspace& ws) const;
    double xeqy(std::span<const double> gamma, std::span<const double> beta) const;

    /// Y rotations only (beta == 0).
    double y_only(std::span<const double> gamma, std::span<const double> alpha, Workspace& ws) const;
    double y_only(std::span<const double> gamma, std::span<const double> alpha) const;
    double y_only_edge(int edge, std::span<const double> gamma, std::span<const double> alpha) const;

    /// Dispatch on the assignment's variant; requires depth 1.
    double expectation(const AngleAssignment& a) const;
    double edge_expectation(int edge, const AngleAssignment& a) const;

    struct Table;

  private:
    const Graph* graph_;
    std::shared_ptr<const Table> table_;
};

/// One-shot conveniences; construct an evaluator internally.
double qaoa1_expectation(const Graph& g, double gamma, double beta);
double maqaoa1_expectation(const Graph& g, const AngleAssignment& a);
double xqaoa1_xy_expectation(const Graph& g, const AngleAssignment& a);
double xqaoa1_xeqy_expectation(const Graph& g, const AngleAssignment& a);
double xqaoa1_y_expectation(const Graph& g, const AngleAssignment& a);

/// Neighborhood sizes of one edge in an unweighted graph.
struct EdgeShape {
    int v_side = 0;
    int u_side = 0;
    int common = 0;
};

/// Depth-1 shared-angle edge expectation for unit weights, written directly
/// in terms of the neighborhood sizes.
double qaoa1_unweighted_edge(const EdgeShape& shape, double gamma, double beta);

/// Optimal depth-1 shared-angle performance on the star with k leaves:
/// the per-edge approximation ratio and the maximizing angles.
struct StarOptimum {
    double ratio = 0.0;
    double gamma = 0.0;
    double beta = 0.0;
};
StarOptimum star_qaoa1_optimum(int leaf_count);

}  // namespace cutq
