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
#include <optional>
#include <string>
#include <vector>

#include "cutq/graph.hpp"
#include "cutq/optimize.hpp"

namespace cutq {

/// Algorithms the harness can run. QaoaInformed is the shared-angle ansatz
/// started inside the plateau-free window; XeqYGammaZero freezes the phase
/// layer at zero and optimizes the mixer angles only.
enum class BenchAlgorithm : std::uint8_t {
    Qaoa,
    QaoaInformed,
    Ma,
    Xy,
    XeqY,
    YOnly,
    Cr,
    Gw,
    XeqYGammaZero,
};

const char* bench_algorithm_name(BenchAlgorithm a);
BenchAlgorithm bench_algorithm_from_name(const std::string& name);

/// One benchmark instance: generated from (n, degree, graph_seed) when path
/// is empty, otherwise loaded from path. recorded_optimum supplies a known
/// optimal cut for instances beyond the exact-solver cap.
struct InstanceSpec {
    std::string graph_id;
    int n = 0;
    int degree = 0;
    std::uint64_t graph_seed = 0;
    std::string path;
    std::optional<double> recorded_optimum;
};

InstanceSpec generated_instance(int n, int degree, std::uint64_t graph_seed);

struct CampaignConfig {
    std::vector<InstanceSpec> instances;
    std::vector<BenchAlgorithm> algorithms;
    int restarts = 50;
    std::uint64_t master_seed = 1;
    int workers = 1;
    OptimizerConfig optimizer;
    int gw_rank = 0;      // 0 = auto
    int gw_restarts = 5;
    std::string output_prefix;  // writes <prefix>.csv and <prefix>.json when set
};

/// One CSV row: one optimizer run (or one rounding trial for GW) on one
/// instance. `value` is the converged objective; `cut_value` is the rounded
/// or extracted solution where the algorithm produces one (NaN otherwise).
/// `ratio` divides the solution cut (or the expected value, for the
/// quantum-only ansatzes) by the instance optimum.
struct RunRow {
    std::string graph_id;
    int n = 0;
    int degree = 0;
    std::string algorithm;
    int p = 1;
    int run_index = 0;
    std::uint64_t seed = 0;
    double value = 0.0;
    double cut_value = 0.0;
    double optimum = 0.0;
    std::string optimum_kind;  // oracle | recorded | best-known
    double ratio = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

/// Per-(instance, algorithm) summary, including every run's ratio.
struct BenchmarkRecord {
    std::string graph_id;
    int n = 0;
    int degree = 0;
    std::string algorithm;
    int restarts = 0;
    std::uint64_t seed = 0;
    double best_value = 0.0;
    double best_cut_value = 0.0;
    double optimum = 0.0;
    std::string optimum_kind;
    double ratio = 0.0;  // best run's ratio
    double wall_time_ms = 0.0;
    std::vector<double> per_run_ratios;
};

struct CampaignResult {
    std::vector<RunRow> rows;          // sorted by (graph_id, algorithm, run)
    std::vector<BenchmarkRecord> records;
    std::string csv;                   // deterministic render of rows
    std::string summary_json;          // aggregates incl. wall time (not byte-stable)
};

/// Runs the configured algorithms over the instance set with the master-seed
/// fan-out: run seeds depend only on (master, graph_id, algorithm, run), so
/// adding an algorithm or instance leaves every other stream untouched.
/// Identical config and seed give a byte-identical CSV for any worker count;
/// wall times live only in the JSON summary.
CampaignResult run_variant_comparison(const CampaignConfig& config);

struct TransitionStudyConfig {
    std::vector<InstanceSpec> instances;
    int runs = 100;
    double snap_window = 0.15;  // distance counted as "at" a snap value
    bool gamma_zero_ablation = true;
    std::uint64_t master_seed = 1;
    int workers = 1;
    OptimizerConfig optimizer;
    std::string output_prefix;
};

struct TransitionRunRow {
    std::string graph_id;
    int run_index = 0;
    std::uint64_t seed = 0;
    bool converged = false;
    double value = 0.0;
    int gamma_within = 0;  // edges whose effective angle is within the window
    int gamma_count = 0;
    int beta_within = 0;
    int beta_count = 0;
    double max_gamma_distance = 0.0;
    double max_beta_distance = 0.0;
    double extracted_cut = 0.0;
    double snapped_objective = 0.0;  // analytic value at the snapped angles
    double extraction_error = 0.0;   // |extracted_cut - snapped_objective|
    int non_transitioned = 0;
};

struct TransitionStudyResult {
    std::vector<TransitionRunRow> rows;
    double gamma_within_fraction = 0.0;  // over converged runs, pooled angles
    double beta_within_fraction = 0.0;
    double max_extraction_error = 0.0;
    std::vector<int> gamma_distance_histogram;  // 32 bins over [0, pi]
    std::vector<int> beta_distance_histogram;   // 32 bins over [0, pi/2]
    // Distance-to-relaxation check: per-run cut ratios of the frozen-phase
    // ansatz and of the sine relaxation, when the ablation is enabled.
    std::vector<double> ablation_ratios;
    std::vector<double> cr_ratios;
    double ablation_median_gap = 0.0;
    std::string csv;
    std::string summary_json;
};

TransitionStudyResult run_transition_study(const TransitionStudyConfig& config);

struct DepthStudyConfig {
    std::vector<InstanceSpec> instances;
    int max_depth = 3;
    int restarts = 2;
    int shots = 0;  // 0 = exact simulator expectation; > 0 = sampled objective
    std::uint64_t master_seed = 1;
    int workers = 1;
    OptimizerConfig optimizer;
    std::string output_prefix;
};

struct DepthRunRow {
    std::string graph_id;
    int n = 0;
    int degree = 0;
    std::string algorithm;
    int p = 1;
    int run_index = 0;
    std::uint64_t seed = 0;
    double value = 0.0;
    double optimum = 0.0;
    std::string optimum_kind;
    double ratio = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
    bool warm_started = false;
};

struct DepthStudyResult {
    std::vector<DepthRunRow> rows;
    std::string csv;
    std::string summary_json;
};

/// Simulator-backed optimization of the shared-angle, per-angle, and tied
/// mixers for p = 1..max_depth. The shared-angle ansatz warm-starts each
/// depth from the previous best padded with an identity layer, so its best
/// value is nondecreasing in p up to optimizer tolerance.
DepthStudyResult run_depth_study(const DepthStudyConfig& config);

/// Linear-interpolated percentile (0 <= q <= 1) of an unsorted sample.
double percentile(std::vector<double> values, double q);

}  // namespace cutq
