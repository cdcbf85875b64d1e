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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutq/analytic.hpp"
#include "cutq/baselines.hpp"
#include "cutq/bench.hpp"
#include "cutq/graph_io.hpp"
#include "cutq/oracle.hpp"
#include "cutq/regular.hpp"
#include "cutq/rng.hpp"
#include "cutq/statevector.hpp"

namespace {

using namespace cutq;

std::string assignment_string(const std::vector<std::uint8_t>& side) {
    std::string s;
    s.reserve(side.size());
    for (std::uint8_t b : side) s.push_back(b ? '1' : '0');
    return s;
}

Graph obtain_graph(const std::string& path, int n, int degree, std::uint64_t seed) {
    if (!path.empty()) return load_edge_list_file(path).graph;
    if (n <= 0 || degree <= 0)
        throw std::runtime_error("either --graph or both --n and --degree are required");
    return generate_regular(n, degree, seed);
}

void emit(const nlohmann::json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << j.dump(2) << "\n";
}

std::vector<InstanceSpec> make_instances(const std::string& graph_path, int n, int degree, int count,
                                         std::uint64_t master_seed) {
    std::vector<InstanceSpec> specs;
    if (!graph_path.empty()) {
        InstanceSpec spec;
        spec.graph_id = graph_path;
        spec.path = graph_path;
        specs.push_back(std::move(spec));
        return specs;
    }
    for (int i = 0; i < count; ++i)
        specs.push_back(generated_instance(n, degree, derive_seed(master_seed, tag_hash("instances")) + i));
    return specs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MaxCut variational ansatz toolkit: closed-form depth-1 expectation values, a dense "
                 "statevector simulator, classical relaxations, and benchmark campaigns."};
    app.require_subcommand(1);

    std::string graph_path, out;
    int n = 0, degree = 0, restarts = 50, depth = 1, shots = 0, workers = 1, instances = 10, trials = 1000;
    std::uint64_t seed = 1;
    std::string variant = "xeqy";
    std::string format = "csv";
    double grad_tol = 1e-6, grad_step = 1e-6;
    std::int64_t max_evals = 100000;

    auto add_common = [&](CLI::App* cmd, bool with_variant = false) {
        cmd->add_option("--graph", graph_path, "edge-list file (.csv or .json)");
        cmd->add_option("--n", n, "vertex count for generated graphs");
        cmd->add_option("--degree", degree, "degree for generated regular graphs");
        cmd->add_option("--seed", seed, "master seed");
        cmd->add_option("--workers", workers, "worker threads");
        cmd->add_option("--out", out, "output path (prefix for campaigns)");
        if (with_variant)
            cmd->add_option("--variant", variant,
                            "algorithm: qaoa|qaoa-informed|ma|xy|xeqy|y|cr|gw|xeqy-gamma0");
    };

    auto* cmd_generate = app.add_subcommand("generate", "generate a random regular graph");
    add_common(cmd_generate);
    cmd_generate->add_option("--format", format, "csv or json");

    auto* cmd_oracle = app.add_subcommand("oracle", "exact MaxCut by exhaustive search (n <= 26)");
    add_common(cmd_oracle);

    auto* cmd_solve = app.add_subcommand("solve", "optimize one algorithm on one graph");
    add_common(cmd_solve, true);
    cmd_solve->add_option("--restarts", restarts, "optimizer restarts");
    cmd_solve->add_option("--grad-tol", grad_tol, "gradient tolerance");
    cmd_solve->add_option("--grad-step", grad_step, "central-difference step");
    cmd_solve->add_option("--max-evals", max_evals, "objective evaluation budget per run");

    auto* cmd_certify = app.add_subcommand("certify-gw", "solve the cut vector program and certify rounding");
    add_common(cmd_certify);
    cmd_certify->add_option("--trials", trials, "hyperplane rounding trials");
    int gw_rank = 0;
    cmd_certify->add_option("--rank", gw_rank, "factorization rank (0 = auto)");

    auto* cmd_variants = app.add_subcommand("bench-variants", "compare algorithms over an instance set");
    add_common(cmd_variants);
    cmd_variants->add_option("--restarts", restarts, "runs per algorithm per instance");
    cmd_variants->add_option("--instances", instances, "generated instances");
    std::string algorithms_csv = "xy,xeqy,y,ma,qaoa,qaoa-informed,cr,gw";
    cmd_variants->add_option("--algorithms", algorithms_csv, "comma-separated algorithm list");

    auto* cmd_transition = app.add_subcommand("bench-transition", "angle-transition statistics for x=y runs");
    add_common(cmd_transition);
    cmd_transition->add_option("--restarts", restarts, "runs per instance");
    cmd_transition->add_option("--instances", instances, "generated instances");
    bool no_ablation = false;
    cmd_transition->add_flag("--no-ablation", no_ablation, "skip the frozen-phase vs relaxation comparison");

    auto* cmd_depth = app.add_subcommand("bench-depth", "simulator-backed study over circuit depth");
    add_common(cmd_depth);
    cmd_depth->add_option("--p", depth, "maximum depth (1..5)");
    cmd_depth->add_option("--restarts", restarts, "runs per instance per depth");
    cmd_depth->add_option("--instances", instances, "generated instances");
    cmd_depth->add_option("--shots", shots, "sampling shots per evaluation (0 = exact expectation)");
    cmd_depth->add_option("--max-evals", max_evals, "objective evaluation budget per run");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_generate->parsed()) {
            const Graph g = generate_regular(n, degree, seed);
            const GraphFormat fmt = format == "json" ? GraphFormat::Json : GraphFormat::Csv;
            if (out.empty()) {
                save_edge_list(g, std::cout, fmt);
            } else {
                std::ofstream f(out);
                if (!f) throw std::runtime_error("cannot write " + out);
                save_edge_list(g, f, fmt);
            }
            std::cerr << "generated " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
                      << (g.is_connected() ? "connected" : "disconnected") << "\n";
            return 0;
        }

        if (cmd_oracle->parsed()) {
            const Graph g = obtain_graph(graph_path, n, degree, seed);
            const CutResult cut = brute_force_maxcut(g, workers);
            emit({{"cut_value", cut.cut_value}, {"assignment", assignment_string(cut.assignment)}}, out);
            return 0;
        }

        if (cmd_solve->parsed()) {
            const auto g = std::make_shared<Graph>(obtain_graph(graph_path, n, degree, seed));
            CampaignConfig config;
            InstanceSpec spec;
            if (!graph_path.empty()) {
                spec.graph_id = graph_path;
                spec.path = graph_path;
            } else {
                spec = generated_instance(n, degree, seed);
            }
            config.instances = {spec};
            config.algorithms = {bench_algorithm_from_name(variant)};
            config.restarts = restarts;
            config.master_seed = seed;
            config.workers = workers;
            config.optimizer.grad_tolerance = grad_tol;
            config.optimizer.grad_step = grad_step;
            config.optimizer.max_evaluations = max_evals;
            const CampaignResult res = run_variant_comparison(config);
            const BenchmarkRecord& rec = res.records.front();
            nlohmann::json j{{"graph_id", rec.graph_id},
                             {"algorithm", rec.algorithm},
                             {"restarts", rec.restarts},
                             {"best_value", rec.best_value},
                             {"optimum", rec.optimum},
                             {"optimum_kind", rec.optimum_kind},
                             {"ratio", rec.ratio},
                             {"wall_time_ms", rec.wall_time_ms}};
            if (!std::isnan(rec.best_cut_value)) j["best_cut_value"] = rec.best_cut_value;
            emit(j, out);
            return 0;
        }

        if (cmd_certify->parsed()) {
            const Graph g = obtain_graph(graph_path, n, degree, seed);
            ThreadPool pool(static_cast<std::size_t>(std::max(0, workers - 1)));
            const RelaxedSolution sol = gw_solve(g, gw_rank, seed, 5, {}, &pool);
            const GwCertificate cert = gw_certificate(g, sol);
            const auto [best, values] = gw_round(g, sol, trials, derive_seed(seed, tag_hash("round")), &pool);
            double mean = 0.0;
            for (double v : values) mean += v;
            mean /= static_cast<double>(values.size());
            emit({{"sdp_value", cert.sdp_value},
                  {"expected_cut", cert.expected_cut},
                  {"guarantee_constant", cert.guarantee_constant},
                  {"worst_angle", cert.worst_angle},
                  {"trials", trials},
                  {"empirical_mean_cut", mean},
                  {"best_cut", best.cut_value},
                  {"best_assignment", assignment_string(best.assignment)},
                  {"converged", sol.converged}},
                 out);
            return 0;
        }

        if (cmd_variants->parsed()) {
            CampaignConfig config;
            config.instances = make_instances(graph_path, n, degree, instances, seed);
            std::stringstream ss(algorithms_csv);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) config.algorithms.push_back(bench_algorithm_from_name(item));
            config.restarts = restarts;
            config.master_seed = seed;
            config.workers = workers;
            config.output_prefix = out;
            const CampaignResult res = run_variant_comparison(config);
            if (out.empty()) std::cout << res.summary_json << "\n";
            return 0;
        }

        if (cmd_transition->parsed()) {
            TransitionStudyConfig config;
            config.instances = make_instances(graph_path, n, degree, instances, seed);
            config.runs = restarts;
            config.gamma_zero_ablation = !no_ablation;
            config.master_seed = seed;
            config.workers = workers;
            config.output_prefix = out;
            const TransitionStudyResult res = run_transition_study(config);
            if (out.empty()) std::cout << res.summary_json << "\n";
            return 0;
        }

        if (cmd_depth->parsed()) {
            DepthStudyConfig config;
            config.instances = make_instances(graph_path, n, degree, instances, seed);
            config.max_depth = depth;
            config.restarts = restarts;
            config.shots = shots;
            config.master_seed = seed;
            config.workers = workers;
            config.optimizer.max_evaluations = max_evals;
            config.optimizer.grad_tolerance = 1e-5;
            config.output_prefix = out;
            const DepthStudyResult res = run_depth_study(config);
            if (out.empty()) std::cout << res.summary_json << "\n";
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
