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

#include "cutq/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cutq/analytic.hpp"
#include "cutq/baselines.hpp"
#include "cutq/graph_io.hpp"
#include "cutq/oracle.hpp"
#include "cutq/regular.hpp"
#include "cutq/rng.hpp"
#include "cutq/statevector.hpp"

namespace cutq {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}  // namespace

const char* bench_algorithm_name(BenchAlgorithm a) {
    switch (a) {
        case BenchAlgorithm::Qaoa: return "qaoa";
        case BenchAlgorithm::QaoaInformed: return "qaoa-informed";
        case BenchAlgorithm::Ma: return "ma";
        case BenchAlgorithm::Xy: return "xy";
        case BenchAlgorithm::XeqY: return "xeqy";
        case BenchAlgorithm::YOnly: return "y";
        case BenchAlgorithm::Cr: return "cr";
        case BenchAlgorithm::Gw: return "gw";
        case BenchAlgorithm::XeqYGammaZero: return "xeqy-gamma0";
    }
    return "?";
}

BenchAlgorithm bench_algorithm_from_name(const std::string& name) {
    for (BenchAlgorithm a :
         {BenchAlgorithm::Qaoa, BenchAlgorithm::QaoaInformed, BenchAlgorithm::Ma, BenchAlgorithm::Xy,
          BenchAlgorithm::XeqY, BenchAlgorithm::YOnly, BenchAlgorithm::Cr, BenchAlgorithm::Gw,
          BenchAlgorithm::XeqYGammaZero}) {
        if (name == bench_algorithm_name(a)) return a;
    }
    throw std::invalid_argument("unknown benchmark algorithm: " + name);
}

InstanceSpec generated_instance(int n, int degree, std::uint64_t graph_seed) {
    InstanceSpec spec;
    spec.n = n;
    spec.degree = degree;
    spec.graph_seed = graph_seed;
    spec.graph_id = "reg-n" + std::to_string(n) + "-d" + std::to_string(degree) + "-s" +
                    std::to_string(graph_seed);
    return spec;
}

double percentile(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("percentile: empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + (values[hi] - values[lo]) * frac;
}

namespace {

struct RealizedInstance {
    InstanceSpec spec;
    std::shared_ptr<Graph> graph;
    std::shared_ptr<const AnalyticEvaluator> eval;
    double optimum = kNan;
    std::string optimum_kind = "best-known";
};

RealizedInstance realize(const InstanceSpec& spec, int workers) {
    RealizedInstance inst;
    inst.spec = spec;
    if (!spec.path.empty()) {
        inst.graph = std::make_shared<Graph>(load_edge_list_file(spec.path).graph);
        inst.spec.n = inst.graph->vertex_count();
    } else {
        inst.graph = std::make_shared<Graph>(generate_regular(spec.n, spec.degree, spec.graph_seed));
    }
    inst.eval = std::make_shared<AnalyticEvaluator>(*inst.graph);
    if (spec.recorded_optimum) {
        inst.optimum = *spec.recorded_optimum;
        inst.optimum_kind = "recorded";
    } else if (inst.graph->vertex_count() <= kBruteForceMaxVertices) {
        inst.optimum = brute_force_maxcut(*inst.graph, workers).cut_value;
        inst.optimum_kind = "oracle";
    }
    return inst;
}

std::uint64_t stream_seed(std::uint64_t master, const std::string& graph_id, const char* algorithm) {
    return derive_seed(derive_seed(master, tag_hash(graph_id.c_str())), tag_hash(algorithm));
}

Variant bench_variant(BenchAlgorithm a) {
    switch (a) {
        case BenchAlgorithm::Qaoa:
        case BenchAlgorithm::QaoaInformed: return Variant::Qaoa;
        case BenchAlgorithm::Ma: return Variant::Ma;
        case BenchAlgorithm::Xy: return Variant::Xy;
        case BenchAlgorithm::XeqY:
        case BenchAlgorithm::XeqYGammaZero: return Variant::XeqY;
        case BenchAlgorithm::YOnly: return Variant::YOnly;
        default: throw std::logic_error("not an ansatz algorithm");
    }
}

// Ratio denominators: solution-producing algorithms are scored by their cut,
// the quantum-only ansatzes by their expected value.
bool scores_by_cut(BenchAlgorithm a) {
    switch (a) {
        case BenchAlgorithm::XeqY:
        case BenchAlgorithm::XeqYGammaZero:
        case BenchAlgorithm::Cr:
        case BenchAlgorithm::Gw: return true;
        default: return false;
    }
}

Objective make_p1_objective(std::shared_ptr<const AnalyticEvaluator> eval, Variant variant) {
    const int n = eval->graph().vertex_count();
    const int m = eval->graph().edge_count();
    return [eval, variant, n, m](std::span<const double> x) {
        thread_local AnalyticEvaluator::Workspace ws;
        switch (variant) {
            case Variant::Qaoa: return eval->qaoa1(x[0], x[1], ws);
            case Variant::Ma: return eval->ma(x.subspan(0, m), x.subspan(m, n), ws);
            case Variant::Xy:
                return eval->xy(x.subspan(0, m), x.subspan(m, n), x.subspan(m + n, n), ws);
            case Variant::XeqY: return eval->xeqy(x.subspan(0, m), x.subspan(m, n), ws);
            case Variant::YOnly: return eval->y_only(x.subspan(0, m), x.subspan(m, n), ws);
        }
        return 0.0;
    };
}

Objective make_frozen_phase_objective(std::shared_ptr<const AnalyticEvaluator> eval) {
    const int m = eval->graph().edge_count();
    auto zeros = std::make_shared<std::vector<double>>(static_cast<std::size_t>(m), 0.0);
    return [eval, zeros](std::span<const double> beta) {
        thread_local AnalyticEvaluator::Workspace ws;
        return eval->xeqy(*zeros, beta, ws);
    };
}

InitialPointSampler make_sampler(BenchAlgorithm algorithm, std::shared_ptr<Graph> g) {
    switch (algorithm) {
        case BenchAlgorithm::QaoaInformed:
            return [](std::uint64_t run_seed) {
                const auto [gamma, beta] = init_qaoa_informed(run_seed);
                return std::vector<double>{gamma, beta};
            };
        case BenchAlgorithm::Cr:
            return [g](std::uint64_t run_seed) {
                Rng rng(derive_seed(run_seed, tag_hash("cr-init")));
                std::vector<double> theta(static_cast<std::size_t>(g->vertex_count()));
                for (auto& t : theta) t = rng.uniform(0.0, kTwoPi);
                return theta;
            };
        case BenchAlgorithm::XeqYGammaZero:
            return [g](std::uint64_t run_seed) {
                Rng rng(derive_seed(run_seed, tag_hash("frozen-phase-init")));
                std::vector<double> beta(static_cast<std::size_t>(g->vertex_count()));
                for (auto& b : beta) b = rng.uniform(0.0, kPi);
                return beta;
            };
        default: {
            const Variant v = bench_variant(algorithm);
            return [g, v](std::uint64_t run_seed) {
                return init_random(v, *g, run_seed).free_parameters();
            };
        }
    }
}

// Extraction for the frozen-phase runs reuses the full readout with zero
// phase angles.
ExtractedCut extract_frozen(const Graph& g, std::span<const double> beta) {
    AngleAssignment a(Variant::XeqY, g.vertex_count(), g.edge_count(), 1);
    for (int v = 0; v < g.vertex_count(); ++v) a.set_beta(0, v, beta[static_cast<std::size_t>(v)]);
    return extract_cut_xeqy(g, a);
}

std::string render_csv(const std::vector<RunRow>& rows) {
    std::ostringstream out;
    out << "graph_id,n,degree,algorithm,p,run,seed,value,cut_value,optimum,optimum_kind,ratio,"
           "evaluations,converged\n";
    for (const auto& r : rows) {
        out << r.graph_id << ',' << r.n << ',' << r.degree << ',' << r.algorithm << ',' << r.p << ','
            << r.run_index << ',' << r.seed << ',' << format_double(r.value) << ','
            << (std::isnan(r.cut_value) ? std::string() : format_double(r.cut_value)) << ','
            << format_double(r.optimum) << ',' << r.optimum_kind << ',' << format_double(r.ratio) << ','
            << r.evaluations << ',' << (r.converged ? 1 : 0) << '\n';
    }
    return out.str();
}

nlohmann::json stats_json(const std::vector<double>& values) {
    nlohmann::json j;
    if (values.empty()) return j;
    j["count"] = values.size();
    j["median"] = percentile(values, 0.5);
    j["q1"] = percentile(values, 0.25);
    j["q3"] = percentile(values, 0.75);
    j["min"] = *std::min_element(values.begin(), values.end());
    j["max"] = *std::max_element(values.begin(), values.end());
    return j;
}

void write_outputs(const std::string& prefix, const std::string& csv, const std::string& json_text) {
    if (prefix.empty()) return;
    std::ofstream csv_out(prefix + ".csv");
    if (!csv_out) throw std::runtime_error("cannot write " + prefix + ".csv");
    csv_out << csv;
    std::ofstream json_out(prefix + ".json");
    if (!json_out) throw std::runtime_error("cannot write " + prefix + ".json");
    json_out << json_text << "\n";
}

}  // namespace

CampaignResult run_variant_comparison(const CampaignConfig& config) {
    if (config.instances.empty()) throw std::invalid_argument("variant comparison: no instances");
    if (config.algorithms.empty()) throw std::invalid_argument("variant comparison: no algorithms");
    ThreadPool pool(static_cast<std::size_t>(std::max(0, config.workers - 1)));

    std::vector<RealizedInstance> instances;
    instances.reserve(config.instances.size());
    for (const auto& spec : config.instances) instances.push_back(realize(spec, config.workers));

    CampaignResult result;
    std::vector<double> wall_by_pair;

    for (auto& inst : instances) {
        const Graph& g = *inst.graph;
        for (BenchAlgorithm algorithm : config.algorithms) {
            const char* alg_name = bench_algorithm_name(algorithm);
            const std::uint64_t seed = stream_seed(config.master_seed, inst.spec.graph_id, alg_name);
            double wall_ms = 0.0;

            std::vector<RunRow> rows;
            rows.reserve(static_cast<std::size_t>(config.restarts));
            auto base_row = [&](int run_index, std::uint64_t run_seed) {
                RunRow row;
                row.graph_id = inst.spec.graph_id;
                row.n = g.vertex_count();
                row.degree = inst.spec.degree;
                row.algorithm = alg_name;
                row.run_index = run_index;
                row.seed = run_seed;
                row.cut_value = kNan;
                return row;
            };

            if (algorithm == BenchAlgorithm::Gw) {
                const auto t0 = std::chrono::steady_clock::now();
                const RelaxedSolution sol =
                    gw_solve(g, config.gw_rank, derive_seed(seed, tag_hash("solve")), config.gw_restarts,
                             config.optimizer, &pool);
                const auto [best_cut, trial_values] =
                    gw_round(g, sol, config.restarts, derive_seed(seed, tag_hash("round")), &pool);
                wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                              .count();
                for (int t = 0; t < config.restarts; ++t) {
                    RunRow row = base_row(t, derive_seed(seed, tag_hash("round")));
                    row.value = trial_values[static_cast<std::size_t>(t)];
                    row.cut_value = trial_values[static_cast<std::size_t>(t)];
                    row.converged = sol.converged;
                    rows.push_back(std::move(row));
                }
            } else {
                Objective objective;
                if (algorithm == BenchAlgorithm::Cr) {
                    auto graph_ptr = inst.graph;
                    objective = [graph_ptr](std::span<const double> theta) {
                        return classical_relaxed_objective(*graph_ptr, theta);
                    };
                } else if (algorithm == BenchAlgorithm::XeqYGammaZero) {
                    objective = make_frozen_phase_objective(inst.eval);
                } else {
                    objective = make_p1_objective(inst.eval, bench_variant(algorithm));
                }
                const InitialPointSampler sampler = make_sampler(algorithm, inst.graph);
                const MultistartResult ms =
                    multistart(objective, sampler, config.restarts, seed, config.optimizer, &pool);

                for (int k = 0; k < config.restarts; ++k) {
                    const OptimizationRun& run = ms.runs[static_cast<std::size_t>(k)];
                    RunRow row = base_row(k, run.seed);
                    row.value = run.best_value;
                    row.evaluations = run.evaluations;
                    row.converged = run.converged;
                    wall_ms += run.wall_time_ms;
                    if (algorithm == BenchAlgorithm::XeqY) {
                        const auto a = AngleAssignment::from_free_parameters(
                            Variant::XeqY, g.vertex_count(), g.edge_count(), 1, run.x_final);
                        row.cut_value = extract_cut_xeqy(g, a).cut.cut_value;
                    } else if (algorithm == BenchAlgorithm::XeqYGammaZero) {
                        row.cut_value = extract_frozen(g, run.x_final).cut.cut_value;
                    } else if (algorithm == BenchAlgorithm::Cr) {
                        std::vector<std::uint8_t> side(run.x_final.size());
                        for (std::size_t i = 0; i < side.size(); ++i)
                            side[i] = std::sin(run.x_final[i]) >= 0.0 ? 1 : 0;
                        row.cut_value = g.cut_value(side);
                    }
                    rows.push_back(std::move(row));
                }
            }
            wall_by_pair.push_back(wall_ms);
            for (auto& row : rows) result.rows.push_back(std::move(row));
        }
    }

    // Resolve optimum denominators: the oracle or recorded value, else the
    // best solution observed anywhere on the instance.
    for (auto& inst : instances) {
        if (!std::isnan(inst.optimum)) continue;
        double best = 0.0;
        for (const auto& row : result.rows) {
            if (row.graph_id != inst.spec.graph_id) continue;
            best = std::max(best, row.value);
            if (!std::isnan(row.cut_value)) best = std::max(best, row.cut_value);
        }
        inst.optimum = best;
    }
    for (auto& row : result.rows) {
        const auto it = std::find_if(instances.begin(), instances.end(), [&](const RealizedInstance& i) {
            return i.spec.graph_id == row.graph_id;
        });
        row.optimum = it->optimum;
        row.optimum_kind = it->optimum_kind;
        const BenchAlgorithm a = bench_algorithm_from_name(row.algorithm);
        const double numerator = scores_by_cut(a) ? row.cut_value : row.value;
        row.ratio = row.optimum > 0.0 ? numerator / row.optimum : 1.0;
    }

    std::sort(result.rows.begin(), result.rows.end(), [](const RunRow& a, const RunRow& b) {
        if (a.graph_id != b.graph_id) return a.graph_id < b.graph_id;
        if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
        return a.run_index < b.run_index;
    });

    // Per-(instance, algorithm) summaries.
    std::size_t wall_index = 0;
    for (const auto& inst : instances) {
        for (BenchAlgorithm algorithm : config.algorithms) {
            const char* alg_name = bench_algorithm_name(algorithm);
            BenchmarkRecord rec;
            rec.graph_id = inst.spec.graph_id;
            rec.n = inst.graph->vertex_count();
            rec.degree = inst.spec.degree;
            rec.algorithm = alg_name;
            rec.restarts = config.restarts;
            rec.seed = stream_seed(config.master_seed, inst.spec.graph_id, alg_name);
            rec.optimum = inst.optimum;
            rec.optimum_kind = inst.optimum_kind;
            rec.best_value = -std::numeric_limits<double>::infinity();
            rec.best_cut_value = kNan;
            for (const auto& row : result.rows) {
                if (row.graph_id != inst.spec.graph_id || row.algorithm != alg_name) continue;
                rec.best_value = std::max(rec.best_value, row.value);
                if (!std::isnan(row.cut_value))
                    rec.best_cut_value =
                        std::isnan(rec.best_cut_value) ? row.cut_value : std::max(rec.best_cut_value, row.cut_value);
                rec.per_run_ratios.push_back(row.ratio);
            }
            rec.ratio = *std::max_element(rec.per_run_ratios.begin(), rec.per_run_ratios.end());
            rec.wall_time_ms = wall_by_pair[wall_index++];
            result.records.push_back(std::move(rec));
        }
    }

    result.csv = render_csv(result.rows);

    nlohmann::json summary;
    summary["schema_version"] = 1;
    summary["campaign"] = "variants";
    summary["master_seed"] = config.master_seed;
    summary["restarts"] = config.restarts;
    summary["workers"] = config.workers;
    auto& inst_json = summary["instances"] = nlohmann::json::array();
    for (const auto& inst : instances) {
        inst_json.push_back({{"graph_id", inst.spec.graph_id},
                             {"n", inst.graph->vertex_count()},
                             {"degree", inst.spec.degree},
                             {"edges", inst.graph->edge_count()},
                             {"connected", inst.graph->is_connected()},
                             {"optimum", inst.optimum},
                             {"optimum_kind", inst.optimum_kind}});
    }
    auto& alg_json = summary["algorithms"] = nlohmann::json::object();
    for (BenchAlgorithm algorithm : config.algorithms) {
        const char* alg_name = bench_algorithm_name(algorithm);
        std::vector<double> pooled;
        double wall = 0.0;
        for (const auto& rec : result.records) {
            if (rec.algorithm != alg_name) continue;
            pooled.insert(pooled.end(), rec.per_run_ratios.begin(), rec.per_run_ratios.end());
            wall += rec.wall_time_ms;
        }
        nlohmann::json entry = stats_json(pooled);
        entry["wall_time_ms"] = wall;
        alg_json[alg_name] = std::move(entry);
    }
    result.summary_json = summary.dump(2);

    write_outputs(config.output_prefix, result.csv, result.summary_json);
    return result;
}

TransitionStudyResult run_transition_study(const TransitionStudyConfig& config) {
    if (config.instances.empty()) throw std::invalid_argument("transition study: no instances");
    ThreadPool pool(static_cast<std::size_t>(std::max(0, config.workers - 1)));

    TransitionStudyResult result;
    constexpr int kBins = 32;
    result.gamma_distance_histogram.assign(kBins, 0);
    result.beta_distance_histogram.assign(kBins, 0);
    const double gamma_bin_width = (kPi / 2.0) / kBins;
    const double beta_bin_width = (kPi / 4.0) / kBins;

    long long gamma_within = 0, gamma_total = 0, beta_within = 0, beta_total = 0;

    std::vector<RealizedInstance> instances;
    for (const auto& spec : config.instances) instances.push_back(realize(spec, config.workers));

    for (const auto& inst : instances) {
        const Graph& g = *inst.graph;
        const int n = g.vertex_count();
        const int m = g.edge_count();
        const Objective objective = make_p1_objective(inst.eval, Variant::XeqY);
        const InitialPointSampler sampler = make_sampler(BenchAlgorithm::XeqY, inst.graph);
        const std::uint64_t seed = stream_seed(config.master_seed, inst.spec.graph_id, "xeqy");
        const MultistartResult ms = multistart(objective, sampler, config.runs, seed, config.optimizer, &pool);

        for (int k = 0; k < config.runs; ++k) {
            const OptimizationRun& run = ms.runs[static_cast<std::size_t>(k)];
            TransitionRunRow row;
            row.graph_id = inst.spec.graph_id;
            row.run_index = k;
            row.seed = run.seed;
            row.converged = run.converged;
            row.value = run.best_value;

            const auto a =
                AngleAssignment::from_free_parameters(Variant::XeqY, n, m, 1, run.x_final);
            const ExtractedCut ex = extract_cut_xeqy(g, a);
            row.extracted_cut = ex.cut.cut_value;
            row.non_transitioned = static_cast<int>(ex.non_transitioned.size());

            // Distances of the converged angles to their snap sets, on the
            // circle of the angle's period.
            row.gamma_count = m;
            for (int e = 0; e < m; ++e) {
                const double eff = wrap_angle(a.gamma(0, e) * g.edge(e).weight, kTwoPi);
                const double dist = std::min({eff, std::abs(eff - kPi), kTwoPi - eff});
                row.max_gamma_distance = std::max(row.max_gamma_distance, dist);
                if (dist <= config.snap_window) ++row.gamma_within;
                if (run.converged) {
                    const int bin = std::min(kBins - 1, static_cast<int>(dist / gamma_bin_width));
                    ++result.gamma_distance_histogram[static_cast<std::size_t>(bin)];
                }
            }
            row.beta_count = n;
            for (int v = 0; v < n; ++v) {
                const double b = wrap_angle(a.beta(0, v), kPi);
                const double d1 = std::abs(b - kPi / 4.0);
                const double d2 = std::abs(b - 3.0 * kPi / 4.0);
                const double dist = std::min({d1, kPi - d1, d2, kPi - d2});
                row.max_beta_distance = std::max(row.max_beta_distance, dist);
                if (dist <= config.snap_window) ++row.beta_within;
                if (run.converged) {
                    const int bin = std::min(kBins - 1, static_cast<int>(dist / beta_bin_width));
                    ++result.beta_distance_histogram[static_cast<std::size_t>(bin)];
                }
            }
            if (run.converged) {
                gamma_within += row.gamma_within;
                gamma_total += row.gamma_count;
                beta_within += row.beta_within;
                beta_total += row.beta_count;
            }

            // Objective at the snapped angles: phase angles are rebuilt from
            // the snapped effective values, mixer angles from the snap set.
            AngleAssignment snapped(Variant::XeqY, n, m, 1);
            for (int e = 0; e < m; ++e) {
                const double w = g.edge(e).weight;
                snapped.set_gamma(0, e, w > 0.0 ? ex.snapped_gamma[static_cast<std::size_t>(e)] / w : 0.0);
            }
            for (int v = 0; v < n; ++v)
                snapped.set_beta(0, v, ex.snapped_beta[static_cast<std::size_t>(v)]);
            row.snapped_objective = inst.eval->expectation(snapped);
            row.extraction_error = std::abs(row.extracted_cut - row.snapped_objective);
            if (run.converged)
                result.max_extraction_error = std::max(result.max_extraction_error, row.extraction_error);

            result.rows.push_back(std::move(row));
        }
    }

    result.gamma_within_fraction =
        gamma_total > 0 ? static_cast<double>(gamma_within) / static_cast<double>(gamma_total) : 0.0;
    result.beta_within_fraction =
        beta_total > 0 ? static_cast<double>(beta_within) / static_cast<double>(beta_total) : 0.0;

    if (config.gamma_zero_ablation) {
        // Frozen-phase runs against the sine relaxation on the same
        // instances, scored by solution cut against the best value seen.
        for (const auto& inst : instances) {
            const Graph& g = *inst.graph;
            double denom = inst.optimum;
            if (std::isnan(denom)) {
                denom = 0.0;
                for (const auto& row : result.rows)
                    if (row.graph_id == inst.spec.graph_id)
                        denom = std::max({denom, row.value, row.extracted_cut});
            }
            const Objective frozen = make_frozen_phase_objective(inst.eval);
            const InitialPointSampler frozen_sampler = make_sampler(BenchAlgorithm::XeqYGammaZero, inst.graph);
            const MultistartResult fr =
                multistart(frozen, frozen_sampler, config.runs,
                           stream_seed(config.master_seed, inst.spec.graph_id, "xeqy-gamma0"),
                           config.optimizer, &pool);
            for (const auto& run : fr.runs) {
                const double cut = extract_frozen(g, run.x_final).cut.cut_value;
                result.ablation_ratios.push_back(denom > 0.0 ? cut / denom : 1.0);
            }

            auto graph_ptr = inst.graph;
            const Objective cr_obj = [graph_ptr](std::span<const double> theta) {
                return classical_relaxed_objective(*graph_ptr, theta);
            };
            const InitialPointSampler cr_sampler = make_sampler(BenchAlgorithm::Cr, inst.graph);
            const MultistartResult cr =
                multistart(cr_obj, cr_sampler, config.runs,
                           stream_seed(config.master_seed, inst.spec.graph_id, "cr"), config.optimizer,
                           &pool);
            for (const auto& run : cr.runs) {
                std::vector<std::uint8_t> side(run.x_final.size());
                for (std::size_t i = 0; i < side.size(); ++i)
                    side[i] = std::sin(run.x_final[i]) >= 0.0 ? 1 : 0;
                result.cr_ratios.push_back(denom > 0.0 ? g.cut_value(side) / denom : 1.0);
            }
        }
        result.ablation_median_gap =
            std::abs(percentile(result.ablation_ratios, 0.5) - percentile(result.cr_ratios, 0.5));
    }

    std::ostringstream csv;
    csv << "graph_id,run,seed,converged,value,gamma_within,gamma_count,beta_within,beta_count,"
           "max_gamma_distance,max_beta_distance,extracted_cut,snapped_objective,extraction_error,"
           "non_transitioned\n";
    for (const auto& r : result.rows) {
        csv << r.graph_id << ',' << r.run_index << ',' << r.seed << ',' << (r.converged ? 1 : 0) << ','
            << format_double(r.value) << ',' << r.gamma_within << ',' << r.gamma_count << ','
            << r.beta_within << ',' << r.beta_count << ',' << format_double(r.max_gamma_distance) << ','
            << format_double(r.max_beta_distance) << ',' << format_double(r.extracted_cut) << ','
            << format_double(r.snapped_objective) << ',' << format_double(r.extraction_error) << ','
            << r.non_transitioned << '\n';
    }
    result.csv = csv.str();

    nlohmann::json summary;
    summary["schema_version"] = 1;
    summary["campaign"] = "transition";
    summary["master_seed"] = config.master_seed;
    summary["runs"] = config.runs;
    summary["snap_window"] = config.snap_window;
    summary["gamma_within_fraction"] = result.gamma_within_fraction;
    summary["beta_within_fraction"] = result.beta_within_fraction;
    summary["max_extraction_error"] = result.max_extraction_error;
    summary["gamma_distance_histogram"] = result.gamma_distance_histogram;
    summary["beta_distance_histogram"] = result.beta_distance_histogram;
    summary["gamma_bin_width"] = gamma_bin_width;
    summary["beta_bin_width"] = beta_bin_width;
    if (config.gamma_zero_ablation) {
        summary["ablation"] = {{"frozen_phase", stats_json(result.ablation_ratios)},
                               {"classical_relaxed", stats_json(result.cr_ratios)},
                               {"median_gap", result.ablation_median_gap}};
    }
    result.summary_json = summary.dump(2);

    write_outputs(config.output_prefix, result.csv, result.summary_json);
    return result;
}

namespace {

Objective make_simulator_objective(std::shared_ptr<Graph> g, Variant variant, int depth, int shots,
                                   std::uint64_t run_seed) {
    if (shots <= 0) {
        return [g, variant, depth](std::span<const double> x) {
            thread_local std::vector<std::complex<double>> scratch;
            const auto a = AngleAssignment::from_free_parameters(variant, g->vertex_count(),
                                                                 g->edge_count(), depth, x);
            return ansatz_expectation(*g, a, scratch);
        };
    }
    // Sampled objective: fresh noise per evaluation, deterministic per run.
    auto counter = std::make_shared<std::atomic<std::uint64_t>>(0);
    return [g, variant, depth, shots, run_seed, counter](std::span<const double> x) {
        const auto a =
            AngleAssignment::from_free_parameters(variant, g->vertex_count(), g->edge_count(), depth, x);
        const std::uint64_t draw = counter->fetch_add(1, std::memory_order_relaxed);
        return shot_expectation(*g, a, shots, derive_seed(run_seed, draw));
    };
}

}  // namespace

DepthStudyResult run_depth_study(const DepthStudyConfig& config) {
    if (config.instances.empty()) throw std::invalid_argument("depth study: no instances");
    if (config.max_depth < 1 || config.max_depth > 5)
        throw std::invalid_argument("depth study: depth must be within 1..5");
    ThreadPool pool(static_cast<std::size_t>(std::max(0, config.workers - 1)));

    std::vector<RealizedInstance> instances;
    for (const auto& spec : config.instances) {
        if (spec.n > kStatevectorMaxQubits && spec.path.empty())
            throw std::invalid_argument("depth study: instance exceeds the simulator cap");
        instances.push_back(realize(spec, config.workers));
    }

    DepthStudyResult result;
    const Variant variants[] = {Variant::Qaoa, Variant::Ma, Variant::XeqY};
    const char* names[] = {"qaoa", "ma", "xeqy"};

    // One warm-start chain per (instance, ansatz); chains are independent,
    // so they run across the pool, and the gradient stencils inside each run
    // use the same pool for their concurrent evaluations.
    struct Chain {
        const RealizedInstance* inst;
        int vi;
        std::vector<DepthRunRow> rows;
    };
    std::vector<Chain> chains;
    for (const auto& inst : instances)
        for (int vi = 0; vi < 3; ++vi) chains.push_back({&inst, vi, {}});

    pool.parallel_for(chains.size(), [&](std::size_t ci) {
        Chain& chain = chains[ci];
        const RealizedInstance& inst = *chain.inst;
        const int vi = chain.vi;
        auto g = inst.graph;
        const int n = g->vertex_count(), m = g->edge_count();
        const Variant variant = variants[vi];

        // Best parameters per depth feed the next depth's warm start for the
        // shared-angle ansatz.
        std::vector<double> warm_from_previous;
        for (int p = 1; p <= config.max_depth; ++p) {
            const std::uint64_t seed = derive_seed(
                stream_seed(config.master_seed, inst.spec.graph_id, names[vi]), static_cast<std::uint64_t>(p));

            std::vector<OptimizationRun> runs(static_cast<std::size_t>(config.restarts));
            std::vector<bool> warm_flags(static_cast<std::size_t>(config.restarts), false);
            const bool warm = variant == Variant::Qaoa && p > 1 && !warm_from_previous.empty();

            for (int k = 0; k < config.restarts; ++k) {
                const std::uint64_t run_seed = derive_seed(seed, static_cast<std::uint64_t>(k));
                const Objective objective = make_simulator_objective(g, variant, p, config.shots, run_seed);
                std::vector<double> x0;
                if (warm && k == 0) {
                    // Previous optimum padded with an identity layer.
                    x0 = warm_from_previous;
                    const int per_layer = AngleAssignment::free_parameter_count(variant, n, m, 1);
                    x0.resize(x0.size() + static_cast<std::size_t>(per_layer), 0.0);
                    warm_flags[static_cast<std::size_t>(k)] = true;
                } else {
                    x0 = init_random(variant, *g, run_seed, p).free_parameters();
                }
                runs[static_cast<std::size_t>(k)] =
                    config.shots > 0 ? powell_maximize(objective, x0, config.optimizer, run_seed)
                                     : lbfgs_maximize(objective, x0, config.optimizer, &pool, run_seed);
            }

            std::size_t best = 0;
            for (std::size_t k = 1; k < runs.size(); ++k)
                if (runs[k].best_value > runs[best].best_value) best = k;
            warm_from_previous = runs[best].x_final;

            for (int k = 0; k < config.restarts; ++k) {
                const OptimizationRun& run = runs[static_cast<std::size_t>(k)];
                DepthRunRow row;
                row.graph_id = inst.spec.graph_id;
                row.n = n;
                row.degree = inst.spec.degree;
                row.algorithm = names[vi];
                row.p = p;
                row.run_index = k;
                row.seed = run.seed;
                row.value = run.best_value;
                row.optimum = inst.optimum;
                row.optimum_kind = inst.optimum_kind;
                row.ratio = !std::isnan(inst.optimum) && inst.optimum > 0.0 ? run.best_value / inst.optimum
                                                                           : kNan;
                row.evaluations = run.evaluations;
                row.converged = run.converged;
                row.warm_started = warm_flags[static_cast<std::size_t>(k)];
                chain.rows.push_back(std::move(row));
            }
        }
    });
    for (auto& chain : chains)
        for (auto& row : chain.rows) result.rows.push_back(std::move(row));

    std::sort(result.rows.begin(), result.rows.end(), [](const DepthRunRow& a, const DepthRunRow& b) {
        if (a.graph_id != b.graph_id) return a.graph_id < b.graph_id;
        if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
        if (a.p != b.p) return a.p < b.p;
        return a.run_index < b.run_index;
    });

    std::ostringstream csv;
    csv << "graph_id,n,degree,algorithm,p,run,seed,value,optimum,optimum_kind,ratio,evaluations,"
           "converged,warm_started\n";
    for (const auto& r : result.rows) {
        csv << r.graph_id << ',' << r.n << ',' << r.degree << ',' << r.algorithm << ',' << r.p << ','
            << r.run_index << ',' << r.seed << ',' << format_double(r.value) << ','
            << format_double(r.optimum) << ',' << r.optimum_kind << ','
            << (std::isnan(r.ratio) ? std::string() : format_double(r.ratio)) << ',' << r.evaluations << ','
            << (r.converged ? 1 : 0) << ',' << (r.warm_started ? 1 : 0) << '\n';
    }
    result.csv = csv.str();

    nlohmann::json summary;
    summary["schema_version"] = 1;
    summary["campaign"] = "depth";
    summary["master_seed"] = config.master_seed;
    summary["max_depth"] = config.max_depth;
    summary["restarts"] = config.restarts;
    summary["shots"] = config.shots;
    auto& per = summary["per_depth"] = nlohmann::json::object();
    for (int vi = 0; vi < 3; ++vi) {
        for (int p = 1; p <= config.max_depth; ++p) {
            std::vector<double> pooled;
            for (const auto& r : result.rows)
                if (r.algorithm == names[vi] && r.p == p && !std::isnan(r.ratio)) pooled.push_back(r.ratio);
            if (!pooled.empty()) per[std::string(names[vi]) + "-p" + std::to_string(p)] = stats_json(pooled);
        }
    }
    result.summary_json = summary.dump(2);

    write_outputs(config.output_prefix, result.csv, result.summary_json);
    return result;
}

}  // namespace cutq
