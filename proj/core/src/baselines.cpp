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

#include "cutq/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cutq/rng.hpp"

namespace cutq {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace

double classical_relaxed_objective(const Graph& g, std::span<const double> theta) {
    std::vector<double> s(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) s[i] = std::sin(theta[i]);
    double total = 0.0;
    for (const Edge& e : g.edges())
        total += 0.5 * e.weight * (1.0 - s[static_cast<std::size_t>(e.u)] * s[static_cast<std::size_t>(e.v)]);
    return total;
}

std::pair<RelaxedSolution, CutResult> classical_relaxed(const Graph& g, int restarts, std::uint64_t seed,
                                                        const OptimizerConfig& cfg, ThreadPool* pool) {
    const int n = g.vertex_count();
    Objective objective = [&g](std::span<const double> theta) {
        return classical_relaxed_objective(g, theta);
    };
    InitialPointSampler sampler = [n](std::uint64_t run_seed) {
        Rng rng(derive_seed(run_seed, tag_hash("cr-init")));
        std::vector<double> theta(static_cast<std::size_t>(n));
        for (auto& t : theta) t = rng.uniform(0.0, kTwoPi);
        return theta;
    };
    const MultistartResult ms = multistart(objective, sampler, restarts, seed, cfg, pool);

    auto round_theta = [&g](std::span<const double> theta) {
        std::vector<std::uint8_t> side(theta.size());
        for (std::size_t i = 0; i < theta.size(); ++i) side[i] = std::sin(theta[i]) >= 0.0 ? 1 : 0;
        CutResult cut;
        cut.cut_value = g.cut_value(side);
        cut.assignment = std::move(side);
        return cut;
    };

    std::size_t best_run = 0;
    CutResult best_cut = round_theta(ms.runs[0].x_final);
    for (std::size_t k = 1; k < ms.runs.size(); ++k) {
        CutResult cut = round_theta(ms.runs[k].x_final);
        if (cut.cut_value > best_cut.cut_value ||
            (cut.cut_value == best_cut.cut_value &&
             ms.runs[k].best_value > ms.runs[best_run].best_value)) {
            best_cut = std::move(cut);
            best_run = k;
        }
    }

    RelaxedSolution sol;
    sol.kind = RelaxationKind::ClassicalRelaxed;
    sol.theta = ms.runs[best_run].x_final;
    sol.objective_value = ms.runs[best_run].best_value;
    sol.converged = ms.runs[best_run].converged;
    return {std::move(sol), std::move(best_cut)};
}

namespace {

// Objective over raw row-major coordinates, normalized onto the sphere. The
// normalization keeps the optimizer unconstrained; zero rows are nudged onto
// the first axis.
double gw_objective(const Graph& g, int rank, std::span<const double> raw, std::vector<double>& unit) {
    const int n = g.vertex_count();
    unit.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(rank));
    for (int v = 0; v < n; ++v) {
        double norm2 = 0.0;
        const std::size_t base = static_cast<std::size_t>(v) * rank;
        for (int r = 0; r < rank; ++r) norm2 += raw[base + r] * raw[base + r];
        if (norm2 <= 1e-300) {
            for (int r = 0; r < rank; ++r) unit[base + r] = r == 0 ? 1.0 : 0.0;
            continue;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (int r = 0; r < rank; ++r) unit[base + r] = raw[base + r] * inv;
    }
    double total = 0.0;
    for (const Edge& e : g.edges()) {
        double dot = 0.0;
        const std::size_t bu = static_cast<std::size_t>(e.u) * rank;
        const std::size_t bv = static_cast<std::size_t>(e.v) * rank;
        for (int r = 0; r < rank; ++r) dot += unit[bu + r] * unit[bv + r];
        total += 0.5 * e.weight * (1.0 - dot);
    }
    return total;
}

}  // namespace

RelaxedSolution gw_solve(const Graph& g, int rank, std::uint64_t seed, int restarts,
                         const OptimizerConfig& cfg, ThreadPool* pool) {
    const int n = g.vertex_count();
    if (rank <= 0) rank = static_cast<int>(std::ceil(std::sqrt(2.0 * n))) + 1;
    if (rank < 2) rank = 2;

    Objective objective = [&g, rank](std::span<const double> raw) {
        std::vector<double> unit;
        return gw_objective(g, rank, raw, unit);
    };
    InitialPointSampler sampler = [n, rank](std::uint64_t run_seed) {
        Rng rng(derive_seed(run_seed, tag_hash("gw-init")));
        std::vector<double> raw(static_cast<std::size_t>(n) * static_cast<std::size_t>(rank));
        for (auto& x : raw) x = rng.normal();
        return raw;
    };
    const MultistartResult ms = multistart(objective, sampler, restarts, seed, cfg, pool);

    RelaxedSolution sol;
    sol.kind = RelaxationKind::GoemansWilliamson;
    sol.rank = rank;
    std::vector<double> unit;
    sol.objective_value = gw_objective(g, rank, ms.best.x_final, unit);
    sol.vectors = std::move(unit);
    sol.converged = ms.best.converged;
    return sol;
}

std::pair<CutResult, std::vector<double>> gw_round(const Graph& g, const RelaxedSolution& sol, int trials,
                                                   std::uint64_t seed, ThreadPool* pool) {
    if (sol.kind != RelaxationKind::GoemansWilliamson)
        throw std::invalid_argument("gw_round: relaxation is not a vector solution");
    if (trials < 1) throw std::invalid_argument("gw_round: need at least one trial");
    const int n = g.vertex_count();
    const int rank = sol.rank;

    std::vector<double> values(static_cast<std::size_t>(trials));
    std::vector<std::vector<std::uint8_t>> sides(static_cast<std::size_t>(trials));
    auto one_trial = [&](std::size_t t) {
        Rng rng(derive_seed(seed, mix64(t ^ tag_hash("gw-round"))));
        std::vector<double> r(static_cast<std::size_t>(rank));
        for (auto& x : r) x = rng.normal();
        std::vector<std::uint8_t> side(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            double dot = 0.0;
            const std::size_t base = static_cast<std::size_t>(v) * rank;
            for (int k = 0; k < rank; ++k) dot += r[static_cast<std::size_t>(k)] * sol.vectors[base + k];
            side[static_cast<std::size_t>(v)] = dot >= 0.0 ? 1 : 0;  // sign(0) lands on side 1
        }
        values[t] = g.cut_value(side);
        sides[t] = std::move(side);
    };
    if (pool) {
        pool->parallel_for(static_cast<std::size_t>(trials), one_trial);
    } else {
        for (int t = 0; t < trials; ++t) one_trial(static_cast<std::size_t>(t));
    }

    std::size_t best = 0;
    for (std::size_t t = 1; t < values.size(); ++t)
        if (values[t] > values[best]) best = t;

    CutResult cut;
    cut.assignment = std::move(sides[best]);
    cut.cut_value = values[best];
    return {std::move(cut), std::move(values)};
}

std::pair<double, double> gw_guarantee_constant() {
    // Minimize (2/pi) * theta / (1 - cos theta) on (0, pi]. Coarse grid, then
    // golden-section refinement.
    auto ratio = [](double theta) { return (2.0 / kPi) * theta / (1.0 - std::cos(theta)); };
    const int grid = 20000;
    double best_t = kPi;
    double best_v = ratio(kPi);
    for (int i = 1; i < grid; ++i) {
        const double t = kPi * static_cast<double>(i) / grid;
        const double v = ratio(t);
        if (v < best_v) {
            best_v = v;
            best_t = t;
        }
    }
    const double step = kPi / grid;
    double lo = best_t - step, hi = best_t + step;
    const double invphi = 0.61803398874989484820;
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = ratio(x1), f2 = ratio(x2);
    for (int it = 0; it < 120; ++it) {
        if (f1 > f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = ratio(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = ratio(x1);
        }
    }
    const double t_star = 0.5 * (lo + hi);
    return {ratio(t_star), t_star};
}

GwCertificate gw_certificate(const Graph& g, const RelaxedSolution& sol) {
    if (sol.kind != RelaxationKind::GoemansWilliamson)
        throw std::invalid_argument("gw_certificate: relaxation is not a vector solution");
    GwCertificate cert;
    cert.sdp_value = sol.objective_value;
    const int rank = sol.rank;
    double expected = 0.0;
    for (const Edge& e : g.edges()) {
        double dot = 0.0;
        const std::size_t bu = static_cast<std::size_t>(e.u) * rank;
        const std::size_t bv = static_cast<std::size_t>(e.v) * rank;
        for (int k = 0; k < rank; ++k) dot += sol.vectors[bu + k] * sol.vectors[bv + k];
        dot = std::clamp(dot, -1.0, 1.0);
        expected += e.weight * std::acos(dot) / kPi;
    }
    cert.expected_cut = expected;
    const auto [constant, angle] = gw_guarantee_constant();
    cert.guarantee_constant = constant;
    cert.worst_angle = angle;
    return cert;
}

ExtractedCut extract_cut_xeqy(const Graph& g, const AngleAssignment& a) {
    if (a.variant() != Variant::XeqY)
        throw std::invalid_argument("extract_cut_xeqy: assignment is not an X=Y run");
    if (a.depth() != 1) throw std::invalid_argument("extract_cut_xeqy: extraction is a depth-1 readout");
    const int n = g.vertex_count();
    const int m = g.edge_count();

    ExtractedCut out;
    out.snapped_gamma.resize(static_cast<std::size_t>(m));
    out.snapped_beta.resize(static_cast<std::size_t>(n));

    // Flip parity per vertex: one flip per incident edge whose effective
    // phase angle snaps to pi.
    std::vector<int> parity(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < m; ++e) {
        const Edge& edge = g.edge(e);
        const double effective = wrap_angle(a.gamma(0, e) * edge.weight, kTwoPi);
        double snapped = 0.0;
        if (std::abs(effective - kPi) < std::min(effective, kTwoPi - effective))
            snapped = kPi;
        else if (kTwoPi - effective < effective)
            snapped = kTwoPi;
        out.snapped_gamma[static_cast<std::size_t>(e)] = snapped;
        if (snapped == kPi) {
            parity[static_cast<std::size_t>(edge.u)] ^= 1;
            parity[static_cast<std::size_t>(edge.v)] ^= 1;
        }
    }

    out.cut.assignment.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const double b = wrap_angle(a.beta(0, v), kPi);
        const double d_quarter = std::abs(b - kPi / 4.0);
        const double d_three_quarter = std::abs(b - 3.0 * kPi / 4.0);
        const bool to_quarter = d_quarter <= d_three_quarter;
        if (std::min(d_quarter, d_three_quarter) > kPi / 8.0)
            out.non_transitioned.push_back(v);
        out.snapped_beta[static_cast<std::size_t>(v)] = to_quarter ? kPi / 4.0 : 3.0 * kPi / 4.0;
        // Even flip parity leaves the vertex on the plus state, odd on the
        // minus state; beta of pi/4 maps plus -> 1, 3*pi/4 maps plus -> 0.
        const int bit = (parity[static_cast<std::size_t>(v)] & 1) ^ (to_quarter ? 1 : 0);
        out.cut.assignment[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(bit);
    }
    out.cut.cut_value = g.cut_value(out.cut.assignment);
    return out;
}

}  // namespace cutq
