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

#include "cutq/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cutq {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace

// Per-edge index lists, flattened. exclusive ids index edges(); common pairs
// hold (edge to u, edge to v) per shared neighbor.
struct AnalyticEvaluator::Table {
    struct Context {
        int u, v;
        double weight;
        std::uint32_t vx_begin, vx_end;  // edges {v,w}, w a neighbor of v only
        std::uint32_t ux_begin, ux_end;  // edges {u,w}, w a neighbor of u only
        std::uint32_t cm_begin, cm_end;  // paired edges to common neighbors
    };
    std::vector<Context> contexts;
    std::vector<std::int32_t> exclusive_ids;
    std::vector<std::pair<std::int32_t, std::int32_t>> common_ids;
};

AnalyticEvaluator::AnalyticEvaluator(const Graph& g) : graph_(&g) {
    auto table = std::make_shared<Table>();
    table->contexts.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int eid = 0; eid < g.edge_count(); ++eid) {
        const Edge& e = g.edge(eid);
        const EdgeNeighborhood nb = neighborhoods(g, e.u, e.v);
        Table::Context ctx;
        ctx.u = e.u;
        ctx.v = e.v;
        ctx.weight = e.weight;

        ctx.vx_begin = static_cast<std::uint32_t>(table->exclusive_ids.size());
        for (int w : nb.v_side) {
            if (!std::binary_search(nb.common.begin(), nb.common.end(), w))
                table->exclusive_ids.push_back(g.edge_index(e.v, w));
        }
        ctx.vx_end = static_cast<std::uint32_t>(table->exclusive_ids.size());

        ctx.ux_begin = ctx.vx_end;
        for (int w : nb.u_side) {
            if (!std::binary_search(nb.common.begin(), nb.common.end(), w))
                table->exclusive_ids.push_back(g.edge_index(e.u, w));
        }
        ctx.ux_end = static_cast<std::uint32_t>(table->exclusive_ids.size());

        ctx.cm_begin = static_cast<std::uint32_t>(table->common_ids.size());
        for (int f : nb.common)
            table->common_ids.push_back({g.edge_index(e.u, f), g.edge_index(e.v, f)});
        ctx.cm_end = static_cast<std::uint32_t>(table->common_ids.size());

        table->contexts.push_back(ctx);
    }
    table_ = std::move(table);
}

namespace {

using Table = AnalyticEvaluator::Table;
using Workspace = AnalyticEvaluator::Workspace;

// The cosine products entering every edge formula. `Phase` provides cos/sin
// of the weighted phase angle per edge id.
struct EdgeProducts {
    double pe_full;  // over all edges from v to its other neighbors
    double pd_full;  // over all edges from u to its other neighbors
    double pe_excl;  // same, common neighbors excluded
    double pd_excl;
    double p_plus;   // over common neighbors: cos(angle_to_u + angle_to_v)
    double p_minus;  // over common neighbors: cos(angle_to_u - angle_to_v)
};

template <typename Phase>
EdgeProducts edge_products(const Table& t, std::size_t eid, const Phase& phase) {
    const auto& ctx = t.contexts[eid];
    EdgeProducts p{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
    for (std::uint32_t i = ctx.vx_begin; i < ctx.vx_end; ++i)
        p.pe_excl *= phase.cosine(t.exclusive_ids[i]);
    for (std::uint32_t i = ctx.ux_begin; i < ctx.ux_end; ++i)
        p.pd_excl *= phase.cosine(t.exclusive_ids[i]);
    double common_u = 1.0, common_v = 1.0;
    for (std::uint32_t i = ctx.cm_begin; i < ctx.cm_end; ++i) {
        const auto [eu, ev] = t.common_ids[i];
        const double cu = phase.cosine(eu), su = phase.sine(eu);
        const double cv = phase.cosine(ev), sv = phase.sine(ev);
        p.p_plus *= cu * cv - su * sv;
        p.p_minus *= cu * cv + su * sv;
        common_u *= cu;
        common_v *= cv;
    }
    p.pe_full = p.pe_excl * common_v;
    p.pd_full = p.pd_excl * common_u;
    return p;
}

struct TablePhase {
    const std::vector<double>& cos_g;
    const std::vector<double>& sin_g;
    double cosine(std::int32_t e) const { return cos_g[static_cast<std::size_t>(e)]; }
    double sine(std::int32_t e) const { return sin_g[static_cast<std::size_t>(e)]; }
};

// Computes trig on demand; used by the single-edge entry points so one edge
// costs only its own neighborhood, not a full-graph table fill.
struct LocalSharedPhase {
    const Graph& g;
    double gamma;
    double cosine(std::int32_t e) const { return std::cos(gamma * g.edge(e).weight); }
    double sine(std::int32_t e) const { return std::sin(gamma * g.edge(e).weight); }
};

struct LocalPerEdgePhase {
    const Graph& g;
    std::span<const double> gamma;
    double cosine(std::int32_t e) const {
        return std::cos(gamma[static_cast<std::size_t>(e)] * g.edge(e).weight);
    }
    double sine(std::int32_t e) const {
        return std::sin(gamma[static_cast<std::size_t>(e)] * g.edge(e).weight);
    }
};

void fill_phase_tables(const Graph& g, std::span<const double> gamma_per_edge, Workspace& ws) {
    const auto edges = g.edges();
    ws.cos_g.resize(edges.size());
    ws.sin_g.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const double t = gamma_per_edge[i] * edges[i].weight;
        ws.cos_g[i] = std::cos(t);
        ws.sin_g[i] = std::sin(t);
    }
}

void fill_phase_tables_shared(const Graph& g, double gamma, Workspace& ws) {
    const auto edges = g.edges();
    ws.cos_g.resize(edges.size());
    ws.sin_g.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const double t = gamma * edges[i].weight;
        ws.cos_g[i] = std::cos(t);
        ws.sin_g[i] = std::sin(t);
    }
}

void fill_beta_tables(int n, std::span<const double> beta, Workspace& ws) {
    ws.cos2b.resize(static_cast<std::size_t>(n));
    ws.sin2b.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        ws.cos2b[static_cast<std::size_t>(v)] = std::cos(2.0 * beta[static_cast<std::size_t>(v)]);
        ws.sin2b[static_cast<std::size_t>(v)] = std::sin(2.0 * beta[static_cast<std::size_t>(v)]);
    }
}

void fill_alpha_tables(int n, std::span<const double> alpha, Workspace& ws) {
    ws.cos2a.resize(static_cast<std::size_t>(n));
    ws.sin2a.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        ws.cos2a[static_cast<std::size_t>(v)] = std::cos(2.0 * alpha[static_cast<std::size_t>(v)]);
        ws.sin2a[static_cast<std::size_t>(v)] = std::sin(2.0 * alpha[static_cast<std::size_t>(v)]);
    }
}

double qaoa_term(double w, double sin_uv, double sin4b, double sin2b_sq, const EdgeProducts& p) {
    return 0.5 * w +
           0.25 * w * (sin4b * sin_uv * (p.pe_full + p.pd_full) +
                       sin2b_sq * p.pe_excl * p.pd_excl * (p.p_plus - p.p_minus));
}

double ma_term(double w, double sin_uv, double c2bu, double s2bu, double c2bv, double s2bv,
               const EdgeProducts& p) {
    return 0.5 * w + 0.5 * w *
                         (c2bu * s2bv * sin_uv * p.pe_full + s2bu * c2bv * sin_uv * p.pd_full +
                          0.5 * s2bu * s2bv * p.pe_excl * p.pd_excl * (p.p_plus - p.p_minus));
}

double xy_term(double w, double sin_uv, double c2bu, double s2bu, double c2bv, double s2bv, double c2au,
               double s2au, double c2av, double s2av, const EdgeProducts& p) {
    const double cross = p.pe_excl * p.pd_excl;
    return 0.5 * w +
           0.5 * w *
               (c2au * c2av * sin_uv * (c2bu * s2bv * p.pe_full + s2bu * c2bv * p.pd_full) -
                0.5 * s2au * s2av * cross * (p.p_plus + p.p_minus) +
                0.5 * c2au * s2bu * c2av * s2bv * cross * (p.p_plus - p.p_minus));
}

double y_term(double w, double s2au, double s2av, const EdgeProducts& p) {
    return 0.5 * w - 0.25 * w * s2au * s2av * p.pe_excl * p.pd_excl * (p.p_plus + p.p_minus);
}

}  // namespace

double AnalyticEvaluator::qaoa1(double gamma, double beta, Workspace& ws) const {
    fill_phase_tables_shared(*graph_, gamma, ws);
    const double sin4b = std::sin(4.0 * beta);
    const double s2b = std::sin(2.0 * beta);
    const double sin2b_sq = s2b * s2b;
    const TablePhase phase{ws.cos_g, ws.sin_g};
    double total = 0.0;
    const auto& t = *table_;
    for (std::size_t e = 0; e < t.contexts.size(); ++e) {
        const auto p = edge_products(t, e, phase);
        total += qaoa_term(t.contexts[e].weight, ws.sin_g[e], sin4b, sin2b_sq, p);
    }
    return total;
}

double AnalyticEvaluator::qaoa1(double gamma, double beta) const {
    Workspace ws;
    return qaoa1(gamma, beta, ws);
}

double AnalyticEvaluator::qaoa1_edge(int edge, double gamma, double beta) const {
    const LocalSharedPhase phase{*graph_, gamma};
    const auto p = edge_products(*table_, static_cast<std::size_t>(edge), phase);
    const double sin4b = std::sin(4.0 * beta);
    const double s2b = std::sin(2.0 * beta);
    return qaoa_term(graph_->edge(edge).weight, phase.sine(edge), sin4b, s2b * s2b, p);
}

double AnalyticEvaluator::ma(std::span<const double> gamma, std::span<const double> beta,
                             Workspace& ws) const {
    fill_phase_tables(*graph_, gamma, ws);
    fill_beta_tables(graph_->vertex_count(), beta, ws);
    const TablePhase phase{ws.cos_g, ws.sin_g};
    double total = 0.0;
    const auto& t = *table_;
    for (std::size_t e = 0; e < t.contexts.size(); ++e) {
        const auto& ctx = t.contexts[e];
        const auto p = edge_products(t, e, phase);
        const std::size_t u = static_cast<std::size_t>(ctx.u), v = static_cast<std::size_t>(ctx.v);
        total += ma_term(ctx.weight, ws.sin_g[e], ws.cos2b[u], ws.sin2b[u], ws.cos2b[v], ws.sin2b[v], p);
    }
    return total;
}

double AnalyticEvaluator::ma(std::span<const double> gamma, std::span<const double> beta) const {
    Workspace ws;
    return ma(gamma, beta, ws);
}

double AnalyticEvaluator::ma_edge(int edge, std::span<const double> gamma,
                                  std::span<const double> beta) const {
    const LocalPerEdgePhase phase{*graph_, gamma};
    const auto& ctx = table_->contexts[static_cast<std::size_t>(edge)];
    const auto p = edge_products(*table_, static_cast<std::size_t>(edge), phase);
    const std::size_t u = static_cast<std::size_t>(ctx.u), v = static_cast<std::size_t>(ctx.v);
    return ma_term(ctx.weight, phase.sine(edge), std::cos(2.0 * beta[u]), std::sin(2.0 * beta[u]),
                   std::cos(2.0 * beta[v]), std::sin(2.0 * beta[v]), p);
}

double AnalyticEvaluator::xy(std::span<const double> gamma, std::span<const double> beta,
                             std::span<const double> alpha, Workspace& ws) const {
    fill_phase_tables(*graph_, gamma, ws);
    fill_beta_tables(graph_->vertex_count(), beta, ws);
    fill_alpha_tables(graph_->vertex_count(), alpha, ws);
    const TablePhase phase{ws.cos_g, ws.sin_g};
    double total = 0.0;
    const auto& t = *table_;
    for (std::size_t e = 0; e < t.contexts.size(); ++e) {
        const auto& ctx = t.contexts[e];
        const auto p = edge_products(t, e, phase);
        const std::size_t u = static_cast<std::size_t>(ctx.u), v = static_cast<std::size_t>(ctx.v);
        total += xy_term(ctx.weight, ws.sin_g[e], ws.cos2b[u], ws.sin2b[u], ws.cos2b[v], ws.sin2b[v],
                         ws.cos2a[u], ws.sin2a[u], ws.cos2a[v], ws.sin2a[v], p);
    }
    return total;
}

double AnalyticEvaluator::xy(std::span<const double> gamma, std::span<const double> beta,
                             std::span<const double> alpha) const {
    Workspace ws;
    return xy(gamma, beta, alpha, ws);
}

double AnalyticEvaluator::xy_edge(int edge, std::span<const double> gamma, std::span<const double> beta,
                                  std::span<const double> alpha) const {
    const LocalPerEdgePhase phase{*graph_, gamma};
    const auto& ctx = table_->contexts[static_cast<std::size_t>(edge)];
    const auto p = edge_products(*table_, static_cast<std::size_t>(edge), phase);
    const std::size_t u = static_cast<std::size_t>(ctx.u), v = static_cast<std::size_t>(ctx.v);
    return xy_term(ctx.weight, phase.sine(edge), std::cos(2.0 * beta[u]), std::sin(2.0 * beta[u]),
                   std::cos(2.0 * beta[v]), std::sin(2.0 * beta[v]), std::cos(2.0 * alpha[u]),
                   std::sin(2.0 * alpha[u]), std::cos(2.0 * alpha[v]), std::sin(2.0 * alpha[v]), p);
}

double AnalyticEvaluator::xeqy(std::span<const double> gamma, std::span<const double> beta,
                               Workspace& ws) const {
    return xy(gamma, beta, beta, ws);
}

double AnalyticEvaluator::xeqy(std::span<const double> gamma, std::span<const double> beta) const {
    Workspace ws;
    return xeqy(gamma, beta, ws);
}

double AnalyticEvaluator::y_only(std::span<const double> gamma, std::span<const double> alpha,
                                 Workspace& ws) const {
    fill_phase_tables(*graph_, gamma, ws);
    fill_alpha_tables(graph_->vertex_count(), alpha, ws);
    const TablePhase phase{ws.cos_g, ws.sin_g};
    double total = 0.0;
    const auto& t = *table_;
    for (std::size_t e = 0; e < t.contexts.size(); ++e) {
        const auto& ctx = t.contexts[e];
        const auto p = edge_products(t, e, phase);
        total += y_term(ctx.weight, ws.sin2a[static_cast<std::size_t>(ctx.u)],
                        ws.sin2a[static_cast<std::size_t>(ctx.v)], p);
    }
    return total;
}

double AnalyticEvaluator::y_only(std::span<const double> gamma, std::span<const double> alpha) const {
    Workspace ws;
    return y_only(gamma, alpha, ws);
}

double AnalyticEvaluator::y_only_edge(int edge, std::span<const double> gamma,
                                      std::span<const double> alpha) const {
    const LocalPerEdgePhase phase{*graph_, gamma};
    const auto& ctx = table_->contexts[static_cast<std::size_t>(edge)];
    const auto p = edge_products(*table_, static_cast<std::size_t>(edge), phase);
    return y_term(ctx.weight, std::sin(2.0 * alpha[static_cast<std::size_t>(ctx.u)]),
                  std::sin(2.0 * alpha[static_cast<std::size_t>(ctx.v)]), p);
}

double AnalyticEvaluator::expectation(const AngleAssignment& a) const {
    if (a.depth() != 1)
        throw std::invalid_argument("analytic expectation: closed forms exist only for depth 1");
    if (a.vertex_count() != graph_->vertex_count() || a.edge_count() != graph_->edge_count())
        throw std::invalid_argument("analytic expectation: assignment does not match graph");
    Workspace ws;
    switch (a.variant()) {
        case Variant::Qaoa: return qaoa1(a.gamma(0, 0), a.beta(0, 0), ws);
        case Variant::Ma: return ma(a.gamma_layer(0), a.beta_layer(0), ws);
        case Variant::Xy: return xy(a.gamma_layer(0), a.beta_layer(0), a.alpha_layer(0), ws);
        case Variant::XeqY: return xeqy(a.gamma_layer(0), a.beta_layer(0), ws);
        case Variant::YOnly: return y_only(a.gamma_layer(0), a.alpha_layer(0), ws);
    }
    throw std::logic_error("unreachable");
}

double AnalyticEvaluator::edge_expectation(int edge, const AngleAssignment& a) const {
    if (a.depth() != 1)
        throw std::invalid_argument("analytic expectation: closed forms exist only for depth 1");
    switch (a.variant()) {
        case Variant::Qaoa: return qaoa1_edge(edge, a.gamma(0, 0), a.beta(0, 0));
        case Variant::Ma: return ma_edge(edge, a.gamma_layer(0), a.beta_layer(0));
        case Variant::Xy: return xy_edge(edge, a.gamma_layer(0), a.beta_layer(0), a.alpha_layer(0));
        case Variant::XeqY: return xy_edge(edge, a.gamma_layer(0), a.beta_layer(0), a.beta_layer(0));
        case Variant::YOnly: return y_only_edge(edge, a.gamma_layer(0), a.alpha_layer(0));
    }
    throw std::logic_error("unreachable");
}

double qaoa1_expectation(const Graph& g, double gamma, double beta) {
    return AnalyticEvaluator(g).qaoa1(gamma, beta);
}

double maqaoa1_expectation(const Graph& g, const AngleAssignment& a) {
    if (a.variant() != Variant::Ma) throw std::invalid_argument("expected an MA assignment");
    return AnalyticEvaluator(g).expectation(a);
}

double xqaoa1_xy_expectation(const Graph& g, const AngleAssignment& a) {
    if (a.variant() != Variant::Xy) throw std::invalid_argument("expected an XY assignment");
    return AnalyticEvaluator(g).expectation(a);
}

double xqaoa1_xeqy_expectation(const Graph& g, const AngleAssignment& a) {
    if (a.variant() != Variant::XeqY) throw std::invalid_argument("expected an X=Y assignment");
    return AnalyticEvaluator(g).expectation(a);
}

double xqaoa1_y_expectation(const Graph& g, const AngleAssignment& a) {
    if (a.variant() != Variant::YOnly) throw std::invalid_argument("expected a Y assignment");
    return AnalyticEvaluator(g).expectation(a);
}

double qaoa1_unweighted_edge(const EdgeShape& shape, double gamma, double beta) {
    if (shape.common > shape.v_side || shape.common > shape.u_side || shape.v_side < 0 || shape.u_side < 0 ||
        shape.common < 0)
        throw std::invalid_argument("qaoa1_unweighted_edge: inconsistent neighborhood sizes");
    const double c = std::cos(gamma);
    const double s2b = std::sin(2.0 * beta);
    const double first = std::sin(4.0 * beta) * std::sin(gamma) *
                         (std::pow(c, shape.v_side) + std::pow(c, shape.u_side));
    const double second = s2b * s2b * std::pow(c, shape.v_side + shape.u_side - 2 * shape.common) *
                          (std::pow(std::cos(2.0 * gamma), shape.common) - 1.0);
    return 0.5 + 0.25 * (first + second);
}

StarOptimum star_qaoa1_optimum(int leaf_count) {
    if (leaf_count < 1) throw std::invalid_argument("star_qaoa1_optimum: need at least one leaf");
    // Per-edge value is 1/2 + (1/4) sin(4 beta) g(gamma) with
    // g(gamma) = sin(gamma) (1 + cos(gamma)^(k-1)); beta contributes its
    // maximum of 1 at pi/8, leaving a 1-D search over gamma.
    const auto g = [leaf_count](double gamma) {
        return std::sin(gamma) * (1.0 + std::pow(std::cos(gamma), leaf_count - 1));
    };

    constexpr int kGridPoints = 100000;
    double best_gamma = 0.0;
    double best_value = g(0.0);
    for (int i = 1; i < kGridPoints; ++i) {
        const double x = kTwoPi * static_cast<double>(i) / kGridPoints;
        const double v = g(x);
        if (v > best_value) {
            best_value = v;
            best_gamma = x;
        }
    }

    // Golden-section refinement on the bracketing grid interval.
    const double step = kTwoPi / kGridPoints;
    double lo = best_gamma - step;
    double hi = best_gamma + step;
    const double invphi = 0.61803398874989484820;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    for (int iter = 0; iter < 200; ++iter) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = g(x1);
        }
    }
    const double gamma_star = 0.5 * (lo + hi);
    const double g_star = g(gamma_star);

    StarOptimum out;
    out.beta = kPi / 8.0;
    if (g_star >= best_value) {
        out.gamma = gamma_star;
        out.ratio = 0.5 + 0.25 * g_star;
    } else {
        out.gamma = best_gamma;
        out.ratio = 0.5 + 0.25 * best_value;
    }
    return out;
}

}  // namespace cutq
