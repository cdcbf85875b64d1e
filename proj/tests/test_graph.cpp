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

#include <cstdint>
#include <sstream>

#include "cutq/graph.hpp"
#include "cutq/graph_io.hpp"
#include "cutq/oracle.hpp"
#include "cutq/regular.hpp"
#include "cutq/rng.hpp"

namespace cutq {
namespace {

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
    return Graph(leaves + 1, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return Graph(n, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5, 1.0});          // outer cycle
        edges.push_back({i, i + 5, 1.0});                // spokes
        edges.push_back({i + 5, (i + 2) % 5 + 5, 1.0});  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

// Reference enumerator, deliberately naive: recompute every cut from
// scratch over all 2^n assignments.
double naive_maxcut(const Graph& g) {
    const int n = g.vertex_count();
    double best = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<std::uint8_t> side(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = (mask >> v) & 1u;
        best = std::max(best, g.cut_value(side));
    }
    return best;
}

TEST(Graph, CanonicalizesAndValidates) {
    Graph g(3, {{2, 0, 1.0}, {1, 0, 2.0}});
    EXPECT_EQ(g.edge_count(), 2);
    EXPECT_EQ(g.edge(0).u, 0);
    EXPECT_EQ(g.edge(0).v, 1);
    EXPECT_EQ(g.edge(1).v, 2);
    EXPECT_FALSE(g.unweighted());
    EXPECT_THROW(Graph(2, {{0, 0, 1.0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 1, 1.0}, {1, 0, 1.0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 1, -1.0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 3, 1.0}}), std::invalid_argument);
}

TEST(Graph, AdjacencyMatchesEdges) {
    const Graph g = petersen_graph();
    for (int v = 0; v < g.vertex_count(); ++v) {
        EXPECT_EQ(g.degree(v), 3);
        for (int w : g.neighbors(v)) EXPECT_GE(g.edge_index(v, w), 0);
    }
    EXPECT_EQ(g.edge_index(0, 7), -1);
}

TEST(Neighborhoods, StarCenterToLeaf) {
    const Graph s4 = star_graph(4);
    const EdgeNeighborhood nb = neighborhoods(s4, 0, 1);  // center, leaf
    EXPECT_TRUE(nb.v_side.empty());                        // leaf has no other neighbors
    EXPECT_EQ(nb.u_side.size(), 3u);                       // three other leaves
    EXPECT_TRUE(nb.common.empty());
    EXPECT_EQ(nb.edge_degree, 3);
}

TEST(Neighborhoods, Triangle) {
    const Graph k3 = complete_graph(3);
    const EdgeNeighborhood nb = neighborhoods(k3, 0, 1);
    EXPECT_EQ(nb.v_side.size(), 1u);
    EXPECT_EQ(nb.u_side.size(), 1u);
    EXPECT_EQ(nb.common.size(), 1u);
    EXPECT_EQ(nb.edge_degree, 1);
}

TEST(Neighborhoods, CompleteFour) {
    const Graph k4 = complete_graph(4);
    const EdgeNeighborhood nb = neighborhoods(k4, 0, 1);
    EXPECT_EQ(nb.v_side.size(), 2u);
    EXPECT_EQ(nb.u_side.size(), 2u);
    EXPECT_EQ(nb.common.size(), 2u);
    EXPECT_EQ(nb.edge_degree, 2);
}

TEST(Neighborhoods, MissingEdgeThrows) {
    const Graph p3 = path_graph(3);
    EXPECT_THROW(neighborhoods(p3, 0, 2), std::invalid_argument);
}

TEST(Neighborhoods, SizesMatchDegrees) {
    const Graph g = generate_regular(24, 5, 11);
    for (const Edge& e : g.edges()) {
        const EdgeNeighborhood nb = neighborhoods(g, e.u, e.v);
        EXPECT_EQ(static_cast<int>(nb.v_side.size()), g.degree(e.v) - 1);
        EXPECT_EQ(static_cast<int>(nb.u_side.size()), g.degree(e.u) - 1);
        EXPECT_EQ(nb.edge_degree,
                  static_cast<int>(nb.v_side.size() + nb.u_side.size() - nb.common.size()));
    }
}

TEST(EdgeDegrees, ParityPredicates) {
    EXPECT_TRUE(has_odd_edge_degrees(path_graph(3)));
    EXPECT_TRUE(has_odd_edge_degrees(star_graph(4)));
    // Per-edge parity only: the triangle has edge degrees 1 but is not
    // triangle-free.
    EXPECT_TRUE(has_odd_edge_degrees(complete_graph(3)));
    EXPECT_FALSE(is_triangle_free(complete_graph(3)));
    EXPECT_FALSE(has_odd_edge_degrees(path_graph(4)));
}

TEST(TwoColouring, CycleAndTriangle) {
    std::vector<Edge> c4 = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}};
    const Graph cycle(4, std::move(c4));
    EXPECT_TRUE(is_two_colourable(cycle));
    EXPECT_TRUE(is_triangle_free(cycle));
    EXPECT_FALSE(is_two_colourable(complete_graph(3)));
    EXPECT_FALSE(is_triangle_free(complete_graph(3)));
}

TEST(TwoColouring, ValidatedEdgeByEdge) {
    // Random bipartite graph: the colouring must separate every edge.
    Rng rng(42);
    std::vector<Edge> edges;
    const int left = 7, right = 6;
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v)
            if (rng.next_double() < 0.4) edges.push_back({u, left + v, 1.0});
    const Graph g(left + right, std::move(edges));
    const auto colouring = two_colouring(g);
    ASSERT_TRUE(colouring.has_value());
    for (const Edge& e : g.edges())
        EXPECT_NE((*colouring)[static_cast<std::size_t>(e.u)], (*colouring)[static_cast<std::size_t>(e.v)]);
}

TEST(GenerateRegular, KnownSmallCases) {
    const Graph k4 = generate_regular(4, 3, 123);  // unique 3-regular graph on 4 vertices
    EXPECT_EQ(k4.edge_count(), 6);
    for (int v = 0; v < 4; ++v) EXPECT_EQ(k4.degree(v), 3);
    EXPECT_THROW(generate_regular(5, 3, 1), std::invalid_argument);  // parity
    EXPECT_THROW(generate_regular(4, 4, 1), std::invalid_argument);  // infeasible
}

TEST(GenerateRegular, AuditGeneratedInstance) {
    const Graph g = generate_regular(32, 3, 7);
    EXPECT_EQ(g.edge_count(), 48);
    for (int v = 0; v < 32; ++v) EXPECT_EQ(g.degree(v), 3);
    // Connectedness is recorded, not enforced.
    (void)g.is_connected();
}

TEST(GenerateRegular, DeterministicPerSeed) {
    const Graph a = generate_regular(16, 4, 99);
    const Graph b = generate_regular(16, 4, 99);
    ASSERT_EQ(a.edge_count(), b.edge_count());
    for (int e = 0; e < a.edge_count(); ++e) {
        EXPECT_EQ(a.edge(e).u, b.edge(e).u);
        EXPECT_EQ(a.edge(e).v, b.edge(e).v);
    }
    const Graph c = generate_regular(16, 4, 100);
    bool same = a.edge_count() == c.edge_count();
    if (same) {
        same = false;
        for (int e = 0; e < a.edge_count(); ++e)
            if (a.edge(e).u != c.edge(e).u || a.edge(e).v != c.edge(e).v) same = true;
        EXPECT_TRUE(same) << "different seeds should give different pairings";
    }
}

TEST(BruteForce, SmallCompleteGraphs) {
    EXPECT_DOUBLE_EQ(brute_force_maxcut(complete_graph(3)).cut_value, 2.0);
    EXPECT_DOUBLE_EQ(brute_force_maxcut(complete_graph(4)).cut_value, 4.0);
}

TEST(BruteForce, PetersenGraph) {
    const Graph g = petersen_graph();
    EXPECT_DOUBLE_EQ(naive_maxcut(g), 12.0);
    const CutResult cut = brute_force_maxcut(g);
    EXPECT_DOUBLE_EQ(cut.cut_value, 12.0);
    EXPECT_DOUBLE_EQ(g.cut_value(cut.assignment), cut.cut_value);
}

TEST(BruteForce, MatchesNaiveOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Rng rng(seed);
        std::vector<Edge> edges;
        const int n = 9;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_double() < 0.45) edges.push_back({u, v, rng.uniform(0.0, 2.0)});
        const Graph g(n, std::move(edges));
        EXPECT_NEAR(brute_force_maxcut(g).cut_value, naive_maxcut(g), 1e-12);
    }
}

TEST(BruteForce, GlobalFlipInvariant) {
    const Graph g = generate_regular(12, 3, 5);
    const CutResult cut = brute_force_maxcut(g);
    std::vector<std::uint8_t> flipped(cut.assignment);
    for (auto& b : flipped) b = 1 - b;
    EXPECT_DOUBLE_EQ(g.cut_value(flipped), cut.cut_value);
}

TEST(BruteForce, WorkerCountDoesNotChangeResult) {
    const Graph g = generate_regular(14, 3, 17);
    const CutResult one = brute_force_maxcut(g, 1);
    const CutResult many = brute_force_maxcut(g, 4);
    EXPECT_DOUBLE_EQ(one.cut_value, many.cut_value);
    EXPECT_EQ(one.assignment, many.assignment);
}

TEST(BruteForce, RefusesAboveCap) {
    const Graph g = generate_regular(28, 3, 1);
    EXPECT_THROW(brute_force_maxcut(g), std::invalid_argument);
}

TEST(GraphIo, SingleLineCsv) {
    std::istringstream in("0,1,1.0\n");
    const LoadedGraph loaded = load_edge_list(in, GraphFormat::Csv);
    EXPECT_EQ(loaded.graph.vertex_count(), 2);
    EXPECT_EQ(loaded.graph.edge_count(), 1);
    EXPECT_DOUBLE_EQ(loaded.graph.edge(0).weight, 1.0);
    EXPECT_TRUE(loaded.id_remap.empty());
}

TEST(GraphIo, DefaultWeightAndComments) {
    std::istringstream in("# a comment\n0,1\n1,2,0.5\n");
    const LoadedGraph loaded = load_edge_list(in, GraphFormat::Csv);
    EXPECT_EQ(loaded.graph.edge_count(), 2);
    EXPECT_DOUBLE_EQ(loaded.graph.edge(0).weight, 1.0);
    EXPECT_DOUBLE_EQ(loaded.graph.edge(1).weight, 0.5);
}

TEST(GraphIo, RejectsSelfLoopWithLineNumber) {
    std::istringstream in("0,1,1.0\n0,0,1.0\n");
    try {
        load_edge_list(in, GraphFormat::Csv);
        FAIL() << "expected rejection";
    } catch (const std::runtime_error& err) {
        EXPECT_NE(std::string(err.what()).find("line 2"), std::string::npos);
        EXPECT_NE(std::string(err.what()).find("self-loop"), std::string::npos);
    }
}

TEST(GraphIo, RejectsDuplicateEdge) {
    std::istringstream in("0,1,1.0\n1,0,2.0\n");
    EXPECT_THROW(load_edge_list(in, GraphFormat::Csv), std::runtime_error);
}

TEST(GraphIo, RemapsSparseIds) {
    std::istringstream in("10,20\n20,42\n");
    const LoadedGraph loaded = load_edge_list(in, GraphFormat::Csv);
    EXPECT_EQ(loaded.graph.vertex_count(), 3);
    ASSERT_EQ(loaded.id_remap.size(), 3u);
    EXPECT_EQ(loaded.id_remap.at(10), 0);
    EXPECT_EQ(loaded.id_remap.at(42), 2);
}

TEST(GraphIo, JsonRoundTrip) {
    const Graph g = generate_regular(10, 3, 3);
    std::stringstream buf;
    save_edge_list(g, buf, GraphFormat::Json);
    const LoadedGraph loaded = load_edge_list(buf, GraphFormat::Json);
    EXPECT_EQ(loaded.graph.vertex_count(), g.vertex_count());
    EXPECT_EQ(loaded.graph.edge_count(), g.edge_count());
}

TEST(GraphIo, CanonicalSaveIsByteStable) {
    std::istringstream in("2,0,1.5\n1,0\n");
    const LoadedGraph loaded = load_edge_list(in, GraphFormat::Csv);
    std::ostringstream first, second;
    save_edge_list(loaded.graph, first, GraphFormat::Csv);
    std::istringstream reload(first.str());
    const LoadedGraph again = load_edge_list(reload, GraphFormat::Csv);
    save_edge_list(again.graph, second, GraphFormat::Csv);
    EXPECT_EQ(first.str(), second.str());
}

TEST(GraphIo, RegularDatasetAudit) {
    // A generated 3-regular file loads back with every degree 3 and the
    // expected edge count.
    const Graph g = generate_regular(128, 3, 2024);
    std::stringstream buf;
    save_edge_list(g, buf, GraphFormat::Csv);
    const LoadedGraph loaded = load_edge_list(buf, GraphFormat::Csv);
    EXPECT_EQ(loaded.graph.edge_count(), 192);
    for (int v = 0; v < loaded.graph.vertex_count(); ++v) EXPECT_EQ(loaded.graph.degree(v), 3);
}

}  // namespace
}  // namespace cutq
