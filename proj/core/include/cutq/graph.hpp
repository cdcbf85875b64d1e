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
#include <span>
#include <string>
#include <vector>

namespace cutq {

/// One undirected edge, stored once with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
};

/// Immutable undirected weighted graph with dense 0-based vertex ids.
///
/// Construction validates and canonicalizes: endpoints are reordered so that
/// u < v, edges are sorted lexicographically, and self-loops, duplicate
/// edges, negative weights, and out-of-range ids are rejected. Instances are
/// safe to share across threads.
class Graph {
  public:
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    /// Neighbor vertex ids of v, ascending.
    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    /// Indices into edges() of the edges incident to v, ascending.
    const std::vector<int>& incident_edges(int v) const { return incident_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

    /// Index of edge {u, v} in edges(), or -1 if the edge is absent.
    int edge_index(int u, int v) const;

    double total_weight() const { return total_weight_; }
    bool unweighted() const { return unweighted_; }
    bool is_connected() const;

    /// Weight of the cut induced by a 0/1 assignment over the vertices.
    double cut_value(std::span<const std::uint8_t> assignment) const;

  private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<int>> incident_;
    double total_weight_ = 0.0;
    bool unweighted_ = true;
};

/// Neighborhood decomposition of one edge {u, v}: the vertex sets entering
/// the per-edge expectation formulas.
struct EdgeNeighborhood {
    int u = 0;
    int v = 0;
    std::vector<int> v_side;  // neighbors of v excluding u
    std::vector<int> u_side;  // neighbors of u excluding v
    std::vector<int> common;  // neighbors of both u and v (triangle vertices)
    int edge_degree = 0;      // |N(u) ∪ N(v)| − 2 = |v_side| + |u_side| − |common|
};

/// Decomposes edge {u, v} of g. Throws std::invalid_argument if the edge is
/// not present.
EdgeNeighborhood neighborhoods(const Graph& g, int u, int v);

/// True iff every edge of g has odd edge degree. This is per-edge parity
/// only; such graphs are necessarily triangle-free and two-colourable, but
/// the converse checks live in their own predicates.
bool has_odd_edge_degrees(const Graph& g);

/// True iff no edge has a common neighbor.
bool is_triangle_free(const Graph& g);

/// BFS two-colouring. Returns a valid colouring when the graph is bipartite,
/// std::nullopt otherwise. Isolated vertices are coloured 0.
std::optional<std::vector<std::uint8_t>> two_colouring(const Graph& g);

inline bool is_two_colourable(const Graph& g) { return two_colouring(g).has_value(); }

/// A cut: the 0/1 side assignment, its value, and the approximation ratio
/// when the optimum is known.
struct CutResult {
    std::vector<std::uint8_t> assignment;
    double cut_value = 0.0;
    std::optional<double> ratio;
};

}  // namespace cutq
