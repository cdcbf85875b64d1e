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

#include "cutq/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <utility>

namespace cutq {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
            throw std::invalid_argument("graph: edge weight must be finite and non-negative");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(edges_[i].u) + "," +
                                        std::to_string(edges_[i].v) + ")");
    }

    adjacency_.assign(static_cast<std::size_t>(n_), {});
    incident_.assign(static_cast<std::size_t>(n_), {});
    for (int i = 0; i < edge_count(); ++i) {
        const Edge& e = edges_[static_cast<std::size_t>(i)];
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
        incident_[static_cast<std::size_t>(e.u)].push_back(i);
        incident_[static_cast<std::size_t>(e.v)].push_back(i);
        total_weight_ += e.weight;
        if (e.weight != 1.0) unweighted_ = false;
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_) return -1;
    const auto& inc = incident_[static_cast<std::size_t>(u)];
    for (int idx : inc) {
        const Edge& e = edges_[static_cast<std::size_t>(idx)];
        if ((e.u == u && e.v == v)) return idx;
    }
    return -1;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n_), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int visited = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++visited;
                queue.push_back(w);
            }
        }
    }
    return visited == n_;
}

double Graph::cut_value(std::span<const std::uint8_t> assignment) const {
    if (static_cast<int>(assignment.size()) != n_)
        throw std::invalid_argument("cut_value: assignment size mismatch");
    double value = 0.0;
    for (const Edge& e : edges_) {
        if (assignment[static_cast<std::size_t>(e.u)] != assignment[static_cast<std::size_t>(e.v)])
            value += e.weight;
    }
    return value;
}

EdgeNeighborhood neighborhoods(const Graph& g, int u, int v) {
    if (g.edge_index(u, v) < 0)
        throw std::invalid_argument("neighborhoods: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") not in graph");
    EdgeNeighborhood nb;
    nb.u = u;
    nb.v = v;
    for (int w : g.neighbors(v))
        if (w != u) nb.v_side.push_back(w);
    for (int w : g.neighbors(u))
        if (w != v) nb.u_side.push_back(w);
    std::set_intersection(nb.v_side.begin(), nb.v_side.end(), nb.u_side.begin(), nb.u_side.end(),
                          std::back_inserter(nb.common));
    nb.edge_degree = static_cast<int>(nb.v_side.size() + nb.u_side.size() - nb.common.size());
    return nb;
}

bool has_odd_edge_degrees(const Graph& g) {
    // edge degree = deg(u) + deg(v) − 2 − |common|; the common count needs a
    // per-edge intersection, so reuse the decomposition.
    for (const Edge& e : g.edges()) {
        if (neighborhoods(g, e.u, e.v).edge_degree % 2 == 0) return false;
    }
    return true;
}

bool is_triangle_free(const Graph& g) {
    for (const Edge& e : g.edges()) {
        const auto& a = g.neighbors(e.u);
        const auto& b = g.neighbors(e.v);
        // Sorted lists: a single merge pass detects a shared neighbor.
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            if (a[i] < b[j])
                ++i;
            else
                ++j;
        }
    }
    return true;
}

std::optional<std::vector<std::uint8_t>> two_colouring(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> queue;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (colour[static_cast<std::size_t>(s)] != -1) continue;
        colour[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (colour[static_cast<std::size_t>(w)] == -1) {
                    colour[static_cast<std::size_t>(w)] = 1 - colour[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (colour[static_cast<std::size_t>(w)] == colour[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<std::uint8_t> out(colour.size());
    for (std::size_t i = 0; i < colour.size(); ++i) out[i] = static_cast<std::uint8_t>(colour[i]);
    return out;
}

}  // namespace cutq
