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

#include "cutq/oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cutq/parallel.hpp"

namespace cutq {

namespace {

struct BlockResult {
    double best = -1.0;
    std::uint64_t best_mask = 0;
};

// Enumerates masks in [begin, end) over the free vertices 1..n-1 (vertex 0 is
// always on side 0). Bit k of a mask is the side of vertex k+1. The walk
// visits masks in Gray order, flipping one vertex at a time and adjusting the
// cut by that vertex's incident edges.
BlockResult scan_block(const Graph& g, std::uint64_t begin, std::uint64_t end) {
    const int n = g.vertex_count();
    std::vector<std::uint8_t> side(static_cast<std::size_t>(n), 0);

    auto gray = [](std::uint64_t k) { return k ^ (k >> 1); };

    // Set up the starting assignment and its cut from scratch.
    std::uint64_t mask = gray(begin);
    for (int v = 1; v < n; ++v) side[static_cast<std::size_t>(v)] = (mask >> (v - 1)) & 1u;
    double cut = 0.0;
    for (const Edge& e : g.edges())
        if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) cut += e.weight;

    BlockResult res{cut, mask};
    for (std::uint64_t k = begin + 1; k < end; ++k) {
        const std::uint64_t next = gray(k);
        const int bit = static_cast<int>(__builtin_ctzll(next ^ mask));
        const int v = bit + 1;
        const std::uint8_t old_side = side[static_cast<std::size_t>(v)];
        for (int eid : g.incident_edges(v)) {
            // Flipping v cuts the edges it previously agreed on and heals the
            // ones it crossed.
            const Edge& e = g.edge(eid);
            const int w = e.u == v ? e.v : e.u;
            if (side[static_cast<std::size_t>(w)] == old_side)
                cut += e.weight;
            else
                cut -= e.weight;
        }
        side[static_cast<std::size_t>(v)] = 1u - old_side;
        mask = next;
        if (cut > res.best || (cut == res.best && mask < res.best_mask)) {
            res.best = cut;
            res.best_mask = mask;
        }
    }
    return res;
}

}  // namespace

CutResult brute_force_maxcut(const Graph& g, int workers) {
    const int n = g.vertex_count();
    if (n > kBruteForceMaxVertices)
        throw std::invalid_argument("brute_force_maxcut: " + std::to_string(n) + " vertices exceeds the cap of " +
                                    std::to_string(kBruteForceMaxVertices));
    if (n == 0) return CutResult{{}, 0.0, std::nullopt};

    const std::uint64_t total = n == 1 ? 1 : (1ULL << (n - 1));
    int blocks = workers > 1 ? workers * 4 : 1;
    if (static_cast<std::uint64_t>(blocks) > total) blocks = 1;

    std::vector<BlockResult> results(static_cast<std::size_t>(blocks));
    if (blocks == 1) {
        results[0] = scan_block(g, 0, total);
    } else {
        ThreadPool pool(static_cast<std::size_t>(workers - 1));
        const std::uint64_t per = total / static_cast<std::uint64_t>(blocks);
        pool.parallel_for(static_cast<std::size_t>(blocks), [&](std::size_t b) {
            const std::uint64_t begin = per * b;
            const std::uint64_t end = b + 1 == static_cast<std::size_t>(blocks) ? total : per * (b + 1);
            results[b] = scan_block(g, begin, end);
        });
    }

    BlockResult best = results[0];
    for (const auto& r : results) {
        if (r.best > best.best || (r.best == best.best && r.best_mask < best.best_mask)) best = r;
    }

    CutResult out;
    out.assignment.assign(static_cast<std::size_t>(n), 0);
    for (int v = 1; v < n; ++v)
        out.assignment[static_cast<std::size_t>(v)] = (best.best_mask >> (v - 1)) & 1u;
    out.cut_value = g.cut_value(out.assignment);
    return out;
}

}  // namespace cutq
