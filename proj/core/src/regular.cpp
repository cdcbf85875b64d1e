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

#include "cutq/regular.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cutq/rng.hpp"

namespace cutq {

namespace {

// One pairing attempt. Returns edges on success; empty optional on dead-end.
std::vector<Edge>* attempt_pairing(int n, int degree, Rng& rng, std::vector<Edge>& out) {
    // points[i] lives at vertex points[i] / stays implicit: point p belongs to
    // vertex p / degree. We shuffle-select from the live pool instead.
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(degree));
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < degree; ++k) pool.push_back(v);

    std::set<std::pair<int, int>> used;
    out.clear();

    while (pool.size() >= 2) {
        bool placed = false;
        // Redraw on collisions; declare a dead-end once no unordered pair of
        // remaining points is valid.
        const std::size_t max_tries = 64 + pool.size() * pool.size();
        for (std::size_t t = 0; t < max_tries; ++t) {
            const std::size_t i = static_cast<std::size_t>(rng.next_below(pool.size()));
            std::size_t j = static_cast<std::size_t>(rng.next_below(pool.size() - 1));
            if (j >= i) ++j;
            int a = pool[i];
            int b = pool[j];
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (used.count({a, b})) continue;
            used.insert({a, b});
            out.push_back({a, b, 1.0});
            // Remove both points (remove the higher index first).
            const std::size_t hi = i > j ? i : j;
            const std::size_t lo = i > j ? j : i;
            pool[hi] = pool.back();
            pool.pop_back();
            pool[lo] = pool.back();
            pool.pop_back();
            placed = true;
            break;
        }
        if (!placed) {
            // Exhaustive check: if any valid pair exists we were just
            // unlucky; otherwise restart the whole pairing.
            bool any_valid = false;
            for (std::size_t i = 0; i + 1 < pool.size() && !any_valid; ++i)
                for (std::size_t j = i + 1; j < pool.size() && !any_valid; ++j) {
                    int a = pool[i], b = pool[j];
                    if (a == b) continue;
                    if (a > b) std::swap(a, b);
                    if (!used.count({a, b})) any_valid = true;
                }
            if (!any_valid) return nullptr;
        }
    }
    return &out;
}

}  // namespace

Graph generate_regular(int n, int degree, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("generate_regular: n must be positive");
    if (degree < 0) throw std::invalid_argument("generate_regular: degree must be non-negative");
    if (degree >= n)
        throw std::invalid_argument("generate_regular: degree " + std::to_string(degree) +
                                    " is infeasible with " + std::to_string(n) + " vertices");
    if ((static_cast<long long>(n) * degree) % 2 != 0)
        throw std::invalid_argument("generate_regular: n*D must be even (handshake parity)");

    Rng rng(derive_seed(seed, tag_hash("regular-pairing")));
    std::vector<Edge> edges;
    for (;;) {
        if (attempt_pairing(n, degree, rng, edges)) {
            return Graph(n, std::move(edges));
        }
    }
}

}  // namespace cutq
