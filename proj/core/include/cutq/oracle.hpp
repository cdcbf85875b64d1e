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

#include "cutq/graph.hpp"

namespace cutq {

/// Hard cap on exact solving; 2^(n-1) assignments are enumerated.
inline constexpr int kBruteForceMaxVertices = 26;

/// Exact MaxCut by exhaustive enumeration. Vertex 0 is pinned to side 0
/// (complement symmetry halves the search), and assignments are walked in
/// Gray-code order so each step updates the running cut by one vertex flip.
///
/// The search space may be partitioned over `workers` threads; the returned
/// optimum and assignment do not depend on the worker count (ties broken by
/// smallest assignment encoding). Throws std::invalid_argument above the cap.
CutResult brute_force_maxcut(const Graph& g, int workers = 1);

}  // namespace cutq
