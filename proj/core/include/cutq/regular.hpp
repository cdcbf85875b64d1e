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

#include "cutq/graph.hpp"

namespace cutq {

/// Generates a simple D-regular graph on n vertices by the pairing model:
/// each vertex contributes D points, points are matched uniformly at random,
/// pairs that would create a self-loop or duplicate edge are redrawn, and the
/// whole pairing restarts if the remaining points admit no valid pair.
/// Deterministic per seed.
///
/// Requires n*D even and D < n; throws std::invalid_argument otherwise.
/// Connectedness is not enforced; query Graph::is_connected on the result.
Graph generate_regular(int n, int degree, std::uint64_t seed);

}  // namespace cutq
