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

#include <iosfwd>
#include <map>
#include <string>

#include "cutq/graph.hpp"

namespace cutq {

enum class GraphFormat { Csv, Json };

/// Result of loading: the graph plus the id remapping applied when the input
/// used sparse or non-contiguous vertex ids (original id -> dense id).
/// The map is empty when ids were already dense 0..n-1.
struct LoadedGraph {
    Graph graph;
    std::map<long long, int> id_remap;
};

/// Parses an edge list.
///
/// CSV: one edge per line "u,v,w" with w optional (default 1); lines starting
/// with '#' and blank lines are skipped. JSON: {"n": int, "edges":
/// [[u,v,w],...]} with w again optional per edge.
///
/// Self-loops, duplicate edges, and malformed fields are rejected with the
/// offending line number (CSV) or edge index (JSON) in the message.
LoadedGraph load_edge_list(std::istream& in, GraphFormat format);
LoadedGraph load_edge_list_file(const std::string& path);  // format from extension (.json else CSV)

/// Writes the canonical form: edges sorted with u < v, weights printed with
/// shortest round-trip formatting. save(load(s)) is byte-stable.
void save_edge_list(const Graph& g, std::ostream& out, GraphFormat format);
void save_edge_list_file(const Graph& g, const std::string& path);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

}  // namespace cutq
