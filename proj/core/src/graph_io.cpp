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

#include "cutq/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cutq {

namespace {

struct RawEdge {
    long long u;
    long long v;
    double w;
};

// Remaps arbitrary ids to dense 0..n-1 (order of first appearance is not
// used; ids are sorted so the remap is input-order independent).
LoadedGraph finish(std::vector<RawEdge> raw) {
    std::set<long long> ids;
    for (const auto& e : raw) {
        ids.insert(e.u);
        ids.insert(e.v);
    }
    std::map<long long, int> remap;
    bool dense = true;
    int next = 0;
    for (long long id : ids) {
        if (id != next) dense = false;
        remap[id] = next++;
    }
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw)
        edges.push_back({remap.at(e.u), remap.at(e.v), e.w});
    LoadedGraph out{Graph(next, std::move(edges)), {}};
    if (!dense) out.id_remap = std::move(remap);
    return out;
}

double parse_weight(const std::string& field, int line) {
    double w = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, w);
    if (ec != std::errc() || ptr != last)
        throw std::runtime_error("edge list line " + std::to_string(line) + ": bad weight '" + field + "'");
    return w;
}

long long parse_vertex(const std::string& field, int line) {
    long long v = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw std::runtime_error("edge list line " + std::to_string(line) + ": bad vertex id '" + field + "'");
    return v;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

LoadedGraph load_csv(std::istream& in) {
    std::vector<RawEdge> raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(trimmed(field));
        if (fields.size() < 2 || fields.size() > 3)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": expected 'u,v[,w]', got '" + t + "'");
        RawEdge e;
        e.u = parse_vertex(fields[0], lineno);
        e.v = parse_vertex(fields[1], lineno);
        e.w = fields.size() == 3 ? parse_weight(fields[2], lineno) : 1.0;
        if (e.u == e.v)
            throw std::runtime_error("edge list line " + std::to_string(lineno) + ": self-loop at vertex " +
                                     std::to_string(e.u));
        raw.push_back(e);
    }
    try {
        return finish(std::move(raw));
    } catch (const std::invalid_argument& err) {
        throw std::runtime_error(std::string("edge list: ") + err.what());
    }
}

LoadedGraph load_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& err) {
        throw std::runtime_error(std::string("graph json: parse failure: ") + err.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::runtime_error("graph json: expected object with 'n' and 'edges'");
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    int index = 0;
    for (const auto& item : j.at("edges")) {
        if (!item.is_array() || item.size() < 2 || item.size() > 3)
            throw std::runtime_error("graph json: edge " + std::to_string(index) +
                                     " must be [u,v] or [u,v,w]");
        Edge e;
        e.u = item[0].get<int>();
        e.v = item[1].get<int>();
        e.weight = item.size() == 3 ? item[2].get<double>() : 1.0;
        edges.push_back(e);
        ++index;
    }
    try {
        return LoadedGraph{Graph(n, std::move(edges)), {}};
    } catch (const std::invalid_argument& err) {
        throw std::runtime_error(std::string("graph json: ") + err.what());
    }
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, GraphFormat format) {
    return format == GraphFormat::Csv ? load_csv(in) : load_json(in);
}

LoadedGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    return load_edge_list(in, json ? GraphFormat::Json : GraphFormat::Csv);
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void save_edge_list(const Graph& g, std::ostream& out, GraphFormat format) {
    if (format == GraphFormat::Csv) {
        out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
        for (const Edge& e : g.edges())
            out << e.u << "," << e.v << "," << format_double(e.weight) << "\n";
        return;
    }
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.weight});
    out << j.dump() << "\n";
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    save_edge_list(g, out, json ? GraphFormat::Json : GraphFormat::Csv);
}

}  // namespace cutq
