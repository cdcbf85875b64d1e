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

#include "cutq/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "cutq/rng.hpp"

namespace cutq {

namespace {

// The kernels below work on explicit real/imag doubles (std::complex
// products route through the inf/nan-correct libgcc helper, which is branchy
// and kills vectorization in these loops). std::complex<double> is
// array-compatible with double[2], so the amplitude storage is reinterpreted
// in place.
inline double* raw(std::vector<std::complex<double>>& amp) { return reinterpret_cast<double*>(amp.data()); }

// Flattened incidence used by the Gray-code walks: per vertex, (edge id,
// other endpoint) pairs.
struct IncidenceTable {
    std::vector<int> offset;  // n + 1
    std::vector<int> edge;
    std::vector<int> other;

    explicit IncidenceTable(const Graph& g) {
        const int n = g.vertex_count();
        offset.assign(static_cast<std::size_t>(n) + 1, 0);
        edge.reserve(2 * static_cast<std::size_t>(g.edge_count()));
        other.reserve(edge.capacity());
        for (int v = 0; v < n; ++v) {
            offset[static_cast<std::size_t>(v)] = static_cast<int>(edge.size());
            for (int eid : g.incident_edges(v)) {
                const Edge& e = g.edge(eid);
                edge.push_back(eid);
                other.push_back(e.u == v ? e.v : e.u);
            }
        }
        offset[static_cast<std::size_t>(n)] = static_cast<int>(edge.size());
    }
};

// All edge phases of one layer in a single pass: walk basis states in
// Gray-code order maintaining the joint phase factor of the cut edges (the
// diagonal factors commute, so they combine into one rotation). Each step
// flips one vertex, toggling only its incident edges; the factor is updated
// by premultiplied per-edge rotations and periodically resynced from the
// exact running angle to keep multiplicative drift negligible.
void apply_layer_phases(std::vector<std::complex<double>>& amp, const Graph& g, const IncidenceTable& inc,
                        const std::vector<double>& edge_angle) {
    const std::uint64_t size = amp.size();
    const int m = g.edge_count();
    std::vector<double> rot_re(2 * static_cast<std::size_t>(m)), rot_im(2 * static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        const double a = edge_angle[static_cast<std::size_t>(e)];
        rot_re[2 * static_cast<std::size_t>(e)] = std::cos(a);  // edge becomes cut
        rot_im[2 * static_cast<std::size_t>(e)] = -std::sin(a);
        rot_re[2 * static_cast<std::size_t>(e) + 1] = std::cos(a);  // edge heals
        rot_im[2 * static_cast<std::size_t>(e) + 1] = std::sin(a);
    }

    double* a = raw(amp);
    double fr = 1.0, fi = 0.0;  // all edges uncut at basis state 0
    double phase = 0.0;
    std::uint64_t state = 0;
    for (std::uint64_t k = 1; k < size; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const int v = static_cast<int>(__builtin_ctzll(next ^ state));
        const int begin = inc.offset[static_cast<std::size_t>(v)];
        const int end = inc.offset[static_cast<std::size_t>(v) + 1];
        for (int i = begin; i < end; ++i) {
            const int eid = inc.edge[static_cast<std::size_t>(i)];
            const int w = inc.other[static_cast<std::size_t>(i)];
            const std::uint64_t was_cut = ((state >> v) ^ (state >> w)) & 1ULL;
            const std::size_t r = 2 * static_cast<std::size_t>(eid) + was_cut;
            const double rr = rot_re[r], ri = rot_im[r];
            const double nfr = fr * rr - fi * ri;
            fi = fr * ri + fi * rr;
            fr = nfr;
            phase += was_cut ? -edge_angle[static_cast<std::size_t>(eid)]
                             : edge_angle[static_cast<std::size_t>(eid)];
        }
        state = next;
        if ((k & 0x7ffULL) == 0) {
            fr = std::cos(phase);
            fi = -std::sin(phase);
        }
        const std::size_t idx = 2 * static_cast<std::size_t>(state);
        const double ar = a[idx], ai = a[idx + 1];
        a[idx] = ar * fr - ai * fi;
        a[idx + 1] = ar * fi + ai * fr;
    }
}

// Generic single-qubit gate [[m00, m01], [m10, m11]] on qubit q, entries as
// real/imag pairs; strided pair update.
void apply_single_qubit(std::vector<std::complex<double>>& amp, int q, double m00r, double m00i,
                        double m01r, double m01i, double m10r, double m10i, double m11r, double m11i) {
    const std::uint64_t bit = 1ULL << q;
    const std::uint64_t size = amp.size();
    double* a = raw(amp);
    for (std::uint64_t base = 0; base < size; base += 2 * bit) {
        const std::size_t lo = 2 * base;
        const std::size_t hi = lo + 2 * bit;
        for (std::uint64_t off = 0; off < bit; ++off) {
            const std::size_t i0 = lo + 2 * off;
            const std::size_t i1 = hi + 2 * off;
            const double x0r = a[i0], x0i = a[i0 + 1];
            const double x1r = a[i1], x1i = a[i1 + 1];
            a[i0] = m00r * x0r - m00i * x0i + m01r * x1r - m01i * x1i;
            a[i0 + 1] = m00r * x0i + m00i * x0r + m01r * x1i + m01i * x1r;
            a[i1] = m10r * x0r - m10i * x0i + m11r * x1r - m11i * x1i;
            a[i1 + 1] = m10r * x0i + m10i * x0r + m11r * x1i + m11i * x1r;
        }
    }
}

// exp(-i * beta * X): [[cos b, -i sin b], [-i sin b, cos b]]
void apply_x_rotation(std::vector<std::complex<double>>& amp, int q, double beta) {
    const double c = std::cos(beta), s = std::sin(beta);
    apply_single_qubit(amp, q, c, 0.0, 0.0, -s, 0.0, -s, c, 0.0);
}

// exp(-i * alpha * Y): [[cos a, -sin a], [sin a, cos a]]
void apply_y_rotation(std::vector<std::complex<double>>& amp, int q, double alpha) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    apply_single_qubit(amp, q, c, 0.0, -s, 0.0, s, 0.0, c, 0.0);
}

// The Y rotation composed onto the X rotation, one strided pass per qubit.
void apply_xy_rotation(std::vector<std::complex<double>>& amp, int q, double beta, double alpha) {
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    apply_single_qubit(amp, q, ca * cb, sa * sb, -sa * cb, -ca * sb, sa * cb, -ca * sb, ca * cb,
                       -sa * sb);
}

void build_into(std::vector<std::complex<double>>& amp, const Graph& g, const AngleAssignment& layers) {
    const int n = g.vertex_count();
    if (n > kStatevectorMaxQubits)
        throw std::invalid_argument("build_state: " + std::to_string(n) + " qubits exceeds the cap of " +
                                    std::to_string(kStatevectorMaxQubits));
    if (layers.vertex_count() != n || layers.edge_count() != g.edge_count())
        throw std::invalid_argument("build_state: assignment does not match graph");

    amp.assign(1ULL << n, std::complex<double>(0.0, 0.0));
    const double root = 1.0 / std::sqrt(static_cast<double>(amp.size()));
    std::fill(amp.begin(), amp.end(), std::complex<double>(root, 0.0));

    const Variant variant = layers.variant();
    const bool has_x = variant != Variant::YOnly;
    const bool has_y = variant == Variant::Xy || variant == Variant::XeqY || variant == Variant::YOnly;

    const IncidenceTable inc(g);
    std::vector<double> edge_angle(static_cast<std::size_t>(g.edge_count()));
    for (int layer = 0; layer < layers.depth(); ++layer) {
        for (int e = 0; e < g.edge_count(); ++e)
            edge_angle[static_cast<std::size_t>(e)] = layers.gamma(layer, e) * g.edge(e).weight;
        apply_layer_phases(amp, g, inc, edge_angle);
        if (has_x && has_y) {
            for (int q = 0; q < n; ++q)
                apply_xy_rotation(amp, q, layers.beta(layer, q), layers.alpha(layer, q));
        } else if (has_x) {
            for (int q = 0; q < n; ++q) apply_x_rotation(amp, q, layers.beta(layer, q));
        } else {
            for (int q = 0; q < n; ++q) apply_y_rotation(amp, q, layers.alpha(layer, q));
        }
    }
}

double expectation_of(std::span<const std::complex<double>> amp, const Graph& g,
                      const IncidenceTable& inc) {
    const std::uint64_t size = amp.size();
    const double* a = reinterpret_cast<const double*>(amp.data());

    // Gray-order walk: consecutive states differ in one vertex, so the cut
    // updates by that vertex's incident edges.
    double cut = basis_cut_value(g, 0);
    std::uint64_t state = 0;
    double total = cut * (a[0] * a[0] + a[1] * a[1]);
    for (std::uint64_t k = 1; k < size; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const int v = static_cast<int>(__builtin_ctzll(next ^ state));
        const int begin = inc.offset[static_cast<std::size_t>(v)];
        const int end = inc.offset[static_cast<std::size_t>(v) + 1];
        for (int i = begin; i < end; ++i) {
            const int w = inc.other[static_cast<std::size_t>(i)];
            const std::uint64_t was_cut = ((state >> v) ^ (state >> w)) & 1ULL;
            const double weight = g.edge(inc.edge[static_cast<std::size_t>(i)]).weight;
            cut += was_cut ? -weight : weight;
        }
        state = next;
        const std::size_t idx = 2 * state;
        total += cut * (a[idx] * a[idx] + a[idx + 1] * a[idx + 1]);
    }
    return total;
}

}  // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 0 || n_qubits > kStatevectorMaxQubits)
        throw std::invalid_argument("statevector: qubit count " + std::to_string(n_qubits) +
                                    " outside [0, " + std::to_string(kStatevectorMaxQubits) + "]");
    amplitudes_.assign(1ULL << n_qubits, {0.0, 0.0});
    amplitudes_[0] = {1.0, 0.0};
}

double Statevector::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += a.real() * a.real() + a.imag() * a.imag();
    return std::sqrt(s);
}

std::uint64_t Statevector::dominant_basis_state() const {
    std::uint64_t best = 0;
    double best_p = -1.0;
    for (std::uint64_t z = 0; z < amplitudes_.size(); ++z) {
        const double p = std::norm(amplitudes_[z]);
        if (p > best_p) {
            best_p = p;
            best = z;
        }
    }
    return best;
}

void Statevector::dump_binary(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("statevector dump: cannot open " + path);
    for (const auto& a : amplitudes_) {
        const double re = a.real(), im = a.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(double));
        out.write(reinterpret_cast<const char*>(&im), sizeof(double));
    }
}

Statevector Statevector::load_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw std::runtime_error("statevector load: cannot open " + path);
    const std::streamoff bytes = in.tellg();
    const std::uint64_t count = static_cast<std::uint64_t>(bytes) / (2 * sizeof(double));
    int n = 0;
    while ((1ULL << n) < count) ++n;
    if ((1ULL << n) != count)
        throw std::runtime_error("statevector load: file size is not a power-of-two amplitude count");
    Statevector psi(n);
    in.seekg(0);
    for (std::uint64_t z = 0; z < count; ++z) {
        double re = 0.0, im = 0.0;
        in.read(reinterpret_cast<char*>(&re), sizeof(double));
        in.read(reinterpret_cast<char*>(&im), sizeof(double));
        psi.amplitudes_[z] = {re, im};
    }
    return psi;
}

Statevector build_state(const Graph& g, const AngleAssignment& layers) {
    Statevector psi(g.vertex_count());
    build_into(psi.amplitudes_, g, layers);
    return psi;
}

double basis_cut_value(const Graph& g, std::uint64_t basis) {
    double cut = 0.0;
    for (const Edge& e : g.edges()) {
        const bool differs = ((basis >> e.u) & 1ULL) != ((basis >> e.v) & 1ULL);
        if (differs) cut += e.weight;
    }
    return cut;
}

double expectation(const Statevector& psi, const Graph& g) {
    if (psi.n_qubits() != g.vertex_count())
        throw std::invalid_argument("expectation: statevector and graph dimensions differ");
    const IncidenceTable inc(g);
    return expectation_of(psi.amplitudes(), g, inc);
}

double ansatz_expectation(const Graph& g, const AngleAssignment& layers,
                          std::vector<std::complex<double>>& scratch) {
    build_into(scratch, g, layers);
    const IncidenceTable inc(g);
    return expectation_of(scratch, g, inc);
}

std::vector<std::uint64_t> sample(const Statevector& psi, int shots, std::uint64_t seed) {
    if (shots < 0) throw std::invalid_argument("sample: negative shot count");
    const auto amp = psi.amplitudes();
    std::vector<double> cdf(amp.size());
    double acc = 0.0;
    for (std::size_t z = 0; z < amp.size(); ++z) {
        acc += amp[z].real() * amp[z].real() + amp[z].imag() * amp[z].imag();
        cdf[z] = acc;
    }
    cdf.back() = acc;

    Rng rng(derive_seed(seed, tag_hash("statevector-sample")));
    std::vector<std::uint64_t> draws;
    draws.reserve(static_cast<std::size_t>(shots));
    for (int s = 0; s < shots; ++s) {
        const double u = rng.next_double() * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        draws.push_back(static_cast<std::uint64_t>(it == cdf.end() ? cdf.size() - 1 : it - cdf.begin()));
    }
    return draws;
}

double shot_expectation(const Graph& g, const AngleAssignment& layers, int shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shot_expectation: need at least one shot");
    const Statevector psi = build_state(g, layers);
    const auto draws = sample(psi, shots, seed);
    double total = 0.0;
    for (std::uint64_t z : draws) total += basis_cut_value(g, z);
    return total / static_cast<double>(shots);
}

}  // namespace cutq
