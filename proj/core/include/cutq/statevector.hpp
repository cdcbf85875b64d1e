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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cutq/angles.hpp"
#include "cutq/graph.hpp"

namespace cutq {

/// Dense simulation cap: amplitudes are 2^n complex doubles.
inline constexpr int kStatevectorMaxQubits = 24;

/// Dense amplitude vector over computational basis states. Qubit q is bit q
/// of the basis index. Immutable once returned from build_state.
class Statevector {
  public:
    explicit Statevector(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const std::complex<double>> amplitudes() const { return amplitudes_; }
    std::complex<double> amplitude(std::uint64_t basis) const { return amplitudes_[basis]; }

    double norm() const;

    /// Probability-weighted basis index of the largest amplitude.
    std::uint64_t dominant_basis_state() const;

    /// Raw little-endian (real, imag) double pairs, for debugging dumps.
    void dump_binary(const std::string& path) const;
    static Statevector load_binary(const std::string& path);

  private:
    friend Statevector build_state(const Graph&, const AngleAssignment&);
    int n_qubits_;
    std::vector<std::complex<double>> amplitudes_;
};

/// Prepares the ansatz output state: the uniform superposition, then per
/// layer the diagonal cut phases (one factor exp(-i * gamma_uv * w_uv) on
/// every basis state where the edge is cut), then the per-qubit X rotations,
/// then the per-qubit Y rotations. The mixer stages are gated by the
/// assignment's variant. Throws above the qubit cap.
Statevector build_state(const Graph& g, const AngleAssignment& layers);

/// <C> = sum_z |psi_z|^2 C(z), streaming over basis states in Gray-code
/// order with incremental cut updates.
double expectation(const Statevector& psi, const Graph& g);

/// build_state + expectation fused over a caller-owned amplitude buffer, for
/// objective loops that evaluate thousands of times: no per-call allocation
/// once the scratch has its final size.
double ansatz_expectation(const Graph& g, const AngleAssignment& layers,
                          std::vector<std::complex<double>>& scratch);

/// `shots` i.i.d. basis-state draws from |psi|^2 via inverse-CDF sampling;
/// deterministic per seed and identical across platforms.
std::vector<std::uint64_t> sample(const Statevector& psi, int shots, std::uint64_t seed);

/// Empirical mean of the cut value over sampled bitstrings.
double shot_expectation(const Graph& g, const AngleAssignment& layers, int shots, std::uint64_t seed);

/// Cut value of one basis state.
double basis_cut_value(const Graph& g, std::uint64_t basis);

}  // namespace cutq
