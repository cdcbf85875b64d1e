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
#include <span>
#include <string>
#include <vector>

#include "cutq/graph.hpp"

namespace cutq {

/// Mixer families. Qaoa shares one phase angle and one X angle per layer;
/// Ma gives every edge and vertex its own angle; Xy adds an independent
/// Y-rotation angle per vertex; XeqY ties the X and Y angles together;
/// YOnly drops the X rotation entirely.
enum class Variant : std::uint8_t { Qaoa, Ma, Xy, XeqY, YOnly };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

/// Per-layer angle storage for a graph with n vertices and m edges.
///
/// Layout per layer: gamma has one entry per edge (Qaoa: a single shared
/// entry), beta and alpha one entry per vertex. Variant constraints are
/// maintained by construction and by set_free_parameters: Qaoa/Ma keep alpha
/// at zero, YOnly keeps beta at zero, XeqY mirrors beta into alpha.
///
/// Angles are stored as unwrapped reals; optimizers work on the unconstrained
/// domain and canonicalized() folds them into reporting ranges.
class AngleAssignment {
  public:
    AngleAssignment(Variant variant, int vertex_count, int edge_count, int depth = 1);

    static AngleAssignment qaoa1(double gamma, double beta, int vertex_count, int edge_count);

    Variant variant() const { return variant_; }
    int depth() const { return p_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    /// Free parameters per the ansatz family: Qaoa 2p, Ma and XeqY and YOnly
    /// (n+m)p, Xy (2n+m)p.
    int free_parameter_count() const;
    static int free_parameter_count(Variant v, int n, int m, int p);

    double gamma(int layer, int edge) const {
        return variant_ == Variant::Qaoa ? gamma_[static_cast<std::size_t>(layer)]
                                         : gamma_[static_cast<std::size_t>(layer) * m_ + edge];
    }
    double beta(int layer, int vertex) const {
        return variant_ == Variant::Qaoa ? beta_[static_cast<std::size_t>(layer)]
                                         : beta_[static_cast<std::size_t>(layer) * n_ + vertex];
    }
    double alpha(int layer, int vertex) const { return alpha_[static_cast<std::size_t>(layer) * n_ + vertex]; }

    /// Raw per-layer views (Qaoa gamma/beta views have length 1).
    std::span<const double> gamma_layer(int layer) const;
    std::span<const double> beta_layer(int layer) const;
    std::span<const double> alpha_layer(int layer) const;

    void set_gamma(int layer, int edge, double value);
    void set_beta(int layer, int vertex, double value);   // XeqY mirrors into alpha
    void set_alpha(int layer, int vertex, double value);

    /// Packs the free parameters, layer-major. Per layer: gamma block, then
    /// beta block (XeqY: the shared X=Y block), then alpha block (Xy only).
    std::vector<double> free_parameters() const;
    void set_free_parameters(std::span<const double> x);
    static AngleAssignment from_free_parameters(Variant variant, int vertex_count, int edge_count, int depth,
                                                std::span<const double> x);

    /// Copy with beta and alpha folded into [0, pi) and gamma into [0, 2*pi).
    AngleAssignment canonicalized() const;

  private:
    Variant variant_;
    int n_;
    int m_;
    int p_;
    std::vector<double> gamma_;
    std::vector<double> beta_;
    std::vector<double> alpha_;
};

/// Folds an angle into [0, period).
double wrap_angle(double angle, double period);

}  // namespace cutq
