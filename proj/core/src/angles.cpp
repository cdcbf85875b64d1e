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

#include "cutq/angles.hpp"

#include <cmath>
#include <stdexcept>

namespace cutq {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Qaoa: return "qaoa";
        case Variant::Ma: return "ma";
        case Variant::Xy: return "xy";
        case Variant::XeqY: return "xeqy";
        case Variant::YOnly: return "y";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    if (name == "qaoa") return Variant::Qaoa;
    if (name == "ma") return Variant::Ma;
    if (name == "xy") return Variant::Xy;
    if (name == "xeqy" || name == "x=y") return Variant::XeqY;
    if (name == "y") return Variant::YOnly;
    throw std::invalid_argument("unknown ansatz variant: " + name);
}

double wrap_angle(double angle, double period) {
    double r = std::fmod(angle, period);
    if (r < 0.0) r += period;
    return r;
}

AngleAssignment::AngleAssignment(Variant variant, int vertex_count, int edge_count, int depth)
    : variant_(variant), n_(vertex_count), m_(edge_count), p_(depth) {
    if (depth < 1) throw std::invalid_argument("angle assignment: depth must be >= 1");
    if (vertex_count < 0 || edge_count < 0)
        throw std::invalid_argument("angle assignment: negative size");
    const std::size_t layers = static_cast<std::size_t>(p_);
    gamma_.assign(variant_ == Variant::Qaoa ? layers : layers * static_cast<std::size_t>(m_), 0.0);
    beta_.assign(variant_ == Variant::Qaoa ? layers : layers * static_cast<std::size_t>(n_), 0.0);
    alpha_.assign(layers * static_cast<std::size_t>(n_), 0.0);
}

AngleAssignment AngleAssignment::qaoa1(double gamma, double beta, int vertex_count, int edge_count) {
    AngleAssignment a(Variant::Qaoa, vertex_count, edge_count, 1);
    a.gamma_[0] = gamma;
    a.beta_[0] = beta;
    return a;
}

int AngleAssignment::free_parameter_count(Variant v, int n, int m, int p) {
    switch (v) {
        case Variant::Qaoa: return 2 * p;
        case Variant::Ma: return (n + m) * p;
        case Variant::Xy: return (2 * n + m) * p;
        case Variant::XeqY: return (n + m) * p;
        case Variant::YOnly: return (n + m) * p;
    }
    return 0;
}

int AngleAssignment::free_parameter_count() const { return free_parameter_count(variant_, n_, m_, p_); }

std::span<const double> AngleAssignment::gamma_layer(int layer) const {
    const std::size_t stride = variant_ == Variant::Qaoa ? 1 : static_cast<std::size_t>(m_);
    return {gamma_.data() + static_cast<std::size_t>(layer) * stride, stride};
}

std::span<const double> AngleAssignment::beta_layer(int layer) const {
    const std::size_t stride = variant_ == Variant::Qaoa ? 1 : static_cast<std::size_t>(n_);
    return {beta_.data() + static_cast<std::size_t>(layer) * stride, stride};
}

std::span<const double> AngleAssignment::alpha_layer(int layer) const {
    return {alpha_.data() + static_cast<std::size_t>(layer) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
}

void AngleAssignment::set_gamma(int layer, int edge, double value) {
    if (variant_ == Variant::Qaoa)
        gamma_[static_cast<std::size_t>(layer)] = value;
    else
        gamma_[static_cast<std::size_t>(layer) * m_ + edge] = value;
}

void AngleAssignment::set_beta(int layer, int vertex, double value) {
    if (variant_ == Variant::YOnly)
        throw std::logic_error("angle assignment: Y mixer has no X angles");
    if (variant_ == Variant::Qaoa) {
        beta_[static_cast<std::size_t>(layer)] = value;
        return;
    }
    beta_[static_cast<std::size_t>(layer) * n_ + vertex] = value;
    if (variant_ == Variant::XeqY) alpha_[static_cast<std::size_t>(layer) * n_ + vertex] = value;
}

void AngleAssignment::set_alpha(int layer, int vertex, double value) {
    if (variant_ == Variant::Qaoa || variant_ == Variant::Ma)
        throw std::logic_error("angle assignment: this mixer has no Y angles");
    alpha_[static_cast<std::size_t>(layer) * n_ + vertex] = value;
    if (variant_ == Variant::XeqY) beta_[static_cast<std::size_t>(layer) * n_ + vertex] = value;
}

std::vector<double> AngleAssignment::free_parameters() const {
    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(free_parameter_count()));
    for (int l = 0; l < p_; ++l) {
        const auto g = gamma_layer(l);
        x.insert(x.end(), g.begin(), g.end());
        switch (variant_) {
            case Variant::Qaoa:
            case Variant::Ma:
            case Variant::XeqY: {
                const auto b = beta_layer(l);
                x.insert(x.end(), b.begin(), b.end());
                break;
            }
            case Variant::Xy: {
                const auto b = beta_layer(l);
                const auto a = alpha_layer(l);
                x.insert(x.end(), b.begin(), b.end());
                x.insert(x.end(), a.begin(), a.end());
                break;
            }
            case Variant::YOnly: {
                const auto a = alpha_layer(l);
                x.insert(x.end(), a.begin(), a.end());
                break;
            }
        }
    }
    return x;
}

void AngleAssignment::set_free_parameters(std::span<const double> x) {
    if (static_cast<int>(x.size()) != free_parameter_count())
        throw std::invalid_argument("angle assignment: expected " + std::to_string(free_parameter_count()) +
                                    " parameters, got " + std::to_string(x.size()));
    std::size_t k = 0;
    for (int l = 0; l < p_; ++l) {
        const int gcount = variant_ == Variant::Qaoa ? 1 : m_;
        for (int e = 0; e < gcount; ++e) set_gamma(l, e, x[k++]);
        switch (variant_) {
            case Variant::Qaoa:
                set_beta(l, 0, x[k++]);
                break;
            case Variant::Ma:
            case Variant::XeqY:
                for (int v = 0; v < n_; ++v) set_beta(l, v, x[k++]);
                break;
            case Variant::Xy:
                for (int v = 0; v < n_; ++v) set_beta(l, v, x[k++]);
                for (int v = 0; v < n_; ++v) set_alpha(l, v, x[k++]);
                break;
            case Variant::YOnly:
                for (int v = 0; v < n_; ++v) set_alpha(l, v, x[k++]);
                break;
        }
    }
}

AngleAssignment AngleAssignment::from_free_parameters(Variant variant, int vertex_count, int edge_count,
                                                      int depth, std::span<const double> x) {
    AngleAssignment a(variant, vertex_count, edge_count, depth);
    a.set_free_parameters(x);
    return a;
}

AngleAssignment AngleAssignment::canonicalized() const {
    AngleAssignment a = *this;
    for (auto& g : a.gamma_) g = wrap_angle(g, kTwoPi);
    for (auto& b : a.beta_) b = wrap_angle(b, kPi);
    for (auto& al : a.alpha_) al = wrap_angle(al, kPi);
    return a;
}

}  // namespace cutq
