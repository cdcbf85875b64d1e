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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "cutq/analytic.hpp"
#include "cutq/graph.hpp"
#include "cutq/regular.hpp"
#include "cutq/rng.hpp"
#include "cutq/statevector.hpp"

namespace cutq {
namespace {

constexpr double kPi = 3.14159265358979323846;
using Amp = std::complex<double>;

Graph k2() { return Graph(2, {{0, 1, 1.0}}); }

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
    return Graph(leaves + 1, std::move(edges));
}

Graph random_weighted(int n, double density, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < density) edges.push_back({u, v, rng.uniform(0.0, 2.0)});
    if (edges.empty()) edges.push_back({0, 1, 1.0});
    return Graph(n, std::move(edges));
}

AngleAssignment random_assignment(Variant variant, const Graph& g, Rng& rng, int depth = 1) {
    AngleAssignment a(variant, g.vertex_count(), g.edge_count(), depth);
    std::vector<double> x(static_cast<std::size_t>(a.free_parameter_count()));
    for (auto& xi : x) xi = rng.uniform(-2.0 * kPi, 2.0 * kPi);
    a.set_free_parameters(x);
    return a;
}

// Reference state builder, written in the most literal way possible: start
// from the uniform superposition, multiply each basis amplitude by every
// edge's phase factor separately, then apply each 2x2 mixer matrix by
// explicit enumeration over basis pairs.
std::vector<Amp> naive_state(const Graph& g, const AngleAssignment& a) {
    const int n = g.vertex_count();
    const std::size_t dim = 1ULL << n;
    std::vector<Amp> amp(dim, Amp(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));

    const bool has_x = a.variant() != Variant::YOnly;
    const bool has_y =
        a.variant() == Variant::Xy || a.variant() == Variant::XeqY || a.variant() == Variant::YOnly;

    auto apply_matrix = [&](int q, Amp m00, Amp m01, Amp m10, Amp m11) {
        std::vector<Amp> next(dim);
        for (std::size_t z = 0; z < dim; ++z) {
            const std::size_t partner = z ^ (1ULL << q);
            const bool bit = (z >> q) & 1ULL;
            if (!bit)
                next[z] = m00 * amp[z] + m01 * amp[partner];
            else
                next[z] = m10 * amp[partner] + m11 * amp[z];
        }
        amp = std::move(next);
    };

    for (int layer = 0; layer < a.depth(); ++layer) {
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& edge = g.edge(e);
            const double angle = a.gamma(layer, e) * edge.weight;
            const Amp phase(std::cos(angle), -std::sin(angle));
            for (std::size_t z = 0; z < dim; ++z) {
                const bool cut = ((z >> edge.u) & 1ULL) != ((z >> edge.v) & 1ULL);
                if (cut) amp[z] *= phase;
            }
        }
        if (has_x) {
            for (int q = 0; q < n; ++q) {
                const double b = a.beta(layer, q);
                apply_matrix(q, {std::cos(b), 0.0}, {0.0, -std::sin(b)}, {0.0, -std::sin(b)},
                             {std::cos(b), 0.0});
            }
        }
        if (has_y) {
            for (int q = 0; q < n; ++q) {
                const double al = a.alpha(layer, q);
                apply_matrix(q, {std::cos(al), 0.0}, {-std::sin(al), 0.0}, {std::sin(al), 0.0},
                             {std::cos(al), 0.0});
            }
        }
    }
    return amp;
}

double naive_expectation(const Graph& g, const std::vector<Amp>& amp) {
    double total = 0.0;
    for (std::size_t z = 0; z < amp.size(); ++z) total += std::norm(amp[z]) * basis_cut_value(g, z);
    return total;
}

TEST(BuildState, IdentityCircuitKeepsUniformState) {
    const Graph g = k2();
    AngleAssignment a(Variant::Qaoa, 2, 1, 1);
    const Statevector psi = build_state(g, a);
    for (const auto& amp : psi.amplitudes()) EXPECT_NEAR(std::abs(amp), 0.5, 1e-12);
    EXPECT_NEAR(expectation(psi, g), 0.5, 1e-12);
}

TEST(BuildState, MatchesNaiveBuilderAllVariants) {
    Rng rng(101);
    for (int trial = 0; trial < 4; ++trial) {
        const Graph g = random_weighted(6, 0.5, 1000 + trial);
        for (Variant v : {Variant::Qaoa, Variant::Ma, Variant::Xy, Variant::XeqY, Variant::YOnly}) {
            const AngleAssignment a = random_assignment(v, g, rng);
            const Statevector psi = build_state(g, a);
            const std::vector<Amp> ref = naive_state(g, a);
            for (std::size_t z = 0; z < ref.size(); ++z)
                EXPECT_NEAR(std::abs(psi.amplitude(z) - ref[z]), 0.0, 1e-11);
        }
    }
}

TEST(BuildState, MultiLayerMatchesNaive) {
    Rng rng(103);
    const Graph g = random_weighted(5, 0.6, 1100);
    for (Variant v : {Variant::Qaoa, Variant::Ma, Variant::XeqY}) {
        const AngleAssignment a = random_assignment(v, g, rng, 3);
        const Statevector psi = build_state(g, a);
        const std::vector<Amp> ref = naive_state(g, a);
        for (std::size_t z = 0; z < ref.size(); ++z)
            EXPECT_NEAR(std::abs(psi.amplitude(z) - ref[z]), 0.0, 1e-11);
    }
}

TEST(BuildState, NormPreservedPerLayer) {
    Rng rng(107);
    const Graph g = generate_regular(10, 3, 31);
    for (int depth = 1; depth <= 3; ++depth) {
        const AngleAssignment a = random_assignment(Variant::XeqY, g, rng, depth);
        const Statevector psi = build_state(g, a);
        EXPECT_NEAR(psi.norm(), 1.0, depth * 1e-12);
    }
}

TEST(BuildState, VariantGating) {
    Rng rng(109);
    const Graph g = random_weighted(6, 0.5, 1200);
    // XY with all alpha = 0 equals MA amplitude-wise.
    AngleAssignment xy(Variant::Xy, g.vertex_count(), g.edge_count(), 1);
    AngleAssignment ma(Variant::Ma, g.vertex_count(), g.edge_count(), 1);
    for (int e = 0; e < g.edge_count(); ++e) {
        const double gam = rng.uniform(0.0, 2.0 * kPi);
        xy.set_gamma(0, e, gam);
        ma.set_gamma(0, e, gam);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const double b = rng.uniform(0.0, kPi);
        xy.set_beta(0, v, b);
        ma.set_beta(0, v, b);
        xy.set_alpha(0, v, 0.0);
    }
    const Statevector a1 = build_state(g, xy);
    const Statevector a2 = build_state(g, ma);
    for (std::size_t z = 0; z < a1.dimension(); ++z)
        EXPECT_NEAR(std::abs(a1.amplitude(z) - a2.amplitude(z)), 0.0, 1e-12);

    // MA with uniform angles equals the shared-angle state.
    AngleAssignment qaoa(Variant::Qaoa, g.vertex_count(), g.edge_count(), 1);
    qaoa.set_gamma(0, 0, 1.1);
    qaoa.set_beta(0, 0, 0.6);
    AngleAssignment uniform(Variant::Ma, g.vertex_count(), g.edge_count(), 1);
    for (int e = 0; e < g.edge_count(); ++e) uniform.set_gamma(0, e, 1.1);
    for (int v = 0; v < g.vertex_count(); ++v) uniform.set_beta(0, v, 0.6);
    const Statevector b1 = build_state(g, qaoa);
    const Statevector b2 = build_state(g, uniform);
    for (std::size_t z = 0; z < b1.dimension(); ++z)
        EXPECT_NEAR(std::abs(b1.amplitude(z) - b2.amplitude(z)), 0.0, 1e-12);
}

TEST(BuildState, ExactSolutionStateOnStar) {
    // Y mixer at the exact-solution angles: the output concentrates on one
    // basis state whose cut is the edge count.
    const Graph s4 = star_graph(4);
    AngleAssignment a(Variant::YOnly, s4.vertex_count(), s4.edge_count(), 1);
    for (int e = 0; e < s4.edge_count(); ++e) a.set_gamma(0, e, kPi);
    for (int v = 0; v < s4.vertex_count(); ++v) a.set_alpha(0, v, kPi / 4.0);
    const Statevector psi = build_state(s4, a);
    const std::uint64_t z = psi.dominant_basis_state();
    EXPECT_GE(std::norm(psi.amplitude(z)), 1.0 - 1e-9);
    EXPECT_DOUBLE_EQ(basis_cut_value(s4, z), 4.0);
}

TEST(BuildState, CapEnforced) {
    AngleAssignment a(Variant::Qaoa, 25, 0, 1);
    EXPECT_THROW(build_state(Graph(25, {}), a), std::invalid_argument);
}

TEST(Expectation, UniformStateGivesHalfEdges) {
    const Graph g = generate_regular(8, 3, 51);
    AngleAssignment a(Variant::Qaoa, g.vertex_count(), g.edge_count(), 1);
    const Statevector psi = build_state(g, a);
    EXPECT_NEAR(expectation(psi, g), g.edge_count() / 2.0, 1e-10);
}

TEST(Expectation, MatchesNaiveContraction) {
    Rng rng(113);
    for (int trial = 0; trial < 5; ++trial) {
        const Graph g = random_weighted(6, 0.5, 1300 + trial);
        const AngleAssignment a = random_assignment(Variant::Xy, g, rng);
        const Statevector psi = build_state(g, a);
        const std::vector<Amp> ref = naive_state(g, a);
        EXPECT_NEAR(expectation(psi, g), naive_expectation(g, ref), 1e-10);
    }
}

TEST(Expectation, BasisStatesAreDeterministic) {
    const Graph k3(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
    for (std::uint64_t z = 0; z < 8; ++z) {
        const double c = basis_cut_value(k3, z);
        EXPECT_TRUE(c == 0.0 || c == 2.0);
    }
}

TEST(Expectation, DimensionMismatchThrows) {
    const Graph g = k2();
    AngleAssignment a(Variant::Qaoa, 2, 1, 1);
    const Statevector psi = build_state(g, a);
    const Graph bigger(3, {{0, 1, 1.0}});
    EXPECT_THROW(expectation(psi, bigger), std::invalid_argument);
}

TEST(AnalyticOracle, AllVariantsMatchSimulator) {
    // The closed forms and the simulator are independent routes to the same
    // number; random weighted instances, all variants.
    Rng rng(127);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_weighted(8, 0.5, 1400 + trial);
        const AnalyticEvaluator eval(g);
        for (Variant v : {Variant::Qaoa, Variant::Ma, Variant::Xy, Variant::XeqY, Variant::YOnly}) {
            for (int draw = 0; draw < 5; ++draw) {
                const AngleAssignment a = random_assignment(v, g, rng);
                const double analytic = eval.expectation(a);
                const double simulated = expectation(build_state(g, a), g);
                worst = std::max(worst, std::abs(analytic - simulated));
                EXPECT_NEAR(analytic, simulated, 1e-9);
            }
        }
    }
    RecordProperty("worst_abs_difference", worst);
}

TEST(Sampling, DeltaDistribution) {
    // The exact-solution star state is (numerically) a basis state: every
    // draw lands on it.
    const Graph s4 = star_graph(4);
    AngleAssignment a(Variant::YOnly, s4.vertex_count(), s4.edge_count(), 1);
    for (int e = 0; e < s4.edge_count(); ++e) a.set_gamma(0, e, kPi);
    for (int v = 0; v < s4.vertex_count(); ++v) a.set_alpha(0, v, kPi / 4.0);
    const Statevector psi = build_state(s4, a);
    const auto draws = sample(psi, 200, 7);
    for (std::uint64_t z : draws) EXPECT_EQ(z, psi.dominant_basis_state());
}

TEST(Sampling, UniformTwoQubitFrequencies) {
    const Graph g = k2();
    AngleAssignment a(Variant::Qaoa, 2, 1, 1);
    const Statevector psi = build_state(g, a);
    const int shots = 100000;
    const auto draws = sample(psi, shots, 12345);
    std::vector<int> counts(4, 0);
    for (std::uint64_t z : draws) ++counts[static_cast<std::size_t>(z)];
    for (int c : counts) EXPECT_NEAR(static_cast<double>(c) / shots, 0.25, 0.01);
}

TEST(Sampling, DeterministicPerSeed) {
    const Graph g = random_weighted(6, 0.5, 1500);
    Rng rng(131);
    const AngleAssignment a = random_assignment(Variant::XeqY, g, rng);
    const Statevector psi = build_state(g, a);
    EXPECT_EQ(sample(psi, 100, 9), sample(psi, 100, 9));
    EXPECT_NE(sample(psi, 100, 9), sample(psi, 100, 10));
}

TEST(Sampling, ShotExpectationTracksExact) {
    // Empirical means over 1024 shots stay within a few standard errors on
    // most seeds.
    Rng rng(137);
    const Graph g = generate_regular(10, 3, 71);
    const AngleAssignment a = random_assignment(Variant::XeqY, g, rng);
    const Statevector psi = build_state(g, a);
    const double exact = expectation(psi, g);

    // Empirical variance of the cut under the sampled distribution.
    const auto probe = sample(psi, 4096, 1);
    double mean = 0.0, second = 0.0;
    for (std::uint64_t z : probe) {
        const double c = basis_cut_value(g, z);
        mean += c;
        second += c * c;
    }
    mean /= static_cast<double>(probe.size());
    second /= static_cast<double>(probe.size());
    const double sigma = std::sqrt(std::max(0.0, second - mean * mean));

    const int shots = 1024;
    int within = 0;
    const int seeds = 100;
    for (int s = 0; s < seeds; ++s) {
        const double est = shot_expectation(g, a, shots, 1000 + s);
        if (std::abs(est - exact) <= 4.0 * sigma / std::sqrt(static_cast<double>(shots))) ++within;
    }
    EXPECT_GE(within, 99);
}

TEST(Statevector, BinaryDumpRoundTrip) {
    const Graph g = random_weighted(5, 0.6, 1600);
    Rng rng(139);
    const AngleAssignment a = random_assignment(Variant::Xy, g, rng);
    const Statevector psi = build_state(g, a);
    const std::string path = testing::TempDir() + "psi.bin";
    psi.dump_binary(path);
    const Statevector back = Statevector::load_binary(path);
    ASSERT_EQ(back.n_qubits(), psi.n_qubits());
    for (std::size_t z = 0; z < psi.dimension(); ++z)
        EXPECT_EQ(back.amplitude(z), psi.amplitude(z));
    std::remove(path.c_str());
}

}  // namespace
}  // namespace cutq
