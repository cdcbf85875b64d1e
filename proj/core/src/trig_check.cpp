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

#include "cutq/trig_check.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cutq {

ProductExpansionResiduals product_expansion_residuals(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("product_expansion_residuals: size mismatch");
    const std::size_t f = x.size();
    if (f > 12) throw std::invalid_argument("product_expansion_residuals: capped at 12 terms (2^f sums)");

    double prod_minus = 1.0, prod_plus = 1.0;
    for (std::size_t i = 0; i < f; ++i) {
        prod_minus *= std::cos(x[i] - y[i]);
        prod_plus *= std::cos(x[i] + y[i]);
    }

    std::vector<double> cx(f), sx(f), cy(f), sy(f);
    for (std::size_t i = 0; i < f; ++i) {
        cx[i] = std::cos(x[i]);
        sx[i] = std::sin(x[i]);
        cy[i] = std::cos(y[i]);
        sy[i] = std::sin(y[i]);
    }

    // Empty products (f = 0) leave every accumulator at its 1-term value.
    double sum_all = 0.0, sum_signed = 0.0, sum_even = 0.0, sum_odd = 0.0;
    const std::uint64_t subsets = 1ULL << f;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        double term = 1.0;
        int weight = 0;
        for (std::size_t i = 0; i < f; ++i) {
            if (mask & (1ULL << i)) {
                term *= sx[i] * sy[i];
                ++weight;
            } else {
                term *= cx[i] * cy[i];
            }
        }
        sum_all += term;
        sum_signed += (weight % 2 == 0) ? term : -term;
        if (weight % 2 == 0)
            sum_even += term;
        else
            sum_odd += term;
    }

    ProductExpansionResiduals r;
    r.difference_product = std::abs(prod_minus - sum_all);
    r.sum_product = std::abs(prod_plus - sum_signed);
    r.even_half = std::abs((prod_minus + prod_plus) - 2.0 * sum_even);
    r.odd_half = std::abs((prod_minus - prod_plus) - 2.0 * sum_odd);
    return r;
}

}  // namespace cutq
