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

#include <span>

namespace cutq {

/// Cross-check of the cosine-product identities behind the edge-expectation
/// kernels. The kernels compute products like prod_i cos(x_i ± y_i) in a
/// linear pass; each such product equals a sum of 2^f sign-weighted
/// sine/cosine monomials, and the even/odd halves of that sum give the
/// half-sum and half-difference of the two products. This evaluates both
/// sides directly and reports the absolute residuals.
///
/// Verification support only: the exponential-cost right-hand sides never
/// appear in evaluation paths. Capped at f <= 12 terms.
struct ProductExpansionResiduals {
    double difference_product = 0.0;  // prod cos(x-y) vs full monomial sum
    double sum_product = 0.0;         // prod cos(x+y) vs sign-alternating sum
    double even_half = 0.0;           // sum of both products vs 2 * even-weight terms
    double odd_half = 0.0;            // difference of products vs 2 * odd-weight terms
};

ProductExpansionResiduals product_expansion_residuals(std::span<const double> x, std::span<const double> y);

}  // namespace cutq
