// Copyright 2026 The qcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCUT_SCHMIDT_H
#define QCUT_SCHMIDT_H

#include <optional>
#include <vector>

#include "qcut/decompose.h"
#include "qcut/tensor.h"

namespace qcut {

/// u = sum_i ops_a[i] (x) ops_b[i], with sqrt(sigma_i) folded into each factor.
struct SchmidtDecomposition {
    size_t d1 = 0;
    size_t d2 = 0;
    std::vector<double> sigmas;
    std::vector<DenseOperator> ops_a;
    std::vector<DenseOperator> ops_b;
    /// Singular values at or below this were discarded.
    double tolerance = 0;

    size_t rank() const noexcept {
        return sigmas.size();
    }
};

/// Maps u((i1,i2),(j1,j2)) to R((i1,j1),(i2,j2)), a d1^2 x d2^2 matrix.
Matrix reshuffle(const DenseOperator &u, size_t d1, size_t d2);

/// Operator-Schmidt decomposition by SVD of the reshuffled operator.
/// The default tolerance is 1e-10 * sigma_max.
SchmidtDecomposition operator_schmidt(
    const DenseOperator &u, size_t d1, size_t d2, std::optional<double> tolerance = std::nullopt);

size_t schmidt_rank(const DenseOperator &u, size_t d1, size_t d2, std::optional<double> tolerance = std::nullopt);

/// Schmidt terms as a GateDecomposition (coefficient 1, weight sigma_i),
/// keeping terms with sigma_i > threshold.
GateDecomposition decompose_schmidt(const DenseOperator &u, size_t d1, size_t d2, double threshold = 0);

}  // namespace qcut

#endif
