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

#ifndef QCUT_GELLMANN_H
#define QCUT_GELLMANN_H

#include <string>
#include <vector>

#include "qcut/tensor.h"

namespace qcut {

enum class BasisKind { Identity, Symmetric, Antisymmetric, Diagonal };

/// Structural tag of a basis element. Levels are 0-based.
/// Symmetric/Antisymmetric use (j, k) with j < k; Diagonal uses l in [1, d-1] stored in `j`.
struct BasisLabel {
    BasisKind kind = BasisKind::Identity;
    size_t j = 0;
    size_t k = 0;

    /// "I", "S(j,k)", "A(j,k)" or "D(l)".
    std::string str() const;
    static BasisLabel parse(const std::string &text);

    bool operator==(const BasisLabel &) const = default;
};

/// An ordered operator basis with one label per element.
struct OperatorBasis {
    size_t dim = 0;
    std::vector<DenseOperator> elements;
    std::vector<BasisLabel> labels;

    size_t size() const noexcept {
        return elements.size();
    }
};

/// The d^2 - 1 generalized Gell-Mann matrices for dimension d >= 2.
///
/// Order: all symmetric |j><k| + |k><j| by (j, k) lexicographic, then all
/// antisymmetric -i(|j><k| - |k><j|) in the same order, then the diagonal
/// sqrt(2 / (l (l + 1))) (sum_{m<l} |m><m| - l |l><l|) for l = 1..d-1.
/// Every element is Hermitian, traceless and satisfies Tr(G_a G_b) = 2 delta_ab.
/// For d = 2 this is exactly (X, Y, Z).
OperatorBasis gellmann_basis(size_t d);

/// The identity followed by gellmann_basis(d); spans all d x d complex matrices.
OperatorBasis full_basis(size_t d);

/// Builds the operator for a single label without constructing the whole basis.
DenseOperator basis_element(size_t d, const BasisLabel &label);

}  // namespace qcut

#endif
