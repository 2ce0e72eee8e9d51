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

#ifndef QCUT_DECOMPOSE_H
#define QCUT_DECOMPOSE_H

#include <string>
#include <string_view>
#include <vector>

#include "qcut/gellmann.h"
#include "qcut/tensor.h"

namespace qcut {

enum class DecompositionMethod { GellMann, Schmidt };

std::string_view method_name(DecompositionMethod method);
DecompositionMethod parse_method(std::string_view name);

/// Coefficients below this magnitude are treated as structurally zero.
inline constexpr double kZeroCoefficientFloor = 1e-14;

/// One term coeff * (op_a (x) op_b) of a two-qudit gate expansion.
struct DecompositionTerm {
    cplx coeff;
    DenseOperator op_a;
    DenseOperator op_b;
    std::string label_a;
    std::string label_b;
    /// Identifies op_a / op_b among the decomposition's distinct local operators.
    /// Terms sharing an index share the same local operator.
    size_t index_a = 0;
    size_t index_b = 0;
    /// Truncation weight: |coeff| for Gell-Mann terms, the singular value for Schmidt terms.
    double weight = 0;
};

struct GateDecomposition {
    size_t d1 = 0;
    size_t d2 = 0;
    DecompositionMethod method = DecompositionMethod::GellMann;
    double threshold = 0;
    std::vector<DecompositionTerm> terms;
    /// Frobenius norm of (target - sum_i coeff_i op_a_i (x) op_b_i).
    double residual = 0;
    /// The (d1 d2)-dimensional gate being decomposed.
    DenseOperator target{1};

    size_t size() const noexcept {
        return terms.size();
    }
};

/// sum_i coeff_i * kron(op_a_i, op_b_i).
DenseOperator reassemble(const GateDecomposition &dec);

/// Coefficients Tr(m B) / Tr(B^2) of m in an orthogonal Hermitian basis.
std::vector<cplx> expand_in_basis(const DenseOperator &m, const OperatorBasis &basis);

/// Expands CSUM(d1, d2) over full_basis(d1) x full_basis(d2), merging the sum
/// over control levels into one coefficient per (A, B) pair:
///   c_{A,B} = sum_r a_A^(r) b_B^(r),
/// where a^(r) expands projector(d1, r) and b^(r) expands shift_x(d2, r mod d2).
/// Keeps pairs with |c| > max(threshold, kZeroCoefficientFloor), in basis order.
GateDecomposition decompose_csum(size_t d1, size_t d2, double threshold = 0);

/// Drops terms whose weight is <= threshold and recomputes the residual.
/// Coefficients are not renormalized.
GateDecomposition truncate(const GateDecomposition &dec, double threshold);

}  // namespace qcut

#endif
