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

#ifndef QCUT_GATES_H
#define QCUT_GATES_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcut/tensor.h"

namespace qcut {

/// Generalized shift X^r = sum_j |(j + r) mod d><j|.
DenseOperator shift_x(size_t d, size_t r);

/// Level projector |r><r|, assembled from the Gell-Mann expansion
/// P_r = I/d + 1/2 sum_k <r|G_k|r> G_k.
DenseOperator projector(size_t d, size_t r);

/// Controlled-sum sum_r P_r (x) X^(r mod d2). The control (dimension d1) is the
/// more significant tensor factor.
DenseOperator csum(size_t d1, size_t d2);

/// Discrete Fourier matrix F(j,k) = w^(jk) / sqrt(d), w = exp(2 pi i / d).
DenseOperator hadamard_qudit(size_t d);

enum class RotationAxis { Y, Z };

/// Qubit rotation on levels {0, 1}; identity on every level >= 2.
DenseOperator rotation_qudit(RotationAxis axis, size_t d, double theta);

enum class GateKind {
    H,
    RY,
    RZ,
    X,
    CSUM,
    UNITARY2,
    /// Arbitrary (possibly non-unitary) single-qudit operator. Produced when a
    /// cut inserts a local decomposition factor into a fragment.
    OP,
};

std::string_view gate_name(GateKind kind);
GateKind parse_gate_name(std::string_view name);

struct GateSpec {
    GateKind kind = GateKind::H;
    /// One index, or {control, target} for two-qudit gates.
    std::vector<size_t> targets;
    double theta = 0;
    std::optional<DenseOperator> matrix;

    static GateSpec h(size_t q);
    static GateSpec ry(size_t q, double theta);
    static GateSpec rz(size_t q, double theta);
    static GateSpec x(size_t q);
    static GateSpec csum(size_t control, size_t target);
    static GateSpec unitary2(size_t control, size_t target, DenseOperator matrix);
    static GateSpec op(size_t q, DenseOperator matrix);

    bool is_two_qudit() const noexcept {
        return kind == GateKind::CSUM || kind == GateKind::UNITARY2;
    }
    size_t control() const {
        return targets.at(0);
    }
    size_t target() const {
        return targets.back();
    }

    bool operator==(const GateSpec &) const = default;
};

/// Throws std::invalid_argument if the gate is malformed for a register with these dims.
void validate_gate(const GateSpec &gate, std::span<const size_t> dims);

/// The dense matrix for a gate on a register with these dims. Two-qudit gates
/// return the (d_control * d_target)-dimensional operator with the control as
/// the more significant factor.
DenseOperator gate_operator(const GateSpec &gate, std::span<const size_t> dims);

}  // namespace qcut

#endif
