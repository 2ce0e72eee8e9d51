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

#include "qcut/gates.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcut/gellmann.h"

using namespace qcut;

static void require_dim(size_t d) {
    if (d < 2) {
        throw std::invalid_argument("dimension must be >= 2, got " + std::to_string(d));
    }
}

DenseOperator qcut::shift_x(size_t d, size_t r) {
    require_dim(d);
    DenseOperator out(d);
    for (size_t j = 0; j < d; j++) {
        out((j + r) % d, j) = 1.0;
    }
    return out;
}

DenseOperator qcut::projector(size_t d, size_t r) {
    require_dim(d);
    if (r >= d) {
        throw std::out_of_range("projector level " + std::to_string(r) + " out of range for d=" + std::to_string(d));
    }
    OperatorBasis gm = gellmann_basis(d);
    DenseOperator out = DenseOperator::identity(d);
    out *= 1.0 / static_cast<double>(d);
    for (const auto &g : gm.elements) {
        cplx weight = 0.5 * g(r, r);
        if (weight != cplx{}) {
            out += weight * g;
        }
    }
    return out;
}

DenseOperator qcut::csum(size_t d1, size_t d2) {
    require_dim(d1);
    require_dim(d2);
    DenseOperator out(d1 * d2);
    for (size_t r = 0; r < d1; r++) {
        out += kron(projector(d1, r), shift_x(d2, r % d2));
    }
    return out;
}

DenseOperator qcut::hadamard_qudit(size_t d) {
    require_dim(d);
    DenseOperator out(d);
    double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (size_t j = 0; j < d; j++) {
        for (size_t k = 0; k < d; k++) {
            // Reduce jk mod d so the phase argument stays small.
            double angle = 2 * std::numbers::pi * static_cast<double>((j * k) % d) / static_cast<double>(d);
            out(j, k) = std::polar(norm, angle);
        }
    }
    return out;
}

DenseOperator qcut::rotation_qudit(RotationAxis axis, size_t d, double theta) {
    require_dim(d);
    DenseOperator out = DenseOperator::identity(d);
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    if (axis == RotationAxis::Y) {
        out(0, 0) = c;
        out(0, 1) = -s;
        out(1, 0) = s;
        out(1, 1) = c;
    } else {
        out(0, 0) = std::polar(1.0, -theta / 2);
        out(1, 1) = std::polar(1.0, theta / 2);
    }
    return out;
}

std::string_view qcut::gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::RY:
            return "RY";
        case GateKind::RZ:
            return "RZ";
        case GateKind::X:
            return "X";
        case GateKind::CSUM:
            return "CSUM";
        case GateKind::UNITARY2:
            return "UNITARY2";
        case GateKind::OP:
            return "OP";
    }
    return "?";
}

GateKind qcut::parse_gate_name(std::string_view name) {
    for (GateKind k : {GateKind::H, GateKind::RY, GateKind::RZ, GateKind::X, GateKind::CSUM, GateKind::UNITARY2,
                       GateKind::OP}) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown gate name '" + std::string(name) + "'");
}

GateSpec GateSpec::h(size_t q) {
    return GateSpec{GateKind::H, {q}, 0, std::nullopt};
}
GateSpec GateSpec::ry(size_t q, double theta) {
    return GateSpec{GateKind::RY, {q}, theta, std::nullopt};
}
GateSpec GateSpec::rz(size_t q, double theta) {
    return GateSpec{GateKind::RZ, {q}, theta, std::nullopt};
}
GateSpec GateSpec::x(size_t q) {
    return GateSpec{GateKind::X, {q}, 0, std::nullopt};
}
GateSpec GateSpec::csum(size_t control, size_t target) {
    return GateSpec{GateKind::CSUM, {control, target}, 0, std::nullopt};
}
GateSpec GateSpec::unitary2(size_t control, size_t target, DenseOperator matrix) {
    return GateSpec{GateKind::UNITARY2, {control, target}, 0, std::move(matrix)};
}
GateSpec GateSpec::op(size_t q, DenseOperator matrix) {
    return GateSpec{GateKind::OP, {q}, 0, std::move(matrix)};
}

void qcut::validate_gate(const GateSpec &gate, std::span<const size_t> dims) {
    std::string name(gate_name(gate.kind));
    size_t expected_targets = gate.is_two_qudit() ? 2 : 1;
    if (gate.targets.size() != expected_targets) {
        throw std::invalid_argument(
            name + ": expected " + std::to_string(expected_targets) + " qudit index(es), got " +
            std::to_string(gate.targets.size()));
    }
    for (size_t q : gate.targets) {
        if (q >= dims.size()) {
            throw std::invalid_argument(
                name + ": qudit index " + std::to_string(q) + " out of range for " + std::to_string(dims.size()) +
                " qudits");
        }
    }
    if (gate.is_two_qudit() && gate.targets[0] == gate.targets[1]) {
        throw std::invalid_argument(name + ": control and target must differ");
    }
    bool needs_matrix = gate.kind == GateKind::UNITARY2 || gate.kind == GateKind::OP;
    if (needs_matrix != gate.matrix.has_value()) {
        throw std::invalid_argument(name + (needs_matrix ? ": missing matrix" : ": unexpected matrix"));
    }
    if (needs_matrix) {
        size_t expected = gate.kind == GateKind::OP ? dims[gate.targets[0]] : dims[gate.control()] * dims[gate.target()];
        if (gate.matrix->dim() != expected) {
            throw std::invalid_argument(
                name + ": matrix dimension " + std::to_string(gate.matrix->dim()) + " does not match expected " +
                std::to_string(expected));
        }
    }
}

DenseOperator qcut::gate_operator(const GateSpec &gate, std::span<const size_t> dims) {
    validate_gate(gate, dims);
    size_t d = dims[gate.target()];
    switch (gate.kind) {
        case GateKind::H:
            return hadamard_qudit(d);
        case GateKind::RY:
            return rotation_qudit(RotationAxis::Y, d, gate.theta);
        case GateKind::RZ:
            return rotation_qudit(RotationAxis::Z, d, gate.theta);
        case GateKind::X:
            return shift_x(d, 1);
        case GateKind::CSUM:
            return csum(dims[gate.control()], d);
        case GateKind::UNITARY2:
        case GateKind::OP:
            return *gate.matrix;
    }
    throw std::logic_error("unreachable gate kind");
}
