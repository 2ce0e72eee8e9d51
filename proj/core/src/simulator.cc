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

#include "qcut/simulator.h"

#include <numbers>
#include <numeric>
#include <stdexcept>

using namespace qcut;

void qcut::validate_circuit(const Circuit &circuit) {
    if (circuit.dims.empty()) {
        throw std::invalid_argument("circuit has no qudits");
    }
    for (size_t q = 0; q < circuit.dims.size(); q++) {
        if (circuit.dims[q] < 2) {
            throw std::invalid_argument(
                "qudit " + std::to_string(q) + ": dimension must be >= 2, got " + std::to_string(circuit.dims[q]));
        }
    }
    checked_product(circuit.dims);
    for (size_t i = 0; i < circuit.gates.size(); i++) {
        try {
            validate_gate(circuit.gates[i], circuit.dims);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("gate " + std::to_string(i) + ": " + e.what());
        }
    }
}

Circuit qcut::reference_circuit(std::vector<size_t> dims) {
    if (dims.size() < 2) {
        throw std::invalid_argument("reference_circuit needs at least two qudits");
    }
    Circuit c{std::move(dims), {}};
    size_t n = c.dims.size();
    for (size_t q = 0; q < n; q++) {
        c.gates.push_back(GateSpec::h(q));
    }
    c.gates.push_back(GateSpec::csum(n / 2 - 1, n / 2));
    for (size_t q = 0; q < n; q++) {
        c.gates.push_back(GateSpec::ry(q, std::numbers::pi / static_cast<double>(3 + 2 * q)));
        c.gates.push_back(GateSpec::rz(q, std::numbers::pi / static_cast<double>(4 + 2 * q)));
    }
    validate_circuit(c);
    return c;
}

namespace {

// Number of amplitudes spanned by one step of qudit q (product of dims after q).
size_t stride_of(std::span<const size_t> dims, size_t q) {
    size_t s = 1;
    for (size_t i = q + 1; i < dims.size(); i++) {
        s *= dims[i];
    }
    return s;
}

// Applies `op` (dimension `d`) to every fiber of stride `stride` in blocks of d*stride.
void apply_fibers(std::span<cplx> amps, const DenseOperator &op, size_t d, size_t stride) {
    // Per-row nonzero entries; rotations and permutations are mostly zeros.
    std::vector<size_t> row_start(d + 1, 0);
    std::vector<size_t> cols;
    std::vector<cplx> vals;
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            if (op(r, c) != cplx(0)) {
                cols.push_back(c);
                vals.push_back(op(r, c));
            }
        }
        row_start[r + 1] = cols.size();
    }
    std::vector<cplx> in(d);
    size_t block = d * stride;
    for (size_t base = 0; base < amps.size(); base += block) {
        for (size_t inner = 0; inner < stride; inner++) {
            cplx *fiber = amps.data() + base + inner;
            for (size_t i = 0; i < d; i++) {
                in[i] = fiber[i * stride];
            }
            for (size_t r = 0; r < d; r++) {
                cplx acc = 0;
                for (size_t k = row_start[r]; k < row_start[r + 1]; k++) {
                    acc += vals[k] * in[cols[k]];
                }
                fiber[r * stride] = acc;
            }
        }
    }
}

}  // namespace

void qcut::apply_single_inplace(
    std::span<cplx> amps, std::span<const size_t> dims, const DenseOperator &op, size_t target) {
    if (target >= dims.size()) {
        throw std::invalid_argument("apply_single: target " + std::to_string(target) + " out of range");
    }
    if (op.dim() != dims[target]) {
        throw std::invalid_argument(
            "apply_single: operator dimension " + std::to_string(op.dim()) + " does not match qudit " +
            std::to_string(target) + " of dimension " + std::to_string(dims[target]));
    }
    apply_fibers(amps, op, op.dim(), stride_of(dims, target));
}

void qcut::apply_two_inplace(
    std::span<cplx> amps, std::span<const size_t> dims, const DenseOperator &op, size_t q_hi, size_t q_lo) {
    if (q_lo >= dims.size() || q_hi >= dims.size()) {
        throw std::invalid_argument("apply_two: target out of range");
    }
    if (q_lo != q_hi + 1) {
        throw std::invalid_argument(
            "apply_two: unsupported layout, targets " + std::to_string(q_hi) + "," + std::to_string(q_lo) +
            " must be adjacent with the more significant qudit first");
    }
    if (op.dim() != dims[q_hi] * dims[q_lo]) {
        throw std::invalid_argument(
            "apply_two: operator dimension " + std::to_string(op.dim()) + " does not match " +
            std::to_string(dims[q_hi]) + "*" + std::to_string(dims[q_lo]));
    }
    // Adjacent qudits form one combined digit of radix d_hi*d_lo.
    apply_fibers(amps, op, op.dim(), stride_of(dims, q_lo));
}

StateVector qcut::apply_single(const StateVector &state, const DenseOperator &op, size_t target) {
    StateVector out = state;
    apply_single_inplace(out.mutable_amps(), out.dims(), op, target);
    return out;
}

StateVector qcut::apply_two(const StateVector &state, const DenseOperator &op, size_t q_hi, size_t q_lo) {
    StateVector out = state;
    apply_two_inplace(out.mutable_amps(), out.dims(), op, q_hi, q_lo);
    return out;
}

StateVector qcut::permute_qudits(const StateVector &state, std::span<const size_t> order) {
    const auto &dims = state.dims();
    size_t n = dims.size();
    if (order.size() != n) {
        throw std::invalid_argument("permute_qudits: order length differs from qudit count");
    }
    std::vector<bool> seen(n, false);
    for (size_t q : order) {
        if (q >= n || seen[q]) {
            throw std::invalid_argument("permute_qudits: order is not a permutation");
        }
        seen[q] = true;
    }
    std::vector<size_t> new_dims(n);
    std::vector<size_t> old_strides(n);
    for (size_t i = 0; i < n; i++) {
        new_dims[i] = dims[order[i]];
        old_strides[i] = stride_of(dims, order[i]);
    }
    std::vector<cplx> amps(state.size());
    // Odometer over the new digit order, tracking the matching old index.
    std::vector<size_t> digits(n, 0);
    size_t old_index = 0;
    for (size_t k = 0; k < amps.size(); k++) {
        amps[k] = state[old_index];
        for (size_t i = n; i-- > 0;) {
            if (++digits[i] < new_dims[i]) {
                old_index += old_strides[i];
                break;
            }
            old_index -= (new_dims[i] - 1) * old_strides[i];
            digits[i] = 0;
        }
    }
    return StateVector(std::move(new_dims), std::move(amps));
}

namespace {

// Applies a two-qudit gate whose wires are not (q, q+1) by moving them to the front.
StateVector apply_two_relabeled(StateVector state, const DenseOperator &op, size_t control, size_t target) {
    size_t n = state.num_qudits();
    std::vector<size_t> order{control, target};
    for (size_t q = 0; q < n; q++) {
        if (q != control && q != target) {
            order.push_back(q);
        }
    }
    StateVector moved = permute_qudits(state, order);
    apply_two_inplace(moved.mutable_amps(), moved.dims(), op, 0, 1);
    std::vector<size_t> back(n);
    for (size_t i = 0; i < n; i++) {
        back[order[i]] = i;
    }
    return permute_qudits(moved, back);
}

}  // namespace

StateVector qcut::run(const Circuit &circuit, std::optional<StateVector> initial) {
    validate_circuit(circuit);
    StateVector state = initial ? std::move(*initial) : StateVector::zero_state(circuit.dims);
    if (state.dims() != circuit.dims) {
        throw std::invalid_argument("run: initial state dims do not match circuit dims");
    }
    for (const auto &gate : circuit.gates) {
        DenseOperator op = gate_operator(gate, circuit.dims);
        if (!gate.is_two_qudit()) {
            apply_single_inplace(state.mutable_amps(), circuit.dims, op, gate.target());
        } else if (gate.target() == gate.control() + 1) {
            apply_two_inplace(state.mutable_amps(), circuit.dims, op, gate.control(), gate.target());
        } else {
            state = apply_two_relabeled(std::move(state), op, gate.control(), gate.target());
        }
    }
    return state;
}

std::vector<double> qcut::probabilities(const StateVector &state) {
    std::vector<double> out(state.size());
    for (size_t k = 0; k < out.size(); k++) {
        out[k] = std::norm(state[k]);
    }
    return out;
}
