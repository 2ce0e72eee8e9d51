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

#ifndef QCUT_SIMULATOR_H
#define QCUT_SIMULATOR_H

#include <optional>
#include <span>
#include <vector>

#include "qcut/gates.h"
#include "qcut/tensor.h"

namespace qcut {

struct Circuit {
    std::vector<size_t> dims;
    std::vector<GateSpec> gates;

    bool operator==(const Circuit &) const = default;
};

/// Throws std::invalid_argument describing the first malformed gate.
void validate_circuit(const Circuit &circuit);

/// H on every qudit, CSUM from qudit n/2-1 to n/2, then RY(pi/(3+2i)) and
/// RZ(pi/(4+2i)) on qudit i. With four qudits this is the standard two-by-two
/// cutting test circuit (angles pi/3 ... pi/10).
Circuit reference_circuit(std::vector<size_t> dims);

/// (I (x) ... (x) op (x) ... (x) I) * state, computed by strided iteration.
StateVector apply_single(const StateVector &state, const DenseOperator &op, size_t target);

/// Applies a two-qudit operator to adjacent qudits q_hi, q_lo = q_hi + 1, with
/// q_hi as the more significant factor. Non-adjacent targets are rejected.
StateVector apply_two(const StateVector &state, const DenseOperator &op, size_t q_hi, size_t q_lo);

/// Reorders tensor factors: qudit i of the result is qudit order[i] of the input.
StateVector permute_qudits(const StateVector &state, std::span<const size_t> order);

/// In-place kernels used by run(); `dims` describes `amps`.
void apply_single_inplace(std::span<cplx> amps, std::span<const size_t> dims, const DenseOperator &op, size_t target);
void apply_two_inplace(
    std::span<cplx> amps, std::span<const size_t> dims, const DenseOperator &op, size_t q_hi, size_t q_lo);

/// Applies the gates in order starting from `initial` (default |0...0>).
/// Non-unitary gates are allowed and no normalization is performed.
/// Two-qudit gates on non-adjacent or reversed wires are handled by relabeling
/// the register so the pair is adjacent with the control first.
StateVector run(const Circuit &circuit, std::optional<StateVector> initial = std::nullopt);

/// |amp|^2 for every index, unnormalized.
std::vector<double> probabilities(const StateVector &state);

}  // namespace qcut

#endif
