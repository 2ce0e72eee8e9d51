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

#ifndef QCUT_CUTTING_H
#define QCUT_CUTTING_H

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcut/decompose.h"
#include "qcut/simulator.h"
#include "qcut/tensor.h"

namespace qcut {

/// Thrown when a boundary is crossed by zero or several two-qudit gates, or is degenerate.
class CutPlanError : public std::invalid_argument {
   public:
    CutPlanError(const std::string &message, std::vector<size_t> crossing_gates)
        : std::invalid_argument(message), crossing_gates(std::move(crossing_gates)) {
    }
    std::vector<size_t> crossing_gates;
};

/// Qudits [0, boundary) form the upper fragment and [boundary, n) the lower one.
struct CutPlan {
    size_t boundary = 0;
    size_t crossing_gate = 0;
    DecompositionMethod method = DecompositionMethod::GellMann;
    double threshold = 0;
};

/// Indices of the two-qudit gates with one wire on each side of `boundary`.
std::vector<size_t> crossing_gates(const Circuit &circuit, size_t boundary);

CutPlan plan_cut(const Circuit &circuit, size_t boundary, DecompositionMethod method, double threshold = 0);

/// Decomposes the plan's crossing gate. op_a always acts on the gate's control wire.
GateDecomposition decompose_crossing_gate(const Circuit &circuit, const CutPlan &plan);

/// One decomposition term executed as two independent circuits.
struct FragmentPair {
    cplx coeff;
    Circuit upper;
    Circuit lower;
    /// Pairs with equal keys run identical fragment circuits.
    size_t upper_key = 0;
    size_t lower_key = 0;
};

/// One pair per decomposition term. The crossing gate is replaced by the local
/// factor on each side, at the same position in each fragment's gate order.
std::vector<FragmentPair> generate_fragments(const Circuit &circuit, const CutPlan &plan);
std::vector<FragmentPair> generate_fragments(
    const Circuit &circuit, const CutPlan &plan, const GateDecomposition &decomposition);

/// Outputs of every distinct fragment circuit.
struct FragmentOutputs {
    std::vector<StateVector> upper;
    std::vector<StateVector> lower;
    /// Per pair: index into `upper` / `lower`.
    std::vector<size_t> upper_slot;
    std::vector<size_t> lower_slot;
};

/// Runs each distinct fragment circuit once. With threads > 1 the runs are spread
/// over worker threads; outputs do not depend on the thread count.
FragmentOutputs execute_fragments(std::span<const FragmentPair> pairs, size_t threads = 1);

/// sum_i coeff_i * kron_vec(upper_i, lower_i), grouped by upper fragment and
/// accumulated in pair order.
StateVector combine_fragments(std::span<const FragmentPair> pairs, const FragmentOutputs &outputs);

/// execute_fragments followed by combine_fragments. Result dims are (upper, lower).
StateVector stitch(std::span<const FragmentPair> pairs, size_t threads = 1);

using ProbabilityMap = std::map<std::string, double>;

/// Decimal digits concatenated, or comma-separated when any base is >= 11.
std::string state_label(std::span<const size_t> digits, std::span<const size_t> bases);

struct Reconstruction {
    ProbabilityMap probabilities;
    /// sum |amp|^2 before normalization.
    double raw_norm = 0;
};

/// For each index: decode mixed-radix digits, permute to logical order, label,
/// and assign |amp|^2; then normalize by the total.
Reconstruction reconstruct_probabilities(const StateVector &amps, const MixedRadixSpec &spec);

/// 1/2 sum_x |p(x) - q(x)|; keys missing from one side count as zero.
double tvd(const ProbabilityMap &p, const ProbabilityMap &q);
/// Same over two distributions indexed identically.
double tvd(std::span<const double> p, std::span<const double> q);

struct CutOptions {
    size_t threads = 1;
    /// Also simulate the uncut circuit and compare.
    bool reference = true;
    /// Build the labeled probability map (skip for very large registers).
    bool build_probability_map = true;
};

struct CutTimings {
    double decompose_s = 0;
    double simulate_s = 0;
    double stitch_s = 0;
    double uncut_s = 0;
};

struct StitchedResult {
    StateVector amplitudes;
    double raw_norm = 0;
    ProbabilityMap probabilities;
    /// Normalized probabilities indexed like `amplitudes`.
    std::vector<double> probability_vector;
    size_t pair_count = 0;
    /// Distinct fragment circuits actually simulated.
    size_t fragment_runs = 0;
    double residual = 0;
    std::optional<double> tvd_vs_uncut;
    std::optional<double> max_amplitude_deviation;
    CutTimings timings;
};

/// Full pipeline: decompose, build fragments, run, stitch, reconstruct, and
/// optionally compare against the monolithic simulation.
StitchedResult execute_cut(const Circuit &circuit, const CutPlan &plan, const CutOptions &options = {});
/// Same, reusing an existing decomposition of the crossing gate.
StitchedResult execute_cut(
    const Circuit &circuit, const CutPlan &plan, const GateDecomposition &decomposition, const CutOptions &options,
    const std::optional<StateVector> &uncut = std::nullopt);

}  // namespace qcut

#endif
