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

#ifndef QCUT_IO_H
#define QCUT_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "qcut/cutting.h"
#include "qcut/decompose.h"
#include "qcut/schmidt.h"
#include "qcut/simulator.h"

namespace qcut {

/// Parses a circuit document:
///   {"dims": [2, 3], "gates": [{"name": "H", "target": 0},
///                              {"name": "RY", "target": 1, "theta": 0.5},
///                              {"name": "CSUM", "control": 0, "target": 1},
///                              {"name": "UNITARY2", "control": 0, "target": 1,
///                               "matrix": [[re, im], ...]}]}
/// Matrices are row-major. Throws std::invalid_argument on any schema error.
Circuit parse_circuit_json(std::string_view text);
std::string circuit_to_json(const Circuit &circuit);

Circuit load_circuit(const std::filesystem::path &path);
void save_circuit(const std::filesystem::path &path, const Circuit &circuit);

/// Recipe document. Gell-Mann terms name their operators by basis label;
/// Schmidt terms carry dense row-major entries plus the singular value.
std::string decomposition_to_json(const GateDecomposition &dec);

/// {"pairs": n, "raw_norm": x, "tvd_vs_uncut": t | null, "probabilities": {...}}
std::string stitched_result_to_json(const StitchedResult &result);

/// {"norm": x, "probabilities": {...}} for a monolithic simulation.
std::string simulation_to_json(const Reconstruction &reconstruction);

/// One "<state> <p>" line per entry, probabilities fixed to 5 decimals.
std::string format_probability_table(const ProbabilityMap &probabilities);

/// Reads a whole file, throwing std::invalid_argument if it cannot be opened.
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

}  // namespace qcut

#endif
