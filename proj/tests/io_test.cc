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

#include "qcut/io.h"

#include <filesystem>

#include "gtest/gtest.h"
#include "json.hpp"
#include "oracles.h"
#include "qcut/gates.h"

using namespace qcut;
using nlohmann::json;

namespace {

std::filesystem::path circuits_dir() {
    return std::filesystem::path(QCUT_SOURCE_DIR) / "circuits";
}

}  // namespace

TEST(circuit_json, bundled_circuits_match_reference_builder) {
    EXPECT_EQ(load_circuit(circuits_dir() / "dummy_2222.json"), reference_circuit({2, 2, 2, 2}));
    EXPECT_EQ(load_circuit(circuits_dir() / "dummy_2233.json"), reference_circuit({2, 2, 3, 3}));
}

TEST(circuit_json, round_trip_with_matrix) {
    Circuit c{{3, 2, 2},
              {GateSpec::h(0), GateSpec::ry(1, 0.123456789012345678), GateSpec::csum(2, 0),
               GateSpec::unitary2(1, 2, oracle::random_unitary(4)), GateSpec::x(2), GateSpec::rz(0, -1e-300)}};
    auto text = circuit_to_json(c);
    EXPECT_EQ(parse_circuit_json(text), c);
    auto path = std::filesystem::temp_directory_path() / "qcut_io_round_trip.json";
    save_circuit(path, c);
    EXPECT_EQ(load_circuit(path), c);
    std::filesystem::remove(path);
}

TEST(circuit_json, schema_errors) {
    for (const char *bad : {
             "",
             "[]",
             R"({"gates": []})",
             R"({"dims": [2, 1], "gates": []})",
             R"({"dims": [2, 2], "gates": [{"name": "FOO", "target": 0}]})",
             R"({"dims": [2, 2], "gates": [{"name": "H"}]})",
             R"({"dims": [2, 2], "gates": [{"name": "RY", "target": 0}]})",
             R"({"dims": [2, 2], "gates": [{"name": "CSUM", "target": 0}]})",
             R"({"dims": [2, 2], "gates": [{"name": "H", "target": 5}]})",
             R"({"dims": [2, 2], "gates": [{"name": "UNITARY2", "control": 0, "target": 1, "matrix": [[1, 0]]}]})",
             R"({"dims": [2, -2], "gates": []})",
         }) {
        EXPECT_THROW(parse_circuit_json(bad), std::invalid_argument) << bad;
    }
    EXPECT_THROW(load_circuit("/nonexistent/qcut.json"), std::invalid_argument);
}

TEST(decomposition_json, gellmann_uses_labels) {
    auto doc = json::parse(decomposition_to_json(decompose_csum(2, 2)));
    EXPECT_EQ(doc["method"], "gellmann");
    ASSERT_EQ(doc["terms"].size(), 4u);
    for (const auto &t : doc["terms"]) {
        EXPECT_TRUE(t.contains("coeff"));
        EXPECT_TRUE(t["a"].is_string());
        EXPECT_TRUE(t["b"].is_string());
    }
}

TEST(decomposition_json, schmidt_carries_entries) {
    auto doc = json::parse(decomposition_to_json(decompose_schmidt(csum(2, 3), 2, 3)));
    EXPECT_EQ(doc["method"], "schmidt");
    ASSERT_EQ(doc["terms"].size(), 2u);
    for (const auto &t : doc["terms"]) {
        EXPECT_EQ(t["a"].size(), 4u);
        EXPECT_EQ(t["b"].size(), 9u);
        EXPECT_GT(t["sigma"].get<double>(), 0);
    }
}

TEST(result_json, fields) {
    auto c = reference_circuit({2, 2});
    auto r = execute_cut(c, plan_cut(c, 1, DecompositionMethod::GellMann));
    auto doc = json::parse(stitched_result_to_json(r));
    EXPECT_EQ(doc["pairs"], 4);
    EXPECT_NEAR(doc["raw_norm"].get<double>(), 1, 1e-12);
    EXPECT_LE(doc["tvd_vs_uncut"].get<double>(), 1e-12);
    EXPECT_EQ(doc["probabilities"].size(), 4u);
    r.tvd_vs_uncut.reset();
    EXPECT_TRUE(json::parse(stitched_result_to_json(r))["tvd_vs_uncut"].is_null());
}

TEST(probability_table, fixed_precision) {
    ProbabilityMap p{{"00", 0.123456}, {"01", 1e-9}, {"10", 0.876543}};
    EXPECT_EQ(format_probability_table(p), "00 0.12346\n01 0.00000\n10 0.87654\n");
}
