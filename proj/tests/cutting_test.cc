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

#include "qcut/cutting.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qcut/bench.h"
#include "qcut/gates.h"
#include "qcut/schmidt.h"

using namespace qcut;

namespace {

const DecompositionMethod kMethods[] = {DecompositionMethod::GellMann, DecompositionMethod::Schmidt};

}  // namespace

TEST(plan_cut, errors) {
    auto c = reference_circuit({2, 2, 2, 2});
    EXPECT_THROW(plan_cut(c, 0, DecompositionMethod::GellMann), CutPlanError);
    EXPECT_THROW(plan_cut(c, 4, DecompositionMethod::GellMann), CutPlanError);
    try {
        plan_cut(c, 1, DecompositionMethod::GellMann);
        FAIL() << "boundary 1 has no crossing gate";
    } catch (const CutPlanError &e) {
        EXPECT_TRUE(e.crossing_gates.empty());
    }
    c.gates.push_back(GateSpec::csum(0, 3));
    try {
        plan_cut(c, 2, DecompositionMethod::GellMann);
        FAIL() << "two gates cross boundary 2";
    } catch (const CutPlanError &e) {
        EXPECT_EQ(e.crossing_gates, (std::vector<size_t>{4, 13}));
    }
    Circuit u{{2, 2}, {GateSpec::unitary2(0, 1, oracle::random_unitary(4))}};
    EXPECT_THROW(plan_cut(u, 1, DecompositionMethod::GellMann), std::invalid_argument);
    EXPECT_NO_THROW(plan_cut(u, 1, DecompositionMethod::Schmidt));
}

TEST(plan_cut, finds_crossing_gate) {
    auto plan = plan_cut(reference_circuit({2, 3, 2, 3}), 2, DecompositionMethod::Schmidt, 0.1);
    EXPECT_EQ(plan.boundary, 2u);
    EXPECT_EQ(plan.crossing_gate, 4u);
    EXPECT_EQ(plan.threshold, 0.1);
}

TEST(generate_fragments, qubit_gellmann_pairs) {
    auto c = reference_circuit({2, 2, 2, 2});
    auto pairs = generate_fragments(c, plan_cut(c, 2, DecompositionMethod::GellMann));
    ASSERT_EQ(pairs.size(), 4u);
    std::vector<double> coeffs;
    for (const auto &p : pairs) {
        EXPECT_NEAR(p.coeff.imag(), 0, 1e-15);
        coeffs.push_back(p.coeff.real());
        EXPECT_EQ(p.upper.dims, (std::vector<size_t>{2, 2}));
        EXPECT_EQ(p.lower.dims, (std::vector<size_t>{2, 2}));
        EXPECT_EQ(p.upper.gates.size() + p.lower.gates.size(), c.gates.size() + 1);
        EXPECT_EQ(p.upper.gates[2].kind, GateKind::OP);
        EXPECT_EQ(p.upper.gates[2].targets, std::vector<size_t>{1});
        EXPECT_EQ(p.lower.gates[2].kind, GateKind::OP);
        EXPECT_EQ(p.lower.gates[2].targets, std::vector<size_t>{0});
    }
    std::sort(coeffs.begin(), coeffs.end());
    EXPECT_NEAR(coeffs[0], -0.5, 1e-15);
    EXPECT_NEAR(coeffs[1], 0.5, 1e-15);
    EXPECT_NEAR(coeffs[3], 0.5, 1e-15);
}

TEST(generate_fragments, schmidt_pair_counts) {
    auto c = reference_circuit({2, 2, 2, 2});
    EXPECT_EQ(generate_fragments(c, plan_cut(c, 2, DecompositionMethod::Schmidt)).size(), 2u);
    auto dec = decompose_schmidt(csum(8, 8), 8, 8);
    EXPECT_EQ(dec.size(), 8u);
}

TEST(stitch, exact_on_reference_circuits) {
    for (const auto &dims : std::vector<std::vector<size_t>>{
             {2, 2, 2, 2}, {3, 3, 3, 3}, {2, 2, 3, 3}, {2, 3}, {3, 2}, {2, 3, 4}, {4, 3, 2, 2}}) {
        auto c = reference_circuit(dims);
        auto uncut = run(c);
        for (size_t b = 1; b < dims.size(); b++) {
            if (crossing_gates(c, b).size() != 1) {
                continue;
            }
            for (auto m : kMethods) {
                auto pairs = generate_fragments(c, plan_cut(c, b, m));
                auto stitched = stitch(pairs);
                EXPECT_EQ(stitched.dims(), dims);
                EXPECT_LE(max_abs_diff(stitched, uncut), 1e-12)
                    << dims_string(dims) << " b=" << b << " " << method_name(m);
            }
        }
    }
}

TEST(stitch, reversed_and_distant_crossing_gates) {
    std::vector<size_t> dims{3, 2, 2, 3};
    for (auto gate : {GateSpec::csum(3, 0), GateSpec::csum(2, 1), GateSpec::csum(0, 3),
                      GateSpec::unitary2(2, 0, oracle::random_unitary(6))}) {
        Circuit c{dims,
                  {GateSpec::h(0), GateSpec::ry(1, 0.4), GateSpec::h(3), GateSpec::csum(0, 1), gate,
                   GateSpec::rz(2, 0.9), GateSpec::csum(3, 2), GateSpec::ry(0, 1.1)}};
        auto uncut = oracle::dense_run(c);
        for (auto m : kMethods) {
            if (m == DecompositionMethod::GellMann && gate.kind != GateKind::CSUM) {
                continue;
            }
            auto pairs = generate_fragments(c, plan_cut(c, 2, m));
            EXPECT_LE(oracle::max_diff(stitch(pairs).amps(), uncut), 1e-12) << method_name(m);
        }
    }
}

TEST(stitch, thread_count_does_not_change_result) {
    auto c = reference_circuit({3, 3, 3, 3});
    auto pairs = generate_fragments(c, plan_cut(c, 2, DecompositionMethod::GellMann));
    auto one = stitch(pairs, 1);
    for (size_t t : {2, 3, 8}) {
        EXPECT_EQ(stitch(pairs, t), one) << t;
    }
}

TEST(execute_fragments, deduplicates_runs) {
    auto c = reference_circuit({3, 3, 3, 3});
    auto plan = plan_cut(c, 2, DecompositionMethod::GellMann);
    auto pairs = generate_fragments(c, plan);
    auto outputs = execute_fragments(pairs);
    EXPECT_LT(outputs.upper.size() + outputs.lower.size(), 2 * pairs.size());
    EXPECT_EQ(outputs.upper_slot.size(), pairs.size());
    for (size_t i = 0; i < pairs.size(); i++) {
        EXPECT_EQ(outputs.upper[outputs.upper_slot[i]], run(pairs[i].upper));
        EXPECT_EQ(outputs.lower[outputs.lower_slot[i]], run(pairs[i].lower));
    }
}

TEST(state_label, separators) {
    std::vector<size_t> d{1, 0, 2};
    EXPECT_EQ(state_label(d, std::vector<size_t>{2, 2, 3}), "102");
    EXPECT_EQ(state_label(d, std::vector<size_t>{2, 11, 3}), "1,0,2");
}

TEST(reconstruct_probabilities, reversal_relabels_digits) {
    // Index 1 over cut-order bases [2, 3] has digits (0, 1); reversed to
    // logical order it reads "10".
    std::vector<cplx> amps(6, 0);
    amps[1] = 2;
    StateVector s({2, 3}, amps);
    auto r = reconstruct_probabilities(s, MixedRadixSpec::reversal({2, 3}));
    EXPECT_NEAR(r.raw_norm, 4, 1e-15);
    ASSERT_EQ(r.probabilities.size(), 6u);
    EXPECT_EQ(r.probabilities.at("10"), 1.0);
    EXPECT_EQ(r.probabilities.at("01"), 0.0);
}

TEST(reconstruct_probabilities, sums_to_one) {
    auto c = reference_circuit({2, 3, 4});
    auto r = reconstruct_probabilities(run(c), MixedRadixSpec::identity({2, 3, 4}));
    double total = 0;
    for (const auto &[k, v] : r.probabilities) {
        total += v;
        EXPECT_EQ(k.size(), 3u);
    }
    EXPECT_NEAR(total, 1, 1e-12);
    EXPECT_NEAR(r.raw_norm, 1, 1e-12);
}

TEST(tvd, examples) {
    ProbabilityMap p{{"0", 0.5}, {"1", 0.5}};
    ProbabilityMap q{{"0", 1.0}};
    EXPECT_DOUBLE_EQ(tvd(p, q), 0.5);
    EXPECT_DOUBLE_EQ(tvd(p, p), 0);
    EXPECT_DOUBLE_EQ(tvd(ProbabilityMap{{"a", 1}}, ProbabilityMap{{"b", 1}}), 1);
    std::vector<double> a{0.1, 0.9}, b{0.3, 0.7};
    EXPECT_NEAR(tvd(a, b), 0.2, 1e-15);
    EXPECT_THROW(tvd(a, std::vector<double>{1}), std::invalid_argument);
}

TEST(execute_cut, reports_comparison) {
    auto c = reference_circuit({2, 2, 3, 3});
    for (auto m : kMethods) {
        auto r = execute_cut(c, plan_cut(c, 2, m), {.threads = 2});
        ASSERT_TRUE(r.tvd_vs_uncut.has_value());
        EXPECT_LE(*r.tvd_vs_uncut, 1e-10);
        EXPECT_LE(*r.max_amplitude_deviation, 1e-10);
        EXPECT_NEAR(r.raw_norm, 1, 1e-10);
        EXPECT_EQ(r.probabilities.size(), 36u);
        EXPECT_EQ(r.probability_vector.size(), 36u);
        EXPECT_NEAR(std::accumulate(r.probability_vector.begin(), r.probability_vector.end(), 0.0), 1, 1e-12);
        EXPECT_EQ(r.pair_count, m == DecompositionMethod::Schmidt ? 2u : decompose_csum(2, 3).size());
    }
}

TEST(execute_cut, truncation_raises_tvd) {
    auto c = reference_circuit({3, 3, 3, 3});
    auto plan = plan_cut(c, 2, DecompositionMethod::GellMann);
    auto full = execute_cut(c, plan);
    plan.threshold = 0.3;
    auto cut = execute_cut(c, plan);
    EXPECT_LT(cut.pair_count, full.pair_count);
    EXPECT_GT(*cut.tvd_vs_uncut, *full.tvd_vs_uncut);
    EXPECT_GT(cut.residual, full.residual);
}

TEST(execute_cut, without_reference) {
    auto c = reference_circuit({2, 2});
    auto r = execute_cut(c, plan_cut(c, 1, DecompositionMethod::Schmidt), {.reference = false});
    EXPECT_FALSE(r.tvd_vs_uncut.has_value());
    EXPECT_EQ(r.timings.uncut_s, 0);
}
