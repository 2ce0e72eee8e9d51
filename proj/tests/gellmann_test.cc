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

#include "qcut/gellmann.h"

#include "gtest/gtest.h"
#include "oracles.h"

using namespace qcut;

TEST(gellmann_basis, qubit_case_is_pauli) {
    auto b = gellmann_basis(2);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(b.elements[0], DenseOperator(2, {0, 1, 1, 0}));
    EXPECT_EQ(b.elements[1], DenseOperator(2, {0, cplx(0, -1), cplx(0, 1), 0}));
    EXPECT_EQ(b.elements[2], DenseOperator(2, {1, 0, 0, -1}));
    EXPECT_EQ(b.labels[0].str(), "S(0,1)");
    EXPECT_EQ(b.labels[1].str(), "A(0,1)");
    EXPECT_EQ(b.labels[2].str(), "D(1)");
}

TEST(gellmann_basis, qutrit_normalization) {
    auto b = gellmann_basis(3);
    ASSERT_EQ(b.size(), 8u);
    for (const auto &g : b.elements) {
        EXPECT_NEAR(std::abs(trace_of_product(g, g) - 2.0), 0, 1e-14);
    }
}

TEST(gellmann_basis, gram_matrix_d5) {
    auto b = gellmann_basis(5);
    ASSERT_EQ(b.size(), 24u);
    for (size_t i = 0; i < b.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            // Brute-force sum_{rc} G_i(r,c) G_j(c,r).
            cplx t = 0;
            for (size_t r = 0; r < 5; r++) {
                for (size_t c = 0; c < 5; c++) {
                    t += b.elements[i](r, c) * b.elements[j](c, r);
                }
            }
            EXPECT_NEAR(std::abs(t - cplx(i == j ? 2.0 : 0.0)), 0, 1e-12) << i << "," << j;
        }
    }
}

TEST(gellmann_basis, ordering_is_symmetric_antisymmetric_diagonal) {
    auto b = gellmann_basis(4);
    std::vector<std::string> labels;
    for (const auto &l : b.labels) {
        labels.push_back(l.str());
    }
    std::vector<std::string> expected{"S(0,1)", "S(0,2)", "S(0,3)", "S(1,2)", "S(1,3)", "S(2,3)",
                                      "A(0,1)", "A(0,2)", "A(0,3)", "A(1,2)", "A(1,3)", "A(2,3)",
                                      "D(1)",   "D(2)",   "D(3)"};
    EXPECT_EQ(labels, expected);
}

TEST(gellmann_basis, hermitian_traceless) {
    for (size_t d = 2; d <= 7; d++) {
        for (const auto &g : gellmann_basis(d).elements) {
            EXPECT_TRUE(is_hermitian(g));
            EXPECT_NEAR(std::abs(g.trace()), 0, 1e-12);
        }
    }
}

TEST(gellmann_basis, rejects_small_dimension) {
    EXPECT_THROW(gellmann_basis(1), std::invalid_argument);
    EXPECT_THROW(full_basis(0), std::invalid_argument);
}

TEST(full_basis, sizes_and_identity_first) {
    auto b2 = full_basis(2);
    ASSERT_EQ(b2.size(), 4u);
    EXPECT_EQ(b2.elements[0], DenseOperator::identity(2));
    EXPECT_EQ(b2.labels[0].str(), "I");
    EXPECT_EQ(full_basis(3).size(), 9u);
}

TEST(full_basis, expansion_reconstructs_random_matrix) {
    auto b = full_basis(4);
    auto m = oracle::random_operator(4);
    DenseOperator back(4);
    for (const auto &e : b.elements) {
        back += (trace_of_product(m, e) / trace_of_product(e, e)) * e;
    }
    EXPECT_LE(frobenius_distance(back, m), 1e-12);
}

TEST(basis_label, parse_round_trip) {
    for (size_t d = 2; d <= 5; d++) {
        auto b = full_basis(d);
        for (size_t i = 0; i < b.size(); i++) {
            auto parsed = BasisLabel::parse(b.labels[i].str());
            EXPECT_EQ(parsed, b.labels[i]);
            EXPECT_EQ(basis_element(d, parsed), b.elements[i]);
        }
    }
    EXPECT_THROW(BasisLabel::parse("S(2,1)"), std::invalid_argument);
    EXPECT_THROW(BasisLabel::parse("Q"), std::invalid_argument);
    EXPECT_THROW(basis_element(3, BasisLabel{BasisKind::Diagonal, 3, 0}), std::out_of_range);
}
