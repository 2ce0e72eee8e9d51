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

#include "qcut/decompose.h"

#include <cmath>
#include <map>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qcut/gates.h"

using namespace qcut;

TEST(expand_in_basis, qubit_projector) {
    auto coeffs = expand_in_basis(projector(2, 0), full_basis(2));
    std::vector<cplx> expected{0.5, 0, 0, 0.5};  // I, X, Y, Z
    for (size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(std::abs(coeffs[i] - expected[i]), 0, 1e-15) << i;
    }
}

TEST(expand_in_basis, identity_has_only_identity_coefficient) {
    for (size_t d = 2; d <= 6; d++) {
        auto coeffs = expand_in_basis(shift_x(d, 0), full_basis(d));
        EXPECT_NEAR(std::abs(coeffs[0] - cplx(1)), 0, 1e-15);
        for (size_t i = 1; i < coeffs.size(); i++) {
            EXPECT_NEAR(std::abs(coeffs[i]), 0, 1e-15);
        }
    }
}

TEST(expand_in_basis, qutrit_shift) {
    // Hand-evaluated sum_{ij} X(i,j) B(j,i) / Tr(B^2) for each basis element.
    // Order: I, S01, S02, S12, A01, A02, A12, D1, D2.
    std::vector<cplx> expected{0, 0.5, 0.5, 0.5, cplx(0, -0.5), cplx(0, 0.5), cplx(0, -0.5), 0, 0};
    auto basis = full_basis(3);
    auto coeffs = expand_in_basis(shift_x(3, 1), basis);
    ASSERT_EQ(coeffs.size(), 9u);
    DenseOperator back(3);
    for (size_t i = 0; i < 9; i++) {
        EXPECT_NEAR(std::abs(coeffs[i] - expected[i]), 0, 1e-15) << basis.labels[i].str();
        back += coeffs[i] * basis.elements[i];
    }
    EXPECT_LE(frobenius_distance(back, shift_x(3, 1)), 1e-12);
}

TEST(expand_in_basis, dimension_mismatch) {
    EXPECT_THROW(expand_in_basis(DenseOperator::identity(3), full_basis(2)), std::invalid_argument);
}

TEST(decompose_csum, qubit_cnot_terms) {
    auto dec = decompose_csum(2, 2, 0);
    ASSERT_EQ(dec.size(), 4u);
    std::map<std::pair<std::string, std::string>, cplx> got;
    for (const auto &t : dec.terms) {
        got[{t.label_a, t.label_b}] = t.coeff;
    }
    std::map<std::pair<std::string, std::string>, cplx> expected{
        {{"I", "I"}, 0.5}, {{"D(1)", "I"}, 0.5}, {{"I", "S(0,1)"}, 0.5}, {{"D(1)", "S(0,1)"}, -0.5}};
    ASSERT_EQ(got.size(), expected.size());
    for (const auto &[k, v] : expected) {
        ASSERT_TRUE(got.contains(k)) << k.first << " " << k.second;
        EXPECT_NEAR(std::abs(got[k] - v), 0, 1e-14);
    }
    EXPECT_LE(dec.residual, 1e-12);
}

TEST(decompose_csum, matches_product_basis_oracle) {
    // Independent route: coefficients of CSUM in the product basis A (x) B read
    // off directly from the permutation matrix, without the per-level sum.
    for (auto [d1, d2] : std::vector<std::pair<size_t, size_t>>{{3, 3}, {2, 3}, {3, 2}, {4, 3}}) {
        auto ba = full_basis(d1);
        auto bb = full_basis(d2);
        auto u = oracle::csum_permutation(d1, d2);
        std::map<std::pair<size_t, size_t>, cplx> table;
        for (size_t ia = 0; ia < ba.size(); ia++) {
            for (size_t ib = 0; ib < bb.size(); ib++) {
                cplx c = oracle::product_basis_coefficient(ba.elements[ia], bb.elements[ib], u);
                if (std::abs(c) > 1e-14) {
                    table[{ia, ib}] = c;
                }
            }
        }
        auto dec = decompose_csum(d1, d2, 0);
        ASSERT_EQ(dec.size(), table.size()) << d1 << "," << d2;
        for (const auto &t : dec.terms) {
            auto it = table.find({t.index_a, t.index_b});
            ASSERT_NE(it, table.end());
            EXPECT_NEAR(std::abs(it->second - t.coeff), 0, 1e-13);
        }
    }
}

TEST(decompose_csum, exact_for_small_dimensions) {
    for (size_t d1 = 2; d1 <= 6; d1++) {
        for (size_t d2 = 2; d2 <= 6; d2++) {
            auto dec = decompose_csum(d1, d2, 0);
            EXPECT_LE(dec.residual, 1e-12);
            EXPECT_LE(frobenius_distance(reassemble(dec), oracle::csum_permutation(d1, d2)), 1e-12);
            EXPECT_LE(dec.size(), (d1 * d2) * (d1 * d2));
            EXPECT_LE(dec.size(), d1 * (d1 * d2) * (d1 * d2));
            for (const auto &t : dec.terms) {
                EXPECT_EQ(t.op_a.dim(), d1);
                EXPECT_EQ(t.op_b.dim(), d2);
                EXPECT_GT(std::abs(t.coeff), kZeroCoefficientFloor);
            }
        }
    }
}

TEST(decompose_csum, projector_expansions_are_real) {
    for (size_t d = 2; d <= 6; d++) {
        for (size_t r = 0; r < d; r++) {
            for (auto c : expand_in_basis(projector(d, r), full_basis(d))) {
                EXPECT_NEAR(c.imag(), 0, 1e-12);
            }
        }
    }
}

TEST(truncate, zero_is_identity) {
    auto dec = decompose_csum(3, 4, 0);
    auto t = truncate(dec, 0);
    EXPECT_EQ(t.size(), dec.size());
    EXPECT_EQ(t.residual, dec.residual);
}

TEST(truncate, above_max_empties) {
    auto dec = decompose_csum(3, 2, 0);
    auto t = truncate(dec, 10.0);
    EXPECT_EQ(t.size(), 0u);
    EXPECT_NEAR(t.residual, std::sqrt(6.0), 1e-12);
}

TEST(truncate, qubit_cnot_at_point_six) {
    auto t = truncate(decompose_csum(2, 2, 0), 0.6);
    EXPECT_EQ(t.size(), 0u);
    EXPECT_NEAR(t.residual, 2.0, 1e-12);
    EXPECT_EQ(decompose_csum(2, 2, 0.6).size(), 0u);
}

TEST(truncate, monotone_in_threshold) {
    auto dec = decompose_csum(4, 3, 0);
    size_t last_count = dec.size();
    double last_residual = dec.residual;
    for (double tau : {0.0, 0.01, 0.05, 0.1, 0.2, 0.3, 0.5, 1.0}) {
        auto t = truncate(dec, tau);
        EXPECT_LE(t.size(), last_count);
        EXPECT_GE(t.residual, last_residual - 1e-15);
        for (const auto &term : t.terms) {
            EXPECT_GT(std::abs(term.coeff), tau);
        }
        last_count = t.size();
        last_residual = t.residual;
    }
    EXPECT_THROW(truncate(decompose_csum(2, 2, 0.1), 0.05), std::invalid_argument);
}

TEST(method_names, round_trip) {
    EXPECT_EQ(parse_method("gellmann"), DecompositionMethod::GellMann);
    EXPECT_EQ(parse_method(method_name(DecompositionMethod::Schmidt)), DecompositionMethod::Schmidt);
    EXPECT_THROW(parse_method("svd"), std::invalid_argument);
}
