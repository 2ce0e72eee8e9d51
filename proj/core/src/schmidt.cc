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

#include "qcut/schmidt.h"

#include <cmath>
#include <stdexcept>

using namespace qcut;

static void require_shape(const DenseOperator &u, size_t d1, size_t d2) {
    if (d1 == 0 || d2 == 0 || u.dim() != d1 * d2) {
        throw std::invalid_argument(
            "operator_schmidt: operator dimension " + std::to_string(u.dim()) + " != d1*d2 = " +
            std::to_string(d1) + "*" + std::to_string(d2));
    }
}

Matrix qcut::reshuffle(const DenseOperator &u, size_t d1, size_t d2) {
    require_shape(u, d1, d2);
    Matrix r(d1 * d1, d2 * d2);
    for (size_t i1 = 0; i1 < d1; i1++) {
        for (size_t i2 = 0; i2 < d2; i2++) {
            for (size_t j1 = 0; j1 < d1; j1++) {
                for (size_t j2 = 0; j2 < d2; j2++) {
                    r(i1 * d1 + j1, i2 * d2 + j2) = u(i1 * d2 + i2, j1 * d2 + j2);
                }
            }
        }
    }
    return r;
}

SchmidtDecomposition qcut::operator_schmidt(
    const DenseOperator &u, size_t d1, size_t d2, std::optional<double> tolerance) {
    Matrix r = reshuffle(u, d1, d2);
    SvdResult s = svd(r);

    SchmidtDecomposition out;
    out.d1 = d1;
    out.d2 = d2;
    double sigma_max = s.sigma.empty() ? 0.0 : s.sigma.front();
    out.tolerance = tolerance.value_or(1e-10 * sigma_max);
    if (out.tolerance < 0 || std::isnan(out.tolerance)) {
        throw std::invalid_argument("operator_schmidt: tolerance must be >= 0");
    }
    for (size_t k = 0; k < s.sigma.size(); k++) {
        double sigma = s.sigma[k];
        if (!(sigma > out.tolerance)) {
            break;
        }
        double root = std::sqrt(sigma);
        // R = sum_k sigma_k u_k v_k^dagger, so A_k(i1,j1) = u_k[i1 d1 + j1] and
        // B_k(i2,j2) = conj(v_k)[i2 d2 + j2] = vh(k, i2 d2 + j2).
        DenseOperator a(d1);
        for (size_t i = 0; i < d1 * d1; i++) {
            a(i / d1, i % d1) = s.u(i, k) * root;
        }
        DenseOperator b(d2);
        for (size_t i = 0; i < d2 * d2; i++) {
            b(i / d2, i % d2) = s.vh(k, i) * root;
        }
        out.sigmas.push_back(sigma);
        out.ops_a.push_back(std::move(a));
        out.ops_b.push_back(std::move(b));
    }
    return out;
}

size_t qcut::schmidt_rank(const DenseOperator &u, size_t d1, size_t d2, std::optional<double> tolerance) {
    return operator_schmidt(u, d1, d2, tolerance).rank();
}

GateDecomposition qcut::decompose_schmidt(const DenseOperator &u, size_t d1, size_t d2, double threshold) {
    if (threshold < 0 || std::isnan(threshold)) {
        throw std::invalid_argument("decompose_schmidt: threshold must be >= 0");
    }
    SchmidtDecomposition s = operator_schmidt(u, d1, d2);
    GateDecomposition dec;
    dec.d1 = d1;
    dec.d2 = d2;
    dec.method = DecompositionMethod::Schmidt;
    dec.threshold = threshold;
    dec.target = u;
    for (size_t k = 0; k < s.rank(); k++) {
        if (s.sigmas[k] <= threshold) {
            continue;
        }
        std::string label = "schmidt[" + std::to_string(k) + "]";
        dec.terms.push_back(DecompositionTerm{1.0, s.ops_a[k], s.ops_b[k], label, label, k, k, s.sigmas[k]});
    }
    dec.residual = frobenius_distance(reassemble(dec), u);
    return dec;
}
