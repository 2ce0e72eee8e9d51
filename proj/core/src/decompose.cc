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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcut/gates.h"

using namespace qcut;

std::string_view qcut::method_name(DecompositionMethod method) {
    return method == DecompositionMethod::GellMann ? "gellmann" : "schmidt";
}

DecompositionMethod qcut::parse_method(std::string_view name) {
    if (name == "gellmann") {
        return DecompositionMethod::GellMann;
    }
    if (name == "schmidt") {
        return DecompositionMethod::Schmidt;
    }
    throw std::invalid_argument("unknown decomposition method '" + std::string(name) + "'");
}

DenseOperator qcut::reassemble(const GateDecomposition &dec) {
    DenseOperator out(dec.d1 * dec.d2);
    for (const auto &t : dec.terms) {
        out += t.coeff * kron(t.op_a, t.op_b);
    }
    return out;
}

std::vector<cplx> qcut::expand_in_basis(const DenseOperator &m, const OperatorBasis &basis) {
    if (m.dim() != basis.dim) {
        throw std::invalid_argument(
            "expand_in_basis: operator dimension " + std::to_string(m.dim()) + " does not match basis dimension " +
            std::to_string(basis.dim));
    }
    std::vector<cplx> out;
    out.reserve(basis.size());
    for (const auto &b : basis.elements) {
        out.push_back(trace_of_product(m, b) / trace_of_product(b, b));
    }
    return out;
}

GateDecomposition qcut::decompose_csum(size_t d1, size_t d2, double threshold) {
    if (threshold < 0 || std::isnan(threshold)) {
        throw std::invalid_argument("decompose_csum: threshold must be >= 0");
    }
    OperatorBasis basis_a = full_basis(d1);
    OperatorBasis basis_b = full_basis(d2);

    std::vector<std::vector<cplx>> a(d1);
    std::vector<std::vector<cplx>> b(d1);
    for (size_t r = 0; r < d1; r++) {
        a[r] = expand_in_basis(projector(d1, r), basis_a);
        b[r] = expand_in_basis(shift_x(d2, r % d2), basis_b);
    }

    GateDecomposition dec;
    dec.d1 = d1;
    dec.d2 = d2;
    dec.method = DecompositionMethod::GellMann;
    dec.threshold = threshold;
    dec.target = csum(d1, d2);
    double keep_above = std::max(threshold, kZeroCoefficientFloor);
    for (size_t ia = 0; ia < basis_a.size(); ia++) {
        for (size_t ib = 0; ib < basis_b.size(); ib++) {
            cplx c = 0;
            for (size_t r = 0; r < d1; r++) {
                c += a[r][ia] * b[r][ib];
            }
            if (std::abs(c) > keep_above) {
                dec.terms.push_back(DecompositionTerm{
                    c,
                    basis_a.elements[ia],
                    basis_b.elements[ib],
                    basis_a.labels[ia].str(),
                    basis_b.labels[ib].str(),
                    ia,
                    ib,
                    std::abs(c)});
            }
        }
    }
    dec.residual = frobenius_distance(reassemble(dec), dec.target);
    return dec;
}

GateDecomposition qcut::truncate(const GateDecomposition &dec, double threshold) {
    if (threshold < dec.threshold) {
        throw std::invalid_argument("truncate: threshold must not be below the decomposition's current threshold");
    }
    GateDecomposition out = dec;
    out.threshold = threshold;
    std::erase_if(out.terms, [&](const DecompositionTerm &t) {
        return t.weight <= threshold;
    });
    if (out.terms.size() != dec.terms.size()) {
        out.residual = frobenius_distance(reassemble(out), out.target);
    }
    return out;
}
