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

#include <cmath>
#include <cstdio>
#include <stdexcept>

using namespace qcut;

std::string BasisLabel::str() const {
    switch (kind) {
        case BasisKind::Identity:
            return "I";
        case BasisKind::Symmetric:
            return "S(" + std::to_string(j) + "," + std::to_string(k) + ")";
        case BasisKind::Antisymmetric:
            return "A(" + std::to_string(j) + "," + std::to_string(k) + ")";
        case BasisKind::Diagonal:
            return "D(" + std::to_string(j) + ")";
    }
    return "?";
}

BasisLabel BasisLabel::parse(const std::string &text) {
    if (text == "I") {
        return BasisLabel{};
    }
    unsigned long a = 0;
    unsigned long b = 0;
    char tail = 0;
    if (text.size() > 2 && (text[0] == 'S' || text[0] == 'A') &&
        std::sscanf(text.c_str() + 1, "(%lu,%lu%c", &a, &b, &tail) == 3 && tail == ')' &&
        text.back() == ')' && a < b) {
        return BasisLabel{text[0] == 'S' ? BasisKind::Symmetric : BasisKind::Antisymmetric, a, b};
    }
    if (text.size() > 2 && text[0] == 'D' && std::sscanf(text.c_str() + 1, "(%lu%c", &a, &tail) == 2 &&
        tail == ')' && a >= 1) {
        return BasisLabel{BasisKind::Diagonal, a, 0};
    }
    throw std::invalid_argument("unrecognized basis label '" + text + "'");
}

static void require_dim(size_t d) {
    if (d < 2) {
        throw std::invalid_argument("dimension must be >= 2, got " + std::to_string(d));
    }
}

DenseOperator qcut::basis_element(size_t d, const BasisLabel &label) {
    require_dim(d);
    DenseOperator g(d);
    switch (label.kind) {
        case BasisKind::Identity:
            return DenseOperator::identity(d);
        case BasisKind::Symmetric:
        case BasisKind::Antisymmetric:
            if (label.j >= label.k || label.k >= d) {
                throw std::out_of_range("basis label " + label.str() + " out of range for d=" + std::to_string(d));
            }
            if (label.kind == BasisKind::Symmetric) {
                g(label.j, label.k) = 1.0;
                g(label.k, label.j) = 1.0;
            } else {
                g(label.j, label.k) = cplx{0, -1};
                g(label.k, label.j) = cplx{0, 1};
            }
            return g;
        case BasisKind::Diagonal: {
            size_t l = label.j;
            if (l < 1 || l >= d) {
                throw std::out_of_range("basis label " + label.str() + " out of range for d=" + std::to_string(d));
            }
            double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
            for (size_t m = 0; m < l; m++) {
                g(m, m) = scale;
            }
            g(l, l) = -scale * static_cast<double>(l);
            return g;
        }
    }
    throw std::logic_error("unreachable basis kind");
}

OperatorBasis qcut::gellmann_basis(size_t d) {
    require_dim(d);
    OperatorBasis basis;
    basis.dim = d;
    auto push = [&](BasisLabel label) {
        basis.elements.push_back(basis_element(d, label));
        basis.labels.push_back(label);
    };
    for (BasisKind kind : {BasisKind::Symmetric, BasisKind::Antisymmetric}) {
        for (size_t j = 0; j < d; j++) {
            for (size_t k = j + 1; k < d; k++) {
                push(BasisLabel{kind, j, k});
            }
        }
    }
    for (size_t l = 1; l < d; l++) {
        push(BasisLabel{BasisKind::Diagonal, l, 0});
    }
    return basis;
}

OperatorBasis qcut::full_basis(size_t d) {
    OperatorBasis gm = gellmann_basis(d);
    OperatorBasis basis;
    basis.dim = d;
    basis.elements.reserve(d * d);
    basis.labels.reserve(d * d);
    basis.elements.push_back(DenseOperator::identity(d));
    basis.labels.push_back(BasisLabel{});
    for (size_t i = 0; i < gm.size(); i++) {
        basis.elements.push_back(std::move(gm.elements[i]));
        basis.labels.push_back(gm.labels[i]);
    }
    return basis;
}
