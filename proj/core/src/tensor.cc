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

#include "qcut/tensor.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

using namespace qcut;

DenseOperator::DenseOperator(size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw std::invalid_argument("DenseOperator: dim must be >= 1");
    }
}

DenseOperator::DenseOperator(size_t dim, std::vector<cplx> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) {
        throw std::invalid_argument("DenseOperator: dim must be >= 1");
    }
    if (entries_.size() != dim * dim) {
        throw std::invalid_argument(
            "DenseOperator: expected " + std::to_string(dim * dim) + " entries, got " +
            std::to_string(entries_.size()));
    }
}

DenseOperator DenseOperator::identity(size_t dim) {
    DenseOperator out(dim);
    for (size_t i = 0; i < dim; i++) {
        out(i, i) = 1.0;
    }
    return out;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

cplx DenseOperator::trace() const noexcept {
    cplx t = 0;
    for (size_t i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

double DenseOperator::frobenius_norm() const noexcept {
    double s = 0;
    for (const auto &e : entries_) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

static void require_same_dim(const DenseOperator &a, const DenseOperator &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(
            std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
            std::to_string(b.dim()) + ")");
    }
}

DenseOperator &DenseOperator::operator+=(const DenseOperator &other) {
    require_same_dim(*this, other, "operator+=");
    for (size_t i = 0; i < entries_.size(); i++) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

DenseOperator &DenseOperator::operator-=(const DenseOperator &other) {
    require_same_dim(*this, other, "operator-=");
    for (size_t i = 0; i < entries_.size(); i++) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

DenseOperator &DenseOperator::operator*=(cplx scale) noexcept {
    for (auto &e : entries_) {
        e *= scale;
    }
    return *this;
}

DenseOperator qcut::operator+(DenseOperator a, const DenseOperator &b) {
    a += b;
    return a;
}

DenseOperator qcut::operator-(DenseOperator a, const DenseOperator &b) {
    a -= b;
    return a;
}

DenseOperator qcut::operator*(cplx scale, DenseOperator a) {
    a *= scale;
    return a;
}

DenseOperator qcut::operator*(const DenseOperator &a, const DenseOperator &b) {
    require_same_dim(a, b, "operator*");
    size_t n = a.dim();
    DenseOperator out(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t k = 0; k < n; k++) {
            cplx v = a(r, k);
            if (v == cplx{}) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                out(r, c) += v * b(k, c);
            }
        }
    }
    return out;
}

DenseOperator qcut::kron(const DenseOperator &a, const DenseOperator &b) {
    size_t na = a.dim();
    size_t nb = b.dim();
    DenseOperator out(na * nb);
    for (size_t i1 = 0; i1 < na; i1++) {
        for (size_t j1 = 0; j1 < na; j1++) {
            cplx v = a(i1, j1);
            if (v == cplx{}) {
                continue;
            }
            for (size_t i2 = 0; i2 < nb; i2++) {
                for (size_t j2 = 0; j2 < nb; j2++) {
                    out(i1 * nb + i2, j1 * nb + j2) = v * b(i2, j2);
                }
            }
        }
    }
    return out;
}

cplx qcut::trace_of_product(const DenseOperator &a, const DenseOperator &b) {
    require_same_dim(a, b, "trace_of_product");
    cplx t = 0;
    size_t n = a.dim();
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            t += a(i, k) * b(k, i);
        }
    }
    return t;
}

double qcut::frobenius_distance(const DenseOperator &a, const DenseOperator &b) {
    require_same_dim(a, b, "frobenius_distance");
    double s = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t i = 0; i < ea.size(); i++) {
        s += std::norm(ea[i] - eb[i]);
    }
    return std::sqrt(s);
}

double qcut::max_abs_diff(const DenseOperator &a, const DenseOperator &b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t i = 0; i < ea.size(); i++) {
        m = std::max(m, std::abs(ea[i] - eb[i]));
    }
    return m;
}

bool qcut::is_unitary(const DenseOperator &op, double tol) {
    return max_abs_diff(op * op.adjoint(), DenseOperator::identity(op.dim())) <= tol;
}

bool qcut::is_hermitian(const DenseOperator &op, double tol) {
    return max_abs_diff(op, op.adjoint()) <= tol;
}

size_t qcut::checked_product(std::span<const size_t> dims) {
    size_t total = 1;
    for (size_t d : dims) {
        if (d != 0 && total > std::numeric_limits<size_t>::max() / d) {
            throw std::overflow_error("dimension product overflows size_t");
        }
        total *= d;
    }
    return total;
}

StateVector::StateVector(std::vector<size_t> dims, std::vector<cplx> amps)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
    for (size_t d : dims_) {
        if (d == 0) {
            throw std::invalid_argument("StateVector: qudit dimension must be >= 1");
        }
    }
    size_t expected = checked_product(dims_);
    if (amps_.size() != expected) {
        throw std::invalid_argument(
            "StateVector: expected " + std::to_string(expected) + " amplitudes, got " +
            std::to_string(amps_.size()));
    }
}

StateVector StateVector::zeros(std::vector<size_t> dims) {
    size_t n = checked_product(dims);
    return StateVector(std::move(dims), std::vector<cplx>(n));
}

StateVector StateVector::zero_state(std::vector<size_t> dims) {
    StateVector out = zeros(std::move(dims));
    out.amps_[0] = 1.0;
    return out;
}

double StateVector::norm_squared() const noexcept {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

StateVector qcut::kron_vec(const StateVector &a, const StateVector &b) {
    std::vector<size_t> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    std::vector<cplx> amps(a.size() * b.size());
    size_t nb = b.size();
    for (size_t i = 0; i < a.size(); i++) {
        cplx v = a[i];
        for (size_t j = 0; j < nb; j++) {
            amps[i * nb + j] = v * b[j];
        }
    }
    return StateVector(std::move(dims), std::move(amps));
}

double qcut::max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.dims() != b.dims()) {
        throw std::invalid_argument("max_abs_diff: state dims differ");
    }
    double m = 0;
    for (size_t k = 0; k < a.size(); k++) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

MixedRadixSpec::MixedRadixSpec(std::vector<size_t> bases, std::vector<size_t> permutation)
    : bases_(std::move(bases)), permutation_(std::move(permutation)), total_(checked_product(bases_)) {
    if (permutation_.size() != bases_.size()) {
        throw std::invalid_argument("MixedRadixSpec: permutation length differs from bases length");
    }
    for (size_t b : bases_) {
        if (b == 0) {
            throw std::invalid_argument("MixedRadixSpec: bases must be >= 1");
        }
    }
    std::vector<bool> seen(bases_.size(), false);
    for (size_t p : permutation_) {
        if (p >= bases_.size() || seen[p]) {
            throw std::invalid_argument("MixedRadixSpec: permutation is not a bijection");
        }
        seen[p] = true;
    }
}

MixedRadixSpec MixedRadixSpec::identity(std::vector<size_t> bases) {
    std::vector<size_t> perm(bases.size());
    std::iota(perm.begin(), perm.end(), size_t{0});
    return MixedRadixSpec(std::move(bases), std::move(perm));
}

MixedRadixSpec MixedRadixSpec::reversal(std::vector<size_t> bases) {
    std::vector<size_t> perm(bases.size());
    std::iota(perm.rbegin(), perm.rend(), size_t{0});
    return MixedRadixSpec(std::move(bases), std::move(perm));
}

std::vector<size_t> MixedRadixSpec::logical_bases() const {
    std::vector<size_t> out(bases_.size());
    for (size_t j = 0; j < out.size(); j++) {
        out[j] = bases_[permutation_[j]];
    }
    return out;
}

MixedRadixSpec MixedRadixSpec::inverse() const {
    std::vector<size_t> inv(permutation_.size());
    for (size_t j = 0; j < permutation_.size(); j++) {
        inv[permutation_[j]] = j;
    }
    return MixedRadixSpec(logical_bases(), std::move(inv));
}

std::vector<size_t> qcut::mixed_radix_decode(size_t k, const MixedRadixSpec &spec) {
    if (k >= spec.total()) {
        throw std::out_of_range(
            "mixed_radix_decode: index " + std::to_string(k) + " >= " + std::to_string(spec.total()));
    }
    const auto &bases = spec.bases();
    std::vector<size_t> digits(bases.size());
    size_t t = k;
    for (size_t j = bases.size(); j-- > 0;) {
        digits[j] = t % bases[j];
        t /= bases[j];
    }
    return digits;
}

size_t qcut::mixed_radix_encode(std::span<const size_t> digits, const MixedRadixSpec &spec) {
    const auto &bases = spec.bases();
    if (digits.size() != bases.size()) {
        throw std::invalid_argument("mixed_radix_encode: digit count differs from base count");
    }
    size_t k = 0;
    for (size_t j = 0; j < bases.size(); j++) {
        if (digits[j] >= bases[j]) {
            throw std::out_of_range(
                "mixed_radix_encode: digit " + std::to_string(digits[j]) + " at position " + std::to_string(j) +
                " is not below base " + std::to_string(bases[j]));
        }
        k = k * bases[j] + digits[j];
    }
    return k;
}

std::vector<size_t> qcut::permute_digits(std::span<const size_t> digits, const MixedRadixSpec &spec) {
    const auto &perm = spec.permutation();
    if (digits.size() != perm.size()) {
        throw std::invalid_argument("permute_digits: digit count differs from permutation length");
    }
    std::vector<size_t> out(digits.size());
    for (size_t j = 0; j < out.size(); j++) {
        out[j] = digits[perm[j]];
    }
    return out;
}

double Matrix::frobenius_norm() const noexcept {
    double s = 0;
    for (const auto &e : data) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

Matrix qcut::matmul(const Matrix &a, const Matrix &b) {
    if (a.cols != b.rows) {
        throw std::invalid_argument("matmul: inner dimensions differ");
    }
    Matrix out(a.rows, b.cols);
    for (size_t r = 0; r < a.rows; r++) {
        for (size_t k = 0; k < a.cols; k++) {
            cplx v = a(r, k);
            for (size_t c = 0; c < b.cols; c++) {
                out(r, c) += v * b(k, c);
            }
        }
    }
    return out;
}

Matrix qcut::adjoint(const Matrix &m) {
    Matrix out(m.cols, m.rows);
    for (size_t r = 0; r < m.rows; r++) {
        for (size_t c = 0; c < m.cols; c++) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

namespace {

using Column = std::vector<cplx>;

double column_norm_squared(const Column &v) {
    double s = 0;
    for (const auto &x : v) {
        s += std::norm(x);
    }
    return s;
}

cplx column_dot(const Column &a, const Column &b) {
    cplx s = 0;
    for (size_t i = 0; i < a.size(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

// Applies the unitary column rotation that zeroes the (p, q) inner product.
void rotate(Column &p, Column &q, double c, double s, cplx phase) {
    for (size_t i = 0; i < p.size(); i++) {
        cplx xp = p[i];
        cplx xq = phase * q[i];
        p[i] = c * xp - s * xq;
        q[i] = s * xp + c * xq;
    }
}

// Extends orthonormal `basis` to `target` columns by Gram-Schmidt over unit vectors.
void complete_orthonormal(std::vector<Column> &basis, size_t dim, size_t target) {
    for (size_t e = 0; e < dim && basis.size() < target; e++) {
        Column v(dim);
        v[e] = 1.0;
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &b : basis) {
                cplx proj = column_dot(b, v);
                for (size_t i = 0; i < dim; i++) {
                    v[i] -= proj * b[i];
                }
            }
        }
        // The residual weights of all unit vectors sum to dim - basis.size() >= 1, so
        // this cutoff cannot run out of candidates before reaching `target`.
        double n = column_norm_squared(v);
        if (n > 0.5 / static_cast<double>(dim)) {
            double inv = 1.0 / std::sqrt(n);
            for (auto &x : v) {
                x *= inv;
            }
            basis.push_back(std::move(v));
        }
    }
}

SvdResult svd_tall(const Matrix &m) {
    size_t rows = m.rows;
    size_t cols = m.cols;
    std::vector<Column> a(cols, Column(rows));
    std::vector<Column> v(cols, Column(cols));
    for (size_t c = 0; c < cols; c++) {
        for (size_t r = 0; r < rows; r++) {
            a[c][r] = m(r, c);
        }
        v[c][c] = 1.0;
    }

    constexpr double tol = 4 * std::numeric_limits<double>::epsilon();
    // Columns below this squared norm are numerically null and are left alone.
    double null_floor = 0;
    for (const auto &col : a) {
        null_floor += column_norm_squared(col);
    }
    null_floor *= std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon();
    constexpr int max_sweeps = 80;
    for (int sweep = 0; sweep < max_sweeps; sweep++) {
        bool rotated = false;
        for (size_t p = 0; p + 1 < cols; p++) {
            for (size_t q = p + 1; q < cols; q++) {
                double alpha = column_norm_squared(a[p]);
                double beta = column_norm_squared(a[q]);
                if (alpha <= null_floor || beta <= null_floor) {
                    continue;
                }
                cplx g = column_dot(a[p], a[q]);
                double gabs = std::abs(g);
                if (gabs <= tol * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                double zeta = (beta - alpha) / (2 * gabs);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                double c = 1 / std::sqrt(1 + t * t);
                double s = c * t;
                cplx phase = std::conj(g) / gabs;
                rotate(a[p], a[q], c, s, phase);
                rotate(v[p], v[q], c, s, phase);
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> norms(cols);
    for (size_t c = 0; c < cols; c++) {
        norms[c] = std::sqrt(column_norm_squared(a[c]));
    }
    std::vector<size_t> order(cols);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return norms[x] > norms[y];
    });

    double sigma_max = cols ? norms[order[0]] : 0.0;
    double null_cut = sigma_max * static_cast<double>(std::max(rows, cols)) * std::numeric_limits<double>::epsilon();

    SvdResult out{Matrix(rows, cols), std::vector<double>(cols), Matrix(cols, cols)};
    std::vector<Column> u_cols;
    for (size_t k = 0; k < cols; k++) {
        size_t src = order[k];
        double sigma = norms[src];
        out.sigma[k] = sigma;
        if (sigma > null_cut && sigma > 0) {
            Column u(rows);
            for (size_t r = 0; r < rows; r++) {
                u[r] = a[src][r] / sigma;
            }
            u_cols.push_back(std::move(u));
        }
        for (size_t c = 0; c < cols; c++) {
            out.vh(k, c) = std::conj(v[src][c]);
        }
    }
    // Null singular values get an arbitrary orthonormal completion of u.
    complete_orthonormal(u_cols, rows, cols);
    for (size_t k = 0; k < cols; k++) {
        for (size_t r = 0; r < rows; r++) {
            out.u(r, k) = u_cols[k][r];
        }
    }
    return out;
}

}  // namespace

SvdResult qcut::svd(const Matrix &m) {
    if (m.rows == 0 || m.cols == 0) {
        return SvdResult{Matrix(m.rows, 0), {}, Matrix(0, m.cols)};
    }
    if (m.rows >= m.cols) {
        return svd_tall(m);
    }
    SvdResult t = svd_tall(adjoint(m));
    return SvdResult{adjoint(t.vh), std::move(t.sigma), adjoint(t.u)};
}
