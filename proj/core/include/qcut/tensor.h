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

#ifndef QCUT_TENSOR_H
#define QCUT_TENSOR_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qcut {

using cplx = std::complex<double>;

/// A dense dim x dim complex matrix stored row-major.
class DenseOperator {
   public:
    /// Zero matrix of the given dimension.
    explicit DenseOperator(size_t dim);
    DenseOperator(size_t dim, std::vector<cplx> entries);

    static DenseOperator identity(size_t dim);

    size_t dim() const noexcept {
        return dim_;
    }
    cplx operator()(size_t row, size_t col) const noexcept {
        return entries_[row * dim_ + col];
    }
    cplx &operator()(size_t row, size_t col) noexcept {
        return entries_[row * dim_ + col];
    }
    std::span<const cplx> entries() const noexcept {
        return entries_;
    }

    DenseOperator adjoint() const;
    cplx trace() const noexcept;
    double frobenius_norm() const noexcept;

    DenseOperator &operator+=(const DenseOperator &other);
    DenseOperator &operator-=(const DenseOperator &other);
    DenseOperator &operator*=(cplx scale) noexcept;

    bool operator==(const DenseOperator &other) const = default;

   private:
    size_t dim_;
    std::vector<cplx> entries_;
};

DenseOperator operator+(DenseOperator a, const DenseOperator &b);
DenseOperator operator-(DenseOperator a, const DenseOperator &b);
DenseOperator operator*(cplx scale, DenseOperator a);
DenseOperator operator*(const DenseOperator &a, const DenseOperator &b);

/// Kronecker product; `a` is the more significant factor.
DenseOperator kron(const DenseOperator &a, const DenseOperator &b);

/// Tr(a * b) without forming the product.
cplx trace_of_product(const DenseOperator &a, const DenseOperator &b);

/// Frobenius norm of (a - b).
double frobenius_distance(const DenseOperator &a, const DenseOperator &b);

/// Largest entrywise modulus of (a - b).
double max_abs_diff(const DenseOperator &a, const DenseOperator &b);

bool is_unitary(const DenseOperator &op, double tol = 1e-12);
bool is_hermitian(const DenseOperator &op, double tol = 1e-12);

/// Product of dimensions, throwing std::overflow_error if it does not fit in size_t.
size_t checked_product(std::span<const size_t> dims);

/// Amplitudes over a mixed-radix index space. dims[0] is the most significant digit.
class StateVector {
   public:
    StateVector(std::vector<size_t> dims, std::vector<cplx> amps);

    /// |0...0> over the given dims.
    static StateVector zero_state(std::vector<size_t> dims);
    /// All-zero amplitudes (not a physical state; used as an accumulator).
    static StateVector zeros(std::vector<size_t> dims);

    const std::vector<size_t> &dims() const noexcept {
        return dims_;
    }
    size_t size() const noexcept {
        return amps_.size();
    }
    size_t num_qudits() const noexcept {
        return dims_.size();
    }
    std::span<const cplx> amps() const noexcept {
        return amps_;
    }
    std::span<cplx> mutable_amps() noexcept {
        return amps_;
    }
    cplx operator[](size_t k) const noexcept {
        return amps_[k];
    }

    double norm_squared() const noexcept;

    bool operator==(const StateVector &other) const = default;

   private:
    std::vector<size_t> dims_;
    std::vector<cplx> amps_;
};

/// Tensor product of states; dims are concatenated with `a` in front.
StateVector kron_vec(const StateVector &a, const StateVector &b);

/// Largest entrywise modulus of (a - b). Throws if dims differ.
double max_abs_diff(const StateVector &a, const StateVector &b);

/// Digit bases plus a permutation taking cut-order digit positions to logical positions.
///
/// Digit lists are big-endian: bases[0] is the most significant position.
/// permute_digits produces logical digits out[j] = digits[permutation[j]].
class MixedRadixSpec {
   public:
    MixedRadixSpec(std::vector<size_t> bases, std::vector<size_t> permutation);
    static MixedRadixSpec identity(std::vector<size_t> bases);
    static MixedRadixSpec reversal(std::vector<size_t> bases);

    const std::vector<size_t> &bases() const noexcept {
        return bases_;
    }
    const std::vector<size_t> &permutation() const noexcept {
        return permutation_;
    }
    size_t size() const noexcept {
        return bases_.size();
    }
    size_t total() const noexcept {
        return total_;
    }
    /// Bases seen in logical order, i.e. bases[permutation[j]].
    std::vector<size_t> logical_bases() const;
    /// The MixedRadixSpec whose permutation undoes this one, over the logical bases.
    MixedRadixSpec inverse() const;

   private:
    std::vector<size_t> bases_;
    std::vector<size_t> permutation_;
    size_t total_;
};

/// Digits of k by repeated mod/divide, least significant (last) position first.
std::vector<size_t> mixed_radix_decode(size_t k, const MixedRadixSpec &spec);
size_t mixed_radix_encode(std::span<const size_t> digits, const MixedRadixSpec &spec);
std::vector<size_t> permute_digits(std::span<const size_t> digits, const MixedRadixSpec &spec);

/// Rectangular row-major complex matrix.
struct Matrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<cplx> data;

    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows(rows), cols(cols), data(rows * cols) {
    }
    cplx operator()(size_t r, size_t c) const noexcept {
        return data[r * cols + c];
    }
    cplx &operator()(size_t r, size_t c) noexcept {
        return data[r * cols + c];
    }
    double frobenius_norm() const noexcept;
};

Matrix matmul(const Matrix &a, const Matrix &b);
Matrix adjoint(const Matrix &m);

/// Thin SVD: m = u * diag(sigma) * vh with k = min(rows, cols).
struct SvdResult {
    Matrix u;                   // rows x k, orthonormal columns
    std::vector<double> sigma;  // k values, descending, non-negative
    Matrix vh;                  // k x cols, orthonormal rows
};

/// One-sided (Hestenes) Jacobi SVD.
SvdResult svd(const Matrix &m);

}  // namespace qcut

#endif
