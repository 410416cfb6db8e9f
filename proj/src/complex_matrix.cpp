// Copyright 2026 The cpopt Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "cpopt/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpopt/error.hpp"
#include "cpopt/kernels.hpp"

namespace cpopt {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<cplx>(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be >= 1");
    if (data_.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch, "entry count " + std::to_string(data_.size()) +
                                                      " != " + std::to_string(rows * cols));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be >= 1");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> v) {
    return ComplexMatrix(v.size(), 1, std::vector<cplx>(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> x, std::span<const cplx> y) {
    ComplexMatrix m(x.size(), y.size());
    kernels::active().rank1(m.data_.data(), x.size(), y.size(), 1.0, x.data(), y.data());
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(*this);
    for (auto& z : out.data_) z = std::conj(z);
    return out;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
    if (!is_square()) throw Error(ErrorKind::NonSquare, "hermitian_part");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
    return out;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw Error(ErrorKind::NonSquare, "trace");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    return std::sqrt(kernels::active().dotc(data_.data(), data_.data(), data_.size()).real());
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "operator+=");
    kernels::active().axpy(data_.size(), 1.0, o.data_.data(), data_.data());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same_shape(*this, o, "operator-=");
    kernels::active().axpy(data_.size(), -1.0, o.data_.data(), data_.data());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "matmul: inner dimensions " + std::to_string(a.cols()) +
                                                      " vs " + std::to_string(b.rows()));
    }
    ComplexMatrix c(a.rows(), b.cols());
    kernels::active().gemm(a.data().data(), b.data().data(), c.data().data(), a.rows(), a.cols(), b.cols());
    return c;
}

ComplexVector matvec(const ComplexMatrix& m, std::span<const cplx> v) {
    if (m.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "matvec");
    ComplexVector out(m.rows());
    kernels::active().gemm(m.data().data(), v.data(), out.data(), m.rows(), m.cols(), 1);
    return out;
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
    if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "inner");
    return kernels::active().dotc(x.data(), y.data(), x.size());
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "hs_inner");
    return kernels::active().dotc(a.data().data(), b.data().data(), a.size());
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "trace_product");
    // Tr(ab) = <a^dagger, b>_HS
    return hs_inner(a.adjoint(), b);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

double frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).frobenius_norm(); }

double hermiticity_deviation(const ComplexMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquare, "hermiticity_deviation");
    return frobenius_diff(m, m.adjoint());
}

}  // namespace cpopt
