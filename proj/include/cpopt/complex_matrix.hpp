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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cpopt {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

/// Dense row-major complex matrix, at least 1x1.
class ComplexMatrix {
 public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix column(std::span<const cplx> v);
    /// |x><y|
    static ComplexMatrix outer(std::span<const cplx> x, std::span<const cplx> y);
    static ComplexMatrix projector(std::span<const cplx> v) { return outer(v, v); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<cplx> data() noexcept { return data_; }
    std::span<const cplx> data() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    /// (m + m^dagger) / 2
    ComplexMatrix hermitian_part() const;

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, cplx s);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
/// Matrix product through the active SIMD kernel.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexVector matvec(const ComplexMatrix& m, std::span<const cplx> v);
/// sum_i conj(x_i) y_i
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
/// Tr(a^dagger b), the Hilbert-Schmidt inner product.
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
/// Tr(a b) for arbitrary conformable square products.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// ||m - m^dagger||_F
double hermiticity_deviation(const ComplexMatrix& m);

}  // namespace cpopt
