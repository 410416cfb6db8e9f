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

// Scalar reference kernels. Complex products are spelled out to avoid the
// NaN-recovery path of std::complex multiplication.

#include "kernels_internal.hpp"

namespace cpopt::kernels::detail {

namespace {

inline void mul_acc(double ar, double ai, double br, double bi, double& cr, double& ci) {
    cr += ar * br - ai * bi;
    ci += ar * bi + ai * br;
}

}  // namespace

void gemm_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
                 std::size_t n) {
    for (std::size_t i = 0; i < m * n; ++i) c[i] = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double ar = a[i * k + p].real();
            const double ai = a[i * k + p].imag();
            const cplx* brow = b + p * n;
            for (std::size_t j = 0; j < n; ++j) {
                double cr = crow[j].real();
                double ci = crow[j].imag();
                mul_acc(ar, ai, brow[j].real(), brow[j].imag(), cr, ci);
                crow[j] = {cr, ci};
            }
        }
    }
}

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
    double sr = 0.0;
    double si = 0.0;
    for (std::size_t i = 0; i < n; ++i) mul_acc(x[i].real(), -x[i].imag(), y[i].real(), y[i].imag(), sr, si);
    return {sr, si};
}

void rank1_scalar(cplx* c, std::size_t m, std::size_t n, double alpha, const cplx* x,
                  const cplx* y) {
    for (std::size_t i = 0; i < m; ++i) {
        const double xr = alpha * x[i].real();
        const double xi = alpha * x[i].imag();
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            double cr = crow[j].real();
            double ci = crow[j].imag();
            mul_acc(xr, xi, y[j].real(), -y[j].imag(), cr, ci);
            crow[j] = {cr, ci};
        }
    }
}

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) {
        double yr = y[i].real();
        double yi = y[i].imag();
        mul_acc(alpha.real(), alpha.imag(), x[i].real(), x[i].imag(), yr, yi);
        y[i] = {yr, yi};
    }
}

}  // namespace cpopt::kernels::detail
