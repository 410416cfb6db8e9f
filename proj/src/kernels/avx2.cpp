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

// AVX2 + FMA kernels. This translation unit is built with -mavx2 -mfma and
// must only be entered after the dispatcher has checked the CPU flags.
//
// One __m256d holds two complex doubles laid out (re0, im0, re1, im1).
// A complex product a*b with a broadcast as (ar, ar, ar, ar) / (ai, ai, ai, ai)
// is fmaddsub(ar, b, ai * swap(b)), giving (ar*br - ai*bi, ar*bi + ai*br).

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace cpopt::kernels::detail {

namespace {

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

inline __m256d cmul(__m256d ar, __m256d ai, __m256d b) {
    const __m256d swapped = _mm256_permute_pd(b, 0b0101);
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, swapped));
}

// Same arithmetic as the vector path, for the odd trailing element.
inline cplx cmul_tail(double ar, double ai, cplx b) {
    return {ar * b.real() - ai * b.imag(), ar * b.imag() + ai * b.real()};
}

}  // namespace

void gemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
               std::size_t n) {
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t i = 0; i < m; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
        for (std::size_t p = 0; p < k; ++p) {
            const double are = a[i * k + p].real();
            const double aim = a[i * k + p].imag();
            const __m256d ar = _mm256_set1_pd(are);
            const __m256d ai = _mm256_set1_pd(aim);
            const cplx* brow = b + p * n;
            for (std::size_t j = 0; j < n2; j += 2) {
                store2(crow + j, _mm256_add_pd(load2(crow + j), cmul(ar, ai, load2(brow + j))));
            }
            if (n2 != n) crow[n2] += cmul_tail(are, aim, brow[n2]);
        }
    }
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
    // direct = (xr*yr, xi*yi, ...), cross = (xr*yi, xi*yr, ...)
    __m256d direct = _mm256_setzero_pd();
    __m256d cross = _mm256_setzero_pd();
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t i = 0; i < n2; i += 2) {
        const __m256d xv = load2(x + i);
        const __m256d yv = load2(y + i);
        direct = _mm256_fmadd_pd(xv, yv, direct);
        cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
    }
    alignas(32) double d[4];
    alignas(32) double s[4];
    _mm256_store_pd(d, direct);
    _mm256_store_pd(s, cross);
    double re = (d[0] + d[1]) + (d[2] + d[3]);
    double im = (s[0] - s[1]) + (s[2] - s[3]);
    if (n2 != n) {
        re += x[n2].real() * y[n2].real() + x[n2].imag() * y[n2].imag();
        im += x[n2].real() * y[n2].imag() - x[n2].imag() * y[n2].real();
    }
    return {re, im};
}

void rank1_avx2(cplx* c, std::size_t m, std::size_t n, double alpha, const cplx* x,
                const cplx* y) {
    const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t i = 0; i < m; ++i) {
        const double xr = alpha * x[i].real();
        const double xi = alpha * x[i].imag();
        const __m256d ar = _mm256_set1_pd(xr);
        const __m256d ai = _mm256_set1_pd(xi);
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n2; j += 2) {
            const __m256d ybar = _mm256_xor_pd(load2(y + j), conj_mask);
            store2(crow + j, _mm256_add_pd(load2(crow + j), cmul(ar, ai, ybar)));
        }
        if (n2 != n) crow[n2] += cmul_tail(xr, xi, std::conj(y[n2]));
    }
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t i = 0; i < n2; i += 2) {
        store2(y + i, _mm256_add_pd(load2(y + i), cmul(ar, ai, load2(x + i))));
    }
    if (n2 != n) y[n2] += cmul_tail(alpha.real(), alpha.imag(), x[n2]);
}

}  // namespace cpopt::kernels::detail
