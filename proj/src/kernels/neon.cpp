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

// NEON kernels for aarch64. One float64x2_t holds a single complex double.

#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace cpopt::kernels::detail {

namespace {

inline float64x2_t load1(const cplx* p) { return vld1q_f64(reinterpret_cast<const double*>(p)); }
inline void store1(cplx* p, float64x2_t v) { vst1q_f64(reinterpret_cast<double*>(p), v); }

// (ar*br - ai*bi, ar*bi + ai*br)
inline float64x2_t cmul(double ar, float64x2_t ai_signed, float64x2_t b) {
    const float64x2_t swapped = vextq_f64(b, b, 1);
    return vfmaq_f64(vmulq_n_f64(b, ar), swapped, ai_signed);
}

inline float64x2_t signed_imag(double ai) {
    const double v[2] = {-ai, ai};
    return vld1q_f64(v);
}

}  // namespace

void gemm_neon(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
               std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
        for (std::size_t p = 0; p < k; ++p) {
            const double ar = a[i * k + p].real();
            const float64x2_t ai = signed_imag(a[i * k + p].imag());
            const cplx* brow = b + p * n;
            for (std::size_t j = 0; j < n; ++j) {
                store1(crow + j, vaddq_f64(load1(crow + j), cmul(ar, ai, load1(brow + j))));
            }
        }
    }
}

cplx dotc_neon(const cplx* x, const cplx* y, std::size_t n) {
    float64x2_t direct = vdupq_n_f64(0.0);
    float64x2_t cross = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = load1(x + i);
        const float64x2_t yv = load1(y + i);
        direct = vfmaq_f64(direct, xv, yv);
        cross = vfmaq_f64(cross, xv, vextq_f64(yv, yv, 1));
    }
    return {vgetq_lane_f64(direct, 0) + vgetq_lane_f64(direct, 1),
            vgetq_lane_f64(cross, 0) - vgetq_lane_f64(cross, 1)};
}

void rank1_neon(cplx* c, std::size_t m, std::size_t n, double alpha, const cplx* x,
                const cplx* y) {
    const double conj_sign[2] = {1.0, -1.0};
    const float64x2_t conj_mask = vld1q_f64(conj_sign);
    for (std::size_t i = 0; i < m; ++i) {
        const double xr = alpha * x[i].real();
        const float64x2_t xi = signed_imag(alpha * x[i].imag());
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const float64x2_t ybar = vmulq_f64(load1(y + j), conj_mask);
            store1(crow + j, vaddq_f64(load1(crow + j), cmul(xr, xi, ybar)));
        }
    }
}

void axpy_neon(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    const float64x2_t ai = signed_imag(alpha.imag());
    for (std::size_t i = 0; i < n; ++i) {
        store1(y + i, vaddq_f64(load1(y + i), cmul(alpha.real(), ai, load1(x + i))));
    }
}

}  // namespace cpopt::kernels::detail
