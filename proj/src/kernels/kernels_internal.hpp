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

#include "cpopt/kernels.hpp"

namespace cpopt::kernels::detail {

void gemm_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
                 std::size_t n);
cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n);
void rank1_scalar(cplx* c, std::size_t m, std::size_t n, double alpha, const cplx* x,
                  const cplx* y);
void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y);

#if defined(CPOPT_HAVE_AVX2)
void gemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
               std::size_t n);
cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n);
void rank1_avx2(cplx* c, std::size_t m, std::size_t n, double alpha, const cplx* x,
                const cplx* y);
void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y);
#endif

#if defined(CPOPT_HAVE_NEON)
void gemm_neon(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
               std::size_t n);
cplx dotc_neon(const cplx* x, const cplx* y, std::size_t n);
void rank1_neon(cplx* c, std::size_t m, std::size_t n, double alpha, const cplx* x,
                const cplx* y);
void axpy_neon(std::size_t n, cplx alpha, const cplx* x, cplx* y);
#endif

}  // namespace cpopt::kernels::detail
