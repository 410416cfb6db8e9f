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

// Dense complex inner-loop kernels.
//
// Every kernel has a scalar reference implementation. Vector variants
// (AVX2+FMA on x86-64, NEON on aarch64) are compiled when the target
// architecture allows it and are picked at runtime from CPU feature bits.
// The CPOPT_SIMD environment variable ("scalar", "avx2", "neon") overrides
// the choice; an unavailable request falls back to scalar.
//
// All buffers are row-major and densely packed. Vector variants may round
// differently from the scalar path (FMA contraction) but never reorder the
// summation index, so results agree to a few ulps per accumulated term.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace cpopt::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

struct KernelTable {
    Isa isa;
    std::string_view name;

    // c[m x n] = a[m x k] * b[k x n]
    void (*gemm)(const cplx* a, const cplx* b, cplx* c, std::size_t m, std::size_t k,
                 std::size_t n);
    // sum_i conj(x_i) * y_i
    cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
    // c[m x n] += alpha * x * y^dagger
    void (*rank1)(cplx* c, std::size_t m, std::size_t n, double alpha, const cplx* x,
                  const cplx* y);
    // y += alpha * x
    void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the variant was not compiled in or the CPU lacks the feature.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;

/// Tables usable on this machine, scalar first.
std::vector<const KernelTable*> available_tables();

const KernelTable& active() noexcept;

/// Forces a variant process-wide; returns false (and leaves the selection
/// unchanged) if it is unavailable.
bool select(Isa isa) noexcept;

}  // namespace cpopt::kernels
