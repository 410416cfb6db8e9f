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

#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"

namespace cpopt::kernels {

namespace {

const KernelTable kScalar{Isa::Scalar, "scalar", &detail::gemm_scalar, &detail::dotc_scalar,
                          &detail::rank1_scalar, &detail::axpy_scalar};

#if defined(CPOPT_HAVE_AVX2)
const KernelTable kAvx2{Isa::Avx2, "avx2", &detail::gemm_avx2, &detail::dotc_avx2,
                        &detail::rank1_avx2, &detail::axpy_avx2};
#endif

#if defined(CPOPT_HAVE_NEON)
const KernelTable kNeon{Isa::Neon, "neon", &detail::gemm_neon, &detail::dotc_neon,
                        &detail::rank1_neon, &detail::axpy_neon};
#endif

const KernelTable* table_for(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar:
            return &kScalar;
        case Isa::Avx2:
            return avx2_table();
        case Isa::Neon:
            return neon_table();
    }
    return nullptr;
}

const KernelTable* initial_choice() noexcept {
    if (const char* env = std::getenv("CPOPT_SIMD")) {
        const std::string want(env);
        if (want == "scalar") return &kScalar;
        if (want == "avx2" && avx2_table()) return avx2_table();
        if (want == "neon" && neon_table()) return neon_table();
    }
    if (const KernelTable* t = avx2_table()) return t;
    if (const KernelTable* t = neon_table()) return t;
    return &kScalar;
}

std::atomic<const KernelTable*>& current() noexcept {
    static std::atomic<const KernelTable*> table{initial_choice()};
    return table;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(CPOPT_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable* neon_table() noexcept {
#if defined(CPOPT_HAVE_NEON)
    return &kNeon;
#else
    return nullptr;
#endif
}

std::vector<const KernelTable*> available_tables() {
    std::vector<const KernelTable*> out{&kScalar};
    if (const KernelTable* t = avx2_table()) out.push_back(t);
    if (const KernelTable* t = neon_table()) out.push_back(t);
    return out;
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_relaxed); }

bool select(Isa isa) noexcept {
    const KernelTable* t = table_for(isa);
    if (t == nullptr) return false;
    current().store(t, std::memory_order_relaxed);
    return true;
}

}  // namespace cpopt::kernels
