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

// Shared fixtures for the unit tests.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "cpopt/channel.hpp"
#include "cpopt/complex_matrix.hpp"
#include "cpopt/rng.hpp"

namespace cpopt::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, CounterRng& rng) {
    ComplexMatrix m(rows, cols);
    for (cplx& z : m.data()) z = {rng.normal(), rng.normal()};
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, CounterRng& rng) {
    return random_matrix(n, n, rng).hermitian_part();
}

inline ComplexMatrix random_psd(std::size_t n, std::size_t rank, CounterRng& rng) {
    const ComplexMatrix w = random_matrix(n, rank, rng);
    return (w * w.adjoint()).hermitian_part();
}

inline ComplexVector random_unit_vector(std::size_t n, CounterRng& rng) {
    ComplexVector v(n);
    double norm = 0.0;
    for (cplx& z : v) {
        z = {rng.normal(), rng.normal()};
        norm += std::norm(z);
    }
    for (cplx& z : v) z /= std::sqrt(norm);
    return v;
}

inline DensityMatrix random_density(std::size_t n, CounterRng& rng) {
    ComplexMatrix p = random_psd(n, n, rng);
    p *= 1.0 / p.trace().real();
    return {p};
}

/// E(|i><j|), read straight off the Choi blocks.
inline ComplexMatrix unit_image(const ChoiOperator& chi, std::size_t i, std::size_t j) {
    const std::size_t k = chi.dim_out();
    ComplexMatrix block(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) block(a, b) = chi.matrix()(i * k + a, j * k + b);
    return block;
}

/// Fresh path under the system temp directory, unique within the process.
inline std::filesystem::path temp_path(const std::string& stem) {
    static std::atomic<int> counter{0};
    const auto dir = std::filesystem::temp_directory_path() / "cpopt-tests";
    std::filesystem::create_directories(dir);
    return dir / (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace cpopt::testing
