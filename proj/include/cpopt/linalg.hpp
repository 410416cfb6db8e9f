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

// Dense Hermitian linear algebra on ComplexMatrix.
//
// Composite index convention for bipartite operators on A (x) B, used by
// every function here and everywhere else in the library:
//     row = i_A * dim_B + i_B

#include <cstddef>
#include <vector>

#include "cpopt/complex_matrix.hpp"

namespace cpopt {

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // non-increasing
    ComplexMatrix eigenvectors;       // columns, orthonormal
};

enum class Factor { First, Second };

inline constexpr double kHermiticityTol = 1e-9;
inline constexpr double kClipTol = 1e-12;
inline constexpr double kPinvCutoff = 1e-12;

/// Spectral decomposition of the Hermitian part (m + m^dagger)/2. Throws
/// NotHermitian if ||m - m^dagger||_F > hermiticity_tol * max(1, ||m||_F).
EigenDecomposition herm_eig(const ComplexMatrix& m, double hermiticity_tol = kHermiticityTol);

/// V diag(f) V^dagger
ComplexMatrix spectral_compose(const ComplexMatrix& eigenvectors, const std::vector<double>& values);

/// Positive semidefinite square root. Eigenvalues in [-clip_tol, 0) count as
/// zero; anything more negative throws NegativeEigenvalue.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double clip_tol = kClipTol);

/// Hermitian pseudo-inverse: eigenvalues w >= rel_cutoff * w_max are
/// inverted, the rest map to zero. Throws AllZero if w_max <= 0.
ComplexMatrix reg_inverse(const ComplexMatrix& m, double rel_cutoff = kPinvCutoff);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_first, std::size_t dim_second,
                            Factor keep);

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_first, std::size_t dim_second,
                                Factor which);

double min_eigenvalue(const ComplexMatrix& m, double hermiticity_tol = kHermiticityTol);
double max_eigenvalue(const ComplexMatrix& m, double hermiticity_tol = kHermiticityTol);

}  // namespace cpopt
