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

// Channels in Choi form. For a map E from H (dim_in) to K (dim_out):
//
//     chi = sum_ij |i><j| (x) E(|i><j|)        (H factor first)
//     E(rho) = Tr_H[chi (rho^T (x) 1_K)]
//     trace preservation:  Tr_K[chi] = 1_H
//
// The maximally entangled vector behind chi is unnormalized, so Tr chi = dim_in.

#include <cstddef>
#include <functional>
#include <vector>

#include "cpopt/complex_matrix.hpp"
#include "cpopt/target.hpp"

namespace cpopt {

inline constexpr double kChoiPsdTol = 1e-10;
inline constexpr double kChoiTraceTol = 1e-9;
inline constexpr double kKrausCutoff = 1e-10;

struct KrausSet;

class ChoiOperator {
 public:
    /// Checks the shape only; use validate_choi for the physical invariants.
    ChoiOperator(std::size_t dim_in, std::size_t dim_out, ComplexMatrix matrix);

    static ChoiOperator identity(std::size_t dim);
    /// Every input goes to 1_K / dim_out.
    static ChoiOperator max_mixed(std::size_t dim_in, std::size_t dim_out);
    /// Every input goes to rho_out.
    static ChoiOperator constant_output(std::size_t dim_in, const ComplexMatrix& rho_out);
    /// Builds chi from the action of the map on the matrix units |i><j|.
    static ChoiOperator from_action(std::size_t dim_in, std::size_t dim_out,
                                    const std::function<ComplexMatrix(std::size_t i, std::size_t j)>& action);
    static ChoiOperator from_kraus(const KrausSet& kraus);
    /// V is dim_out x dim_in with orthonormal columns.
    static ChoiOperator from_isometry(const ComplexMatrix& v);

    std::size_t dim_in() const noexcept { return dim_in_; }
    std::size_t dim_out() const noexcept { return dim_out_; }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
    std::size_t dim_in_;
    std::size_t dim_out_;
    ComplexMatrix matrix_;
};

struct DensityMatrix {
    ComplexMatrix matrix;

    std::size_t dim() const noexcept { return matrix.rows(); }
    static DensityMatrix pure(const ComplexVector& psi);
    static DensityMatrix max_mixed(std::size_t dim);
};

struct KrausSet {
    std::size_t dim_in = 0;
    std::size_t dim_out = 0;
    std::vector<ComplexMatrix> operators;  // each dim_out x dim_in
    std::vector<double> weights;           // originating Choi eigenvalues

    std::size_t count() const noexcept { return operators.size(); }
};

struct ChoiReport {
    double min_eigenvalue = 0.0;
    double trace_preservation_deviation = 0.0;  // max_ij |Tr_K[chi] - 1_H|
    double hermiticity_deviation = 0.0;         // ||chi - chi^dagger||_F
    bool valid = false;                         // all three within the requested tolerance
};

ChoiReport validate_choi(const ChoiOperator& chi, double tol = kChoiTraceTol);

/// Throws InvalidChoi unless chi is Hermitian, PSD within kChoiPsdTol and
/// trace preserving within kChoiTraceTol.
void require_valid_choi(const ChoiOperator& chi);

DensityMatrix apply(const ChoiOperator& chi, const DensityMatrix& rho);

/// Re Tr[chi R]; throws if the imaginary part exceeds 1e-10.
double fidelity(const ChoiOperator& chi, const TargetOperator& r);

/// <out| E(|in><in|) |out> evaluated as <v|chi|v> with v = conj(in) (x) out.
double pointwise_fidelity(const ChoiOperator& chi, const StatePair& states);

/// One Kraus operator per Choi eigenvalue above cutoff * (largest eigenvalue).
/// Eigenvector phases are fixed so the largest-magnitude entry is real positive.
KrausSet kraus_from_choi(const ChoiOperator& chi, double cutoff = kKrausCutoff);

ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& rho);

/// sum_l A_l^dagger A_l
ComplexMatrix kraus_completeness(const KrausSet& kraus);

/// Stinespring isometry, (C * dim_out) x dim_in with column i holding A_l[k, i]
/// at row k * C + l.
ComplexMatrix dilation(const KrausSet& kraus);

}  // namespace cpopt
