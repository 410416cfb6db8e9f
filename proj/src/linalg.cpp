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

#include "cpopt/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "cpopt/error.hpp"

namespace cpopt {

namespace {

void require_bipartite(const ComplexMatrix& m, std::size_t d1, std::size_t d2, const char* op) {
    if (!m.is_square() || m.rows() != d1 * d2 || d1 == 0 || d2 == 0) {
        throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": matrix is " + std::to_string(m.rows()) +
                                                      "x" + std::to_string(m.cols()) + ", factors " +
                                                      std::to_string(d1) + "*" + std::to_string(d2));
    }
}

}  // namespace

EigenDecomposition herm_eig(const ComplexMatrix& m, double hermiticity_tol) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquare, "herm_eig on non-square matrix");
    const double dev = hermiticity_deviation(m);
    const double scale = std::max(1.0, m.frobenius_norm());
    if (dev > hermiticity_tol * scale) {
        throw Error(ErrorKind::NotHermitian, "||m - m^dagger||_F = " + std::to_string(dev));
    }

    const std::size_t n = m.rows();
    Eigen::MatrixXcd h(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver");

    // Eigen returns ascending order.
    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = n - 1 - j;
        out.eigenvalues[j] = solver.eigenvalues()(static_cast<Eigen::Index>(src));
        for (std::size_t r = 0; r < n; ++r) {
            out.eigenvectors(r, j) = solver.eigenvectors()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(src));
        }
    }
    return out;
}

ComplexMatrix spectral_compose(const ComplexMatrix& eigenvectors, const std::vector<double>& values) {
    if (eigenvectors.cols() != values.size()) throw Error(ErrorKind::DimensionMismatch, "spectral_compose");
    ComplexMatrix scaled(eigenvectors);
    for (std::size_t r = 0; r < scaled.rows(); ++r)
        for (std::size_t c = 0; c < scaled.cols(); ++c) scaled(r, c) *= values[c];
    return (scaled * eigenvectors.adjoint()).hermitian_part();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double clip_tol) {
    EigenDecomposition eig = herm_eig(m);
    for (double& w : eig.eigenvalues) {
        if (w < -clip_tol) throw Error(ErrorKind::NegativeEigenvalue, "eigenvalue " + std::to_string(w));
        w = w > 0.0 ? std::sqrt(w) : 0.0;
    }
    return spectral_compose(eig.eigenvectors, eig.eigenvalues);
}

ComplexMatrix reg_inverse(const ComplexMatrix& m, double rel_cutoff) {
    EigenDecomposition eig = herm_eig(m);
    const double w_max = eig.eigenvalues.front();
    if (!(w_max > 0.0)) throw Error(ErrorKind::AllZero, "largest eigenvalue " + std::to_string(w_max));
    for (double& w : eig.eigenvalues) w = w >= rel_cutoff * w_max ? 1.0 / w : 0.0;
    return spectral_compose(eig.eigenvectors, eig.eigenvalues);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const cplx s = a(ia, ja);
            if (s == cplx{}) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
    return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t d1, std::size_t d2, Factor keep) {
    require_bipartite(m, d1, d2, "partial_trace");
    if (keep == Factor::First) {
        ComplexMatrix out(d1, d1);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j)
                for (std::size_t k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
        return out;
    }
    ComplexMatrix out(d2, d2);
    for (std::size_t k = 0; k < d2; ++k)
        for (std::size_t l = 0; l < d2; ++l)
            for (std::size_t i = 0; i < d1; ++i) out(k, l) += m(i * d2 + k, i * d2 + l);
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t d1, std::size_t d2, Factor which) {
    require_bipartite(m, d1, d2, "partial_transpose");
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t k = 0; k < d2; ++k)
            for (std::size_t j = 0; j < d1; ++j)
                for (std::size_t l = 0; l < d2; ++l) {
                    out(i * d2 + k, j * d2 + l) =
                        which == Factor::First ? m(j * d2 + k, i * d2 + l) : m(i * d2 + l, j * d2 + k);
                }
    return out;
}

double min_eigenvalue(const ComplexMatrix& m, double hermiticity_tol) {
    return herm_eig(m, hermiticity_tol).eigenvalues.back();
}

double max_eigenvalue(const ComplexMatrix& m, double hermiticity_tol) {
    return herm_eig(m, hermiticity_tol).eigenvalues.front();
}

}  // namespace cpopt
