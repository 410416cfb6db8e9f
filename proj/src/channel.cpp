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

#include "cpopt/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cpopt/error.hpp"
#include "cpopt/linalg.hpp"

namespace cpopt {

namespace {

double trace_deviation(const ComplexMatrix& chi, std::size_t dim_in, std::size_t dim_out) {
    const ComplexMatrix reduced = partial_trace(chi, dim_in, dim_out, Factor::First);
    return max_abs_diff(reduced, ComplexMatrix::identity(dim_in));
}

}  // namespace

ChoiOperator::ChoiOperator(std::size_t dim_in, std::size_t dim_out, ComplexMatrix matrix)
    : dim_in_(dim_in), dim_out_(dim_out), matrix_(std::move(matrix)) {
    if (dim_in == 0 || dim_out == 0 || !matrix_.is_square() || matrix_.rows() != dim_in * dim_out) {
        throw Error(ErrorKind::DimensionMismatch, "Choi matrix must be (dim_in*dim_out)^2, got " +
                                                      std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
    }
}

ChoiOperator ChoiOperator::identity(std::size_t dim) {
    ComplexVector phi(dim * dim);
    for (std::size_t j = 0; j < dim; ++j) phi[j * dim + j] = 1.0;
    return ChoiOperator(dim, dim, ComplexMatrix::projector(phi));
}

ChoiOperator ChoiOperator::max_mixed(std::size_t dim_in, std::size_t dim_out) {
    ComplexMatrix m = ComplexMatrix::identity(dim_in * dim_out);
    m *= 1.0 / static_cast<double>(dim_out);
    return ChoiOperator(dim_in, dim_out, std::move(m));
}

ChoiOperator ChoiOperator::constant_output(std::size_t dim_in, const ComplexMatrix& rho_out) {
    return ChoiOperator(dim_in, rho_out.rows(), kron(ComplexMatrix::identity(dim_in), rho_out));
}

ChoiOperator ChoiOperator::from_action(std::size_t dim_in, std::size_t dim_out,
                                       const std::function<ComplexMatrix(std::size_t, std::size_t)>& action) {
    ComplexMatrix chi(dim_in * dim_out, dim_in * dim_out);
    for (std::size_t i = 0; i < dim_in; ++i)
        for (std::size_t j = 0; j < dim_in; ++j) {
            const ComplexMatrix block = action(i, j);
            if (block.rows() != dim_out || block.cols() != dim_out) {
                throw Error(ErrorKind::DimensionMismatch, "from_action: block has wrong shape");
            }
            for (std::size_t k = 0; k < dim_out; ++k)
                for (std::size_t l = 0; l < dim_out; ++l) chi(i * dim_out + k, j * dim_out + l) = block(k, l);
        }
    return ChoiOperator(dim_in, dim_out, std::move(chi));
}

ChoiOperator ChoiOperator::from_kraus(const KrausSet& kraus) {
    const std::size_t n = kraus.dim_in * kraus.dim_out;
    ComplexMatrix chi(n, n);
    for (const ComplexMatrix& a : kraus.operators) {
        if (a.rows() != kraus.dim_out || a.cols() != kraus.dim_in) {
            throw Error(ErrorKind::DimensionMismatch, "Kraus operator shape");
        }
        ComplexVector v(n);
        for (std::size_t i = 0; i < kraus.dim_in; ++i)
            for (std::size_t k = 0; k < kraus.dim_out; ++k) v[i * kraus.dim_out + k] = a(k, i);
        chi += ComplexMatrix::projector(v);
    }
    return ChoiOperator(kraus.dim_in, kraus.dim_out, std::move(chi));
}

ChoiOperator ChoiOperator::from_isometry(const ComplexMatrix& v) {
    KrausSet k{v.cols(), v.rows(), {v}, {static_cast<double>(v.cols())}};
    return from_kraus(k);
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) { return {ComplexMatrix::projector(psi)}; }

DensityMatrix DensityMatrix::max_mixed(std::size_t dim) {
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return {std::move(m)};
}

ChoiReport validate_choi(const ChoiOperator& chi, double tol) {
    ChoiReport rep;
    const ComplexMatrix& m = chi.matrix();
    rep.hermiticity_deviation = hermiticity_deviation(m);
    rep.min_eigenvalue = herm_eig(m, std::numeric_limits<double>::infinity()).eigenvalues.back();
    rep.trace_preservation_deviation = trace_deviation(m, chi.dim_in(), chi.dim_out());
    rep.valid = rep.hermiticity_deviation <= tol * std::max(1.0, m.frobenius_norm()) && rep.min_eigenvalue >= -tol &&
                rep.trace_preservation_deviation <= tol;
    return rep;
}

void require_valid_choi(const ChoiOperator& chi) {
    const ChoiReport rep = validate_choi(chi, kChoiTraceTol);
    if (rep.hermiticity_deviation > kChoiPsdTol * std::max(1.0, chi.matrix().frobenius_norm())) {
        throw Error(ErrorKind::InvalidChoi, "not Hermitian, deviation " + std::to_string(rep.hermiticity_deviation));
    }
    if (rep.min_eigenvalue < -kChoiPsdTol) {
        throw Error(ErrorKind::InvalidChoi, "not positive, min eigenvalue " + std::to_string(rep.min_eigenvalue));
    }
    if (rep.trace_preservation_deviation > kChoiTraceTol) {
        throw Error(ErrorKind::InvalidChoi,
                    "not trace preserving, deviation " + std::to_string(rep.trace_preservation_deviation));
    }
}

DensityMatrix apply(const ChoiOperator& chi, const DensityMatrix& rho) {
    if (rho.dim() != chi.dim_in() || !rho.matrix.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, "apply: state dimension " + std::to_string(rho.dim()) +
                                                      ", channel input " + std::to_string(chi.dim_in()));
    }
    require_valid_choi(chi);
    const ComplexMatrix lifted = kron(rho.matrix.transpose(), ComplexMatrix::identity(chi.dim_out()));
    const ComplexMatrix out = partial_trace(chi.matrix() * lifted, chi.dim_in(), chi.dim_out(), Factor::Second);
    return {out.hermitian_part()};
}

double fidelity(const ChoiOperator& chi, const TargetOperator& r) {
    if (chi.dim_in() != r.dim_in() || chi.dim_out() != r.dim_out()) {
        throw Error(ErrorKind::DimensionMismatch, "fidelity: channel and target dimensions differ");
    }
    const cplx f = trace_product(chi.matrix(), r.matrix());
    if (std::abs(f.imag()) > 1e-10) {
        throw Error(ErrorKind::NotHermitian, "Tr[chi R] has imaginary part " + std::to_string(f.imag()));
    }
    return f.real();
}

double pointwise_fidelity(const ChoiOperator& chi, const StatePair& states) {
    if (states.in.size() != chi.dim_in() || states.out.size() != chi.dim_out()) {
        throw Error(ErrorKind::DimensionMismatch, "pointwise_fidelity");
    }
    const ComplexVector v = integrand_vector(states);
    return inner(v, matvec(chi.matrix(), v)).real();
}

KrausSet kraus_from_choi(const ChoiOperator& chi, double cutoff) {
    require_valid_choi(chi);
    const EigenDecomposition eig = herm_eig(chi.matrix());
    const double r_max = eig.eigenvalues.front();
    KrausSet out{chi.dim_in(), chi.dim_out(), {}, {}};
    const std::size_t n = chi.matrix().rows();
    for (std::size_t l = 0; l < n; ++l) {
        const double r = eig.eigenvalues[l];
        if (!(r > cutoff * r_max)) break;

        std::size_t pivot = 0;
        for (std::size_t row = 1; row < n; ++row) {
            if (std::abs(eig.eigenvectors(row, l)) > std::abs(eig.eigenvectors(pivot, l)) + 1e-12) pivot = row;
        }
        const cplx p = eig.eigenvectors(pivot, l);
        const cplx phase = std::conj(p) / std::abs(p);

        ComplexMatrix a(chi.dim_out(), chi.dim_in());
        const double scale = std::sqrt(r);
        for (std::size_t i = 0; i < chi.dim_in(); ++i)
            for (std::size_t k = 0; k < chi.dim_out(); ++k)
                a(k, i) = scale * phase * eig.eigenvectors(i * chi.dim_out() + k, l);
        out.operators.push_back(std::move(a));
        out.weights.push_back(r);
    }
    return out;
}

ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& rho) {
    if (rho.rows() != kraus.dim_in || !rho.is_square()) throw Error(ErrorKind::DimensionMismatch, "apply_kraus");
    ComplexMatrix out(kraus.dim_out, kraus.dim_out);
    for (const ComplexMatrix& a : kraus.operators) out += a * rho * a.adjoint();
    return out;
}

ComplexMatrix kraus_completeness(const KrausSet& kraus) {
    ComplexMatrix sum(kraus.dim_in, kraus.dim_in);
    for (const ComplexMatrix& a : kraus.operators) sum += a.adjoint() * a;
    return sum;
}

ComplexMatrix dilation(const KrausSet& kraus) {
    if (kraus.operators.empty()) throw Error(ErrorKind::TraceConditionViolated, "empty Kraus set");
    const double dev = max_abs_diff(kraus_completeness(kraus), ComplexMatrix::identity(kraus.dim_in));
    if (dev > kChoiTraceTol) {
        throw Error(ErrorKind::TraceConditionViolated, "sum A^dagger A deviates from identity by " + std::to_string(dev));
    }
    const std::size_t c = kraus.count();
    ComplexMatrix v(c * kraus.dim_out, kraus.dim_in);
    for (std::size_t l = 0; l < c; ++l)
        for (std::size_t k = 0; k < kraus.dim_out; ++k)
            for (std::size_t i = 0; i < kraus.dim_in; ++i) v(k * c + l, i) = kraus.operators[l](k, i);
    return v;
}

}  // namespace cpopt
