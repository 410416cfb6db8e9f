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

#include "cpopt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cpopt/error.hpp"
#include "cpopt/linalg.hpp"
#include "cpopt/rng.hpp"

namespace cpopt {

namespace {

// (lambda^{-1} (x) 1) m (lambda^{-1} (x) 1) where lambda = (Tr_K m)^{1/2}.
ComplexMatrix normalize_onto_constraint(const ComplexMatrix& m, std::size_t dim_in, std::size_t dim_out,
                                        double pinv_cutoff) {
    const ComplexMatrix lambda = psd_sqrt(partial_trace(m, dim_in, dim_out, Factor::First).hermitian_part());
    ComplexMatrix lambda_inv(dim_in, dim_in);
    try {
        lambda_inv = reg_inverse(lambda, pinv_cutoff);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::AllZero) throw Error(ErrorKind::SingularLambda, "Tr_K[R chi R] vanishes");
        throw;
    }
    const ComplexMatrix big = kron(lambda_inv, ComplexMatrix::identity(dim_out));
    return (big * m * big).hermitian_part();
}

void check_options(const SolverOptions& opts) {
    if (opts.max_iters < 1) throw Error(ErrorKind::InvalidArgument, "max_iters must be >= 1");
    if (!(opts.fid_tol > 0.0) || !(opts.chi_tol > 0.0) || !(opts.pinv_cutoff > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "solver tolerances must be positive");
    }
}

ChoiOperator initial_point(const TargetOperator& r, const SolverInit& init) {
    switch (init.kind) {
        case SolverInit::Kind::MaxMix:
            return ChoiOperator::max_mixed(r.dim_in(), r.dim_out());
        case SolverInit::Kind::Random:
            return random_choi(r.dim_in(), r.dim_out(), init.seed);
        case SolverInit::Kind::Explicit:
            if (!init.chi || init.chi->dim_in() != r.dim_in() || init.chi->dim_out() != r.dim_out()) {
                throw Error(ErrorKind::DimensionMismatch, "initial Choi operator does not match the target");
            }
            require_valid_choi(*init.chi);
            return *init.chi;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown init kind");
}

}  // namespace

ChoiOperator iterate_once(const ChoiOperator& chi, const TargetOperator& r, double pinv_cutoff) {
    if (chi.dim_in() != r.dim_in() || chi.dim_out() != r.dim_out()) {
        throw Error(ErrorKind::DimensionMismatch, "iterate_once: channel and target dimensions differ");
    }
    const ComplexMatrix m = r.matrix() * chi.matrix() * r.matrix();
    return ChoiOperator(chi.dim_in(), chi.dim_out(), normalize_onto_constraint(m, chi.dim_in(), chi.dim_out(), pinv_cutoff));
}

ChoiOperator random_choi(std::size_t dim_in, std::size_t dim_out, std::uint64_t seed) {
    const std::size_t n = dim_in * dim_out;
    CounterRng rng(seed);
    ComplexMatrix w(n, n);
    for (cplx& z : w.data()) {
        const double re = rng.normal();
        z = {re, rng.normal()};
    }
    const ComplexMatrix m = (w * w.adjoint()).hermitian_part();
    return ChoiOperator(dim_in, dim_out, normalize_onto_constraint(m, dim_in, dim_out, kPinvCutoff));
}

SolverResult solve(const TargetOperator& r, const SolverOptions& opts) {
    check_options(opts);
    ChoiOperator chi = initial_point(r, opts.init);

    SolverResult res{chi, fidelity(chi, r), fidelity_bound(r), 0, false, "max_iters", {}, {}, 0.0};
    res.fidelity_trace.reserve(static_cast<std::size_t>(std::min(opts.max_iters, 4096)) + 1);
    res.fidelity_trace.push_back(res.fidelity);

    for (int k = 1; k <= opts.max_iters; ++k) {
        ChoiOperator next = iterate_once(chi, r, opts.pinv_cutoff);
        const double f = fidelity(next, r);
        const double df = std::abs(f - res.fidelity);
        const double dchi = frobenius_diff(next.matrix(), chi.matrix());
        chi = std::move(next);
        res.fidelity = f;
        res.iterations = k;
        res.fidelity_trace.push_back(f);
        if (df < opts.fid_tol) {
            res.converged = true;
            res.stop_reason = "fidelity";
            break;
        }
        if (dchi < opts.chi_tol) {
            res.converged = true;
            res.stop_reason = "chi";
            break;
        }
    }
    res.chi = chi;

    const ComplexMatrix m = r.matrix() * chi.matrix() * r.matrix();
    const ComplexMatrix lambda = psd_sqrt(partial_trace(m, r.dim_in(), r.dim_out(), Factor::First).hermitian_part());
    res.lambda_eigenvalues = herm_eig(lambda).eigenvalues;
    res.lambda_min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < res.lambda_eigenvalues.size(); ++i) {
        res.lambda_min_gap = std::min(res.lambda_min_gap, res.lambda_eigenvalues[i - 1] - res.lambda_eigenvalues[i]);
    }
    if (res.lambda_eigenvalues.size() < 2) res.lambda_min_gap = 0.0;
    return res;
}

}  // namespace cpopt
