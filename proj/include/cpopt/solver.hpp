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

// Fixed-point iteration for the fidelity-optimal trace-preserving channel.
//
// One step maps chi to
//     M       = R chi R
//     lambda  = (Tr_K M)^{1/2}           (positive square root)
//     chi'    = (lambda^{-1} (x) 1) M (lambda^{-1} (x) 1)
// which is positive and satisfies Tr_K chi' = 1 whenever lambda is
// invertible on the support of Tr_K M.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpopt/channel.hpp"
#include "cpopt/target.hpp"

namespace cpopt {

struct SolverInit {
    enum class Kind { MaxMix, Random, Explicit };

    Kind kind = Kind::MaxMix;
    std::uint64_t seed = 0;
    std::optional<ChoiOperator> chi;

    static SolverInit max_mixed() { return {}; }
    static SolverInit random(std::uint64_t seed) { return {Kind::Random, seed, std::nullopt}; }
    static SolverInit from(ChoiOperator chi) { return {Kind::Explicit, 0, std::move(chi)}; }
};

struct SolverOptions {
    int max_iters = 10000;
    double fid_tol = 1e-12;   // stop when |F_{k+1} - F_k| < fid_tol
    double chi_tol = 1e-10;   // or when ||chi_{k+1} - chi_k||_F < chi_tol
    double pinv_cutoff = 1e-12;
    SolverInit init;
};

struct SolverResult {
    ChoiOperator chi;
    double fidelity = 0.0;
    double bound = 0.0;
    int iterations = 0;
    bool converged = false;
    std::string stop_reason;              // "fidelity", "chi" or "max_iters"
    std::vector<double> fidelity_trace;   // F of the start point, then after every step
    std::vector<double> lambda_eigenvalues;  // spectrum of lambda at the returned chi
    double lambda_min_gap = 0.0;          // small gaps flag a degenerate optimum
};

ChoiOperator iterate_once(const ChoiOperator& chi, const TargetOperator& r, double pinv_cutoff = 1e-12);

/// W W^dagger with complex Gaussian W, rescaled onto Tr_K chi = 1.
ChoiOperator random_choi(std::size_t dim_in, std::size_t dim_out, std::uint64_t seed);

SolverResult solve(const TargetOperator& r, const SolverOptions& opts = {});

}  // namespace cpopt
