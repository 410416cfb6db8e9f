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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cpopt/channel.hpp"
#include "cpopt/solver.hpp"
#include "cpopt/target.hpp"

namespace cpopt {

struct McFidelity {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

/// Sample-mean fidelity over uniformly drawn Bloch-sphere inputs. Uses the
/// same counter-based stream as build_r_montecarlo.
McFidelity mc_fidelity(const ChoiOperator& chi, const StateFamily& family, std::size_t samples, std::uint64_t seed);

struct CurvePoint {
    double theta = 0.0;
    double fidelity = 0.0;
};

/// phi-averaged fidelity on a uniform theta grid over [0, pi].
std::vector<CurvePoint> state_fidelity_curve(const ChoiOperator& chi, const StateFamily& family,
                                             std::size_t theta_steps);

struct PptResult {
    double min_pt_eigenvalue = 0.0;
    bool ppt = false;
    /// PPT certifies separability only for 2x2 and 2x3 systems.
    bool conclusive = false;
};

inline constexpr double kPptTol = 1e-10;

PptResult ppt_check(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b);

struct DampingFit {
    double beta = 0.0;
    double residual = 0.0;  // ||chi - damping_channel(beta)||_F
};

/// Reads cos(beta) off the |0><1| coherence of a qubit channel.
DampingFit fit_damping(const ChoiOperator& chi);

struct ScanRow {
    double alpha = 0.0;
    double beta_opt = 0.0;
    double beta_residual = 0.0;
    double F_solver = 0.0;
    double F_closed = 0.0;
    double F_bound = 0.0;
    int iterations = 0;
    bool converged = false;
    bool ok = true;
    std::string note;
};

std::vector<double> uniform_grid(double from, double to, std::size_t steps);

/// One solver run per alpha, spread over `jobs` worker threads (0 = hardware
/// concurrency). Rows come back in input order whatever the job count.
std::vector<ScanRow> alpha_scan(std::span<const double> alphas, const SolverOptions& opts, unsigned jobs = 0);

/// Locates the alpha where the solver's optimal channel leaves the identity,
/// by quadratic extrapolation of 1 - cos(beta) from solved points above it.
double estimate_shifter_threshold(const SolverOptions& opts);

void write_scan_csv(std::ostream& os, std::span<const ScanRow> rows);
void write_curve_csv(std::ostream& os, std::span<const CurvePoint> points);

struct ReferenceRow {
    std::string quantity;
    double reference = 0.0;
    double computed = 0.0;
    double abs_diff = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Every headline value of the built-in models next to what the solver
/// reproduces from scratch.
std::vector<ReferenceRow> reference_table();

void write_reference_table(std::ostream& os, std::span<const ReferenceRow> rows);

}  // namespace cpopt
