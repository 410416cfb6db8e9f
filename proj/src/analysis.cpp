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

#include "cpopt/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <thread>

#include "cpopt/error.hpp"
#include "cpopt/linalg.hpp"
#include "cpopt/models.hpp"

namespace cpopt {

namespace {

using std::numbers::pi;

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 256) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t mid = v.size() / 2;
    return pairwise_sum(v.first(mid)) + pairwise_sum(v.subspan(mid));
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

// Real roots of the parabola through three points, nearest to `near`.
double parabola_root(const double (&x)[3], const double (&y)[3], double near) {
    const double d01 = (y[1] - y[0]) / (x[1] - x[0]);
    const double d12 = (y[2] - y[1]) / (x[2] - x[1]);
    const double a = (d12 - d01) / (x[2] - x[0]);
    const double b = d01 - a * (x[0] + x[1]);
    const double c = y[0] - a * x[0] * x[0] - b * x[0];
    if (std::abs(a) < 1e-300) return -c / b;
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) throw Error(ErrorKind::ConvergenceFailure, "threshold extrapolation has no real root");
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    const double r1 = q / a;
    const double r2 = c / q;
    return std::abs(r1 - near) < std::abs(r2 - near) ? r1 : r2;
}

double damping_gap(double alpha, const SolverOptions& opts) {
    const SolverResult res = solve(analytic_r(ModelSpec::shifter(alpha)), opts);
    return 1.0 - std::cos(fit_damping(res.chi).beta);
}

ReferenceRow make_row(std::string quantity, double reference, double computed, double tol) {
    const double diff = std::abs(reference - computed);
    return {std::move(quantity), reference, computed, diff, tol, diff <= tol};
}

}  // namespace

McFidelity mc_fidelity(const ChoiOperator& chi, const StateFamily& family, std::size_t samples, std::uint64_t seed) {
    if (samples < 2) throw Error(ErrorKind::InvalidArgument, "mc_fidelity needs at least two samples");
    if (chi.dim_in() != family.dim_in || chi.dim_out() != family.dim_out) {
        throw Error(ErrorKind::DimensionMismatch, "mc_fidelity: channel and family dimensions differ");
    }
    require_valid_choi(chi);
    std::vector<double> f(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto [theta, phi] = sphere_sample(seed, i);
        f[i] = pointwise_fidelity(chi, family.evaluate(theta, phi));
    }
    const double n = static_cast<double>(samples);
    const double mean = pairwise_sum(f) / n;
    for (double& x : f) x = (x - mean) * (x - mean);
    const double var = pairwise_sum(f) / (n - 1.0);
    return {mean, std::sqrt(var / n), samples};
}

std::vector<CurvePoint> state_fidelity_curve(const ChoiOperator& chi, const StateFamily& family,
                                             std::size_t theta_steps) {
    if (theta_steps < 2) throw Error(ErrorKind::InvalidArgument, "theta_steps must be >= 2");
    if (chi.dim_in() != family.dim_in || chi.dim_out() != family.dim_out) {
        throw Error(ErrorKind::DimensionMismatch, "state_fidelity_curve: channel and family dimensions differ");
    }
    require_valid_choi(chi);
    const int phi_points = family.polynomial_degree + 2;
    std::vector<CurvePoint> out;
    out.reserve(theta_steps);
    for (std::size_t k = 0; k < theta_steps; ++k) {
        const double theta = pi * static_cast<double>(k) / static_cast<double>(theta_steps - 1);
        double acc = 0.0;
        for (int m = 0; m < phi_points; ++m) {
            acc += pointwise_fidelity(chi, family.evaluate(theta, 2.0 * pi * m / phi_points));
        }
        out.push_back({theta, acc / phi_points});
    }
    return out;
}

PptResult ppt_check(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b) {
    if (dim_a * dim_b != rho.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "ppt_check: " + std::to_string(dim_a) + "*" + std::to_string(dim_b) +
                                                      " != " + std::to_string(rho.dim()));
    }
    const ComplexMatrix pt = partial_transpose(rho.matrix, dim_a, dim_b, Factor::Second);
    PptResult res;
    res.min_pt_eigenvalue = min_eigenvalue(pt);
    res.ppt = res.min_pt_eigenvalue >= -kPptTol;
    res.conclusive = (dim_a == 2 && (dim_b == 2 || dim_b == 3)) || (dim_a == 3 && dim_b == 2);
    return res;
}

DampingFit fit_damping(const ChoiOperator& chi) {
    if (chi.dim_in() != 2 || chi.dim_out() != 2) throw Error(ErrorKind::DimensionMismatch, "fit_damping needs a qubit channel");
    // chi(|00>, |11>) = <0| E(|0><1|) |1> = cos(beta)
    const double c = std::clamp(chi.matrix()(0, 3).real(), -1.0, 1.0);
    const double beta = std::acos(c);
    return {beta, frobenius_diff(chi.matrix(), damping_channel(beta).matrix())};
}

std::vector<double> uniform_grid(double from, double to, std::size_t steps) {
    if (steps < 1) throw Error(ErrorKind::InvalidArgument, "grid needs at least one point");
    if (steps == 1) return {from};
    std::vector<double> g(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        g[k] = from + (to - from) * static_cast<double>(k) / static_cast<double>(steps - 1);
    }
    g.back() = to;
    return g;
}

std::vector<ScanRow> alpha_scan(std::span<const double> alphas, const SolverOptions& opts, unsigned jobs) {
    std::vector<ScanRow> rows(alphas.size());
    auto run_row = [&](std::size_t i) {
        ScanRow& row = rows[i];
        row.alpha = alphas[i];
        try {
            const ModelSpec spec = ModelSpec::shifter(alphas[i]);
            const TargetOperator r = analytic_r(spec);
            const SolverResult res = solve(r, opts);
            const ShifterClosedForms cf = shifter_closed_forms(alphas[i]);
            const DampingFit fit = fit_damping(res.chi);
            row.beta_opt = fit.beta;
            row.beta_residual = fit.residual;
            row.F_solver = res.fidelity;
            row.F_closed = cf.F_alpha;
            row.F_bound = res.bound;
            row.iterations = res.iterations;
            row.converged = res.converged;
            if (cf.boundary) row.note = "alpha=pi: closed form uses damping angle pi";
            else if (!res.converged) row.note = "not converged";
        } catch (const Error& e) {
            row.ok = false;
            row.note = e.what();
            row.beta_opt = row.F_solver = row.F_closed = row.F_bound = std::nan("");
        }
    };

    unsigned workers = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(alphas.size(), 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < alphas.size(); ++i) run_row(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < alphas.size(); i = next++) run_row(i);
        });
    }
    pool.clear();
    return rows;
}

double estimate_shifter_threshold(const SolverOptions& opts) {
    // Coarse pass: first grid point where the optimum is visibly damped.
    const std::vector<double> grid = uniform_grid(0.0, pi / 2.0, 51);
    std::size_t first = 0;
    while (first + 2 < grid.size() && damping_gap(grid[first], opts) < 1e-3) ++first;
    if (first == 0 || first + 2 >= grid.size()) throw Error(ErrorKind::ConvergenceFailure, "no damping onset found");

    double x[3] = {grid[first], grid[first + 1], grid[first + 2]};
    double y[3];
    for (int i = 0; i < 3; ++i) y[i] = damping_gap(x[i], opts);
    double estimate = parabola_root(x, y, x[0]);

    // Refine with points hugging the estimate from above.
    for (double h : {0.01, 0.004}) {
        for (int i = 0; i < 3; ++i) {
            x[i] = estimate + h * (i + 1);
            y[i] = damping_gap(x[i], opts);
        }
        estimate = parabola_root(x, y, x[0]);
    }
    return estimate;
}

void write_scan_csv(std::ostream& os, std::span<const ScanRow> rows) {
    os << "alpha,beta_opt,F_solver,F_closed,F_bound\n";
    for (const ScanRow& r : rows) {
        os << num(r.alpha) << ',' << num(r.beta_opt) << ',' << num(r.F_solver) << ',' << num(r.F_closed) << ','
           << num(r.F_bound) << '\n';
    }
}

void write_curve_csv(std::ostream& os, std::span<const CurvePoint> points) {
    os << "theta,F\n";
    for (const CurvePoint& p : points) os << num(p.theta) << ',' << num(p.fidelity) << '\n';
}

std::vector<ReferenceRow> reference_table() {
    std::vector<ReferenceRow> rows;
    const SolverOptions defaults;

    rows.push_back(make_row("unot N=1 fidelity", 2.0 / 3.0, solve(analytic_r(ModelSpec::unot(1)), defaults).fidelity, 1e-9));
    for (int n = 1; n <= 5; ++n) {
        rows.push_back(make_row("cloner 1->" + std::to_string(n) + " fidelity", 2.0 / (n + 1.0),
                                solve(analytic_r(ModelSpec::cloner(n)), defaults).fidelity, 1e-9));
    }

    const ModelSpec ent_a = ModelSpec::entangler_a();
    const SolverResult ent = solve(analytic_r(ent_a), defaults);
    rows.push_back(make_row("entangler-a mean fidelity", entangler_a_mean_fidelity(), ent.fidelity, 1e-8));
    const std::vector<CurvePoint> curve = state_fidelity_curve(ent.chi, model_family(ent_a), 2001);
    const auto lowest = std::min_element(curve.begin(), curve.end(),
                                         [](const CurvePoint& a, const CurvePoint& b) { return a.fidelity < b.fidelity; });
    rows.push_back(make_row("entangler-a min state fidelity", entangler_a_min_fidelity(), lowest->fidelity, 1e-4));

    rows.push_back(make_row("entangler-b fidelity", 1.0 / 3.0,
                            solve(analytic_r(ModelSpec::entangler_b()), defaults).fidelity, 1e-9));
    rows.push_back(make_row("shifter F(pi/2)", (4.0 + pi) / 8.0,
                            solve(analytic_r(ModelSpec::shifter(pi / 2.0)), defaults).fidelity, 1e-9));

    SolverOptions tight;
    tight.max_iters = 200000;
    tight.fid_tol = 1e-15;
    tight.chi_tol = 1e-13;
    rows.push_back(make_row("shifter threshold alpha0", shifter_threshold(), estimate_shifter_threshold(tight), 1e-4));
    return rows;
}

void write_reference_table(std::ostream& os, std::span<const ReferenceRow> rows) {
    char line[200];
    std::snprintf(line, sizeof line, "%-34s %18s %18s %12s  %s\n", "quantity", "reference", "solver", "abs_diff", "status");
    os << line;
    for (const ReferenceRow& r : rows) {
        std::snprintf(line, sizeof line, "%-34s %18.12f %18.12f %12.3e  %s\n", r.quantity.c_str(), r.reference,
                      r.computed, r.abs_diff, r.pass ? "ok" : "FAIL");
        os << line;
    }
}

}  // namespace cpopt
