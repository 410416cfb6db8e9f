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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "../properties.hpp"
#include "cpopt/analysis.hpp"
#include "cpopt/channel.hpp"
#include "cpopt/linalg.hpp"
#include "cpopt/models.hpp"
#include "cpopt/solver.hpp"
#include "cpopt/target.hpp"

using namespace cpopt;
using std::numbers::pi;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

std::vector<ModelSpec> every_model() {
    std::vector<ModelSpec> v;
    for (int n = 1; n <= 5; ++n) v.push_back(ModelSpec::unot(n));
    for (int n = 1; n <= 5; ++n) v.push_back(ModelSpec::cloner(n));
    v.push_back(ModelSpec::entangler_a());
    v.push_back(ModelSpec::entangler_b());
    for (double a : {0.0, 0.5, pi / 2, 2.2, pi}) v.push_back(ModelSpec::shifter(a));
    v.push_back(ModelSpec::identity());
    return v;
}

Verdict unot_bound() {
    Verdict v;
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
        worst = std::max(worst, std::abs(fidelity_bound(analytic_r(ModelSpec::unot(n))) - (n + 1.0) / (n + 2.0)));
    }
    v.require(worst <= 1e-12, "bound off by " + sci(worst));
    v.detail = v.pass ? "N=1..5, max |bound - (N+1)/(N+2)| = " + sci(worst) : v.detail;
    return v;
}

Verdict unot_solve() {
    Verdict v;
    const TargetOperator r = analytic_r(ModelSpec::unot(1));
    double worst = 0.0;
    bool all_converged = true;
    for (int s = 0; s <= 10; ++s) {
        SolverOptions opts;
        if (s > 0) opts.init = SolverInit::random(static_cast<std::uint64_t>(s));
        const SolverResult res = solve(r, opts);
        all_converged = all_converged && res.converged;
        worst = std::max(worst, std::abs(res.fidelity - 2.0 / 3.0));
    }
    v.require(all_converged, "a run did not converge");
    v.require(worst <= 1e-9, "|F - 2/3| = " + sci(worst));

    const ChoiOperator one = iterate_once(ChoiOperator::max_mixed(2, 2), r);
    double step_dev = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            ComplexMatrix expect(2, 2);
            if (i == j) expect = ComplexMatrix::identity(2) * cplx(2.0 / 3.0);
            expect(i, j) -= 1.0 / 3.0;
            step_dev = std::max(step_dev, max_abs_diff(testing::unit_image(one, i, j), expect));
        }
    }
    v.require(step_dev <= 1e-12, "first step differs from U-NOT by " + sci(step_dev));
    if (v.pass) v.detail = "maxmix + 10 seeds, max |F - 2/3| = " + sci(worst) + ", one-step deviation " + sci(step_dev);
    return v;
}

Verdict cloner() {
    Verdict v;
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
        worst = std::max(worst, std::abs(fidelity_bound(analytic_r(ModelSpec::cloner(n))) - 2.0 / (n + 1.0)));
    }
    v.require(worst <= 1e-12, "bound off by " + sci(worst));
    const SolverResult res = solve(analytic_r(ModelSpec::cloner(2)));
    const double err = std::abs(res.fidelity - 2.0 / 3.0);
    v.require(err < 1e-10, "|F - 2/3| = " + sci(err));
    v.require(res.iterations <= 200, std::to_string(res.iterations) + " iterations");
    if (v.pass) v.detail = "bounds within " + sci(worst) + ", N=2 |F - 2/3| = " + sci(err) + " after " +
                           std::to_string(res.iterations) + " iterations";
    return v;
}

Verdict entangler_a() {
    Verdict v;
    const ModelSpec spec = ModelSpec::entangler_a();
    const TargetOperator r = analytic_r(spec);
    const SolverResult res = solve(r);
    const double ferr = std::abs(res.fidelity - entangler_a_mean_fidelity());
    v.require(res.converged, "not converged");
    v.require(ferr <= 1e-8, "|F - F_ent| = " + sci(ferr));

    const KrausSet k = kraus_from_choi(res.chi);
    v.require(k.count() == 1, std::to_string(k.count()) + " Kraus operators");
    double iso_dev = 1.0;
    if (k.count() >= 1) {
        const ComplexMatrix iso = entangler_a_isometry();
        const cplx overlap = hs_inner(iso, k.operators[0]);
        const cplx phase = overlap / std::abs(overlap);
        iso_dev = max_abs_diff(k.operators[0], iso * phase);
    }
    v.require(iso_dev <= 1e-8, "isometry deviation " + sci(iso_dev));

    const auto curve = state_fidelity_curve(res.chi, model_family(spec), 2001);
    double curve_dev = 0.0, lowest = 2.0;
    for (const CurvePoint& p : curve) {
        curve_dev = std::max(curve_dev, std::abs(p.fidelity - entangler_a_state_fidelity(p.theta)));
        lowest = std::min(lowest, p.fidelity);
    }
    const double min_err = std::abs(lowest - entangler_a_min_fidelity());
    v.require(curve_dev <= 1e-10, "curve deviation " + sci(curve_dev));
    v.require(min_err <= 1e-4, "curve minimum off by " + sci(min_err));
    const double berr = std::abs(fidelity_bound(r) - 1.0);
    v.require(berr <= 1e-12, "bound off by " + sci(berr));
    if (v.pass) {
        v.detail = "|F - F_ent| = " + sci(ferr) + ", isometry " + sci(iso_dev) + ", curve " + sci(curve_dev) +
                   ", min " + sci(min_err);
    }
    return v;
}

Verdict entangler_b() {
    Verdict v;
    const SolverResult res = solve(analytic_r(ModelSpec::entangler_b()));
    const double ferr = std::abs(res.fidelity - 1.0 / 3.0);
    v.require(res.converged, "not converged");
    v.require(ferr <= 1e-9, "|F - 1/3| = " + sci(ferr));
    const ComplexMatrix target = entangler_b_output_state();
    CounterRng rng(47);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const DensityMatrix rho = t % 2 == 0 ? DensityMatrix::pure(testing::random_unit_vector(2, rng))
                                             : testing::random_density(2, rng);
        worst = std::max(worst, max_abs_diff(apply(res.chi, rho).matrix, target));
    }
    v.require(worst <= 1e-8, "output deviation " + sci(worst));
    const PptResult ppt = ppt_check({target}, 2, 2);
    v.require(ppt.ppt && ppt.conclusive, "output state not PPT");
    if (v.pass) v.detail = "|F - 1/3| = " + sci(ferr) + ", output deviation " + sci(worst) + ", PPT min eig " +
                           sci(ppt.min_pt_eigenvalue);
    return v;
}

Verdict shifter_scan() {
    Verdict v;
    const std::vector<double> grid = uniform_grid(0.0, pi, 101);
    const double step = grid[1] - grid[0];
    const std::vector<ScanRow> rows = alpha_scan(grid, {});
    double closed_dev = 0.0, over_bound = -1.0;
    bool tight_elsewhere = false;
    for (const ScanRow& r : rows) {
        v.require(r.ok, "row alpha=" + std::to_string(r.alpha) + " failed: " + r.note);
        closed_dev = std::max(closed_dev, std::abs(r.F_solver - r.F_closed));
        over_bound = std::max(over_bound, r.F_solver - r.F_bound);
        if (std::abs(r.F_solver - r.F_bound) < 1e-6) {
            const double dist = std::min({r.alpha, std::abs(r.alpha - pi / 2), std::abs(pi - r.alpha)});
            if (dist > step * (1 + 1e-9)) tight_elsewhere = true;
        }
    }
    v.require(closed_dev <= 1e-6, "closed-form deviation " + sci(closed_dev));
    v.require(over_bound <= 1e-9, "bound exceeded by " + sci(over_bound));
    v.require(!tight_elsewhere, "bound reached away from 0, pi/2, pi");
    for (std::size_t k : {0u, 50u, 100u}) {
        v.require(std::abs(rows[k].F_solver - rows[k].F_bound) < 1e-6, "bound not reached at grid index " + std::to_string(k));
    }
    const double half_err = std::abs(rows[50].F_solver - (4 + pi) / 8);
    v.require(half_err <= 1e-9, "F(pi/2) off by " + sci(half_err));

    // Non-monotone on (alpha0, pi): some pair rises and some pair falls.
    bool rises = false, falls = false;
    const double a0 = shifter_threshold();
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (rows[i].alpha <= a0 || rows[i + 1].alpha >= pi) continue;
        rises = rises || rows[i + 1].F_solver > rows[i].F_solver + 1e-12;
        falls = falls || rows[i + 1].F_solver < rows[i].F_solver - 1e-12;
    }
    v.require(rises && falls, "no non-monotonicity witness in (alpha0, pi)");
    if (v.pass) v.detail = "max |F_solver - F_closed| = " + sci(closed_dev) + ", F(pi/2) off by " + sci(half_err);
    return v;
}

Verdict quadrature() {
    Verdict v;
    double quad_dev = 0.0, mc_dev = 0.0;
    for (const ModelSpec& spec : every_model()) {
        const TargetOperator exact = analytic_r(spec);
        const StateFamily fam = model_family(spec);
        quad_dev = std::max(quad_dev, max_abs_diff(build_r_quadrature(fam).matrix(), exact.matrix()));
        mc_dev = std::max(mc_dev, max_abs_diff(build_r_montecarlo(fam, 1000000, 2026).matrix(), exact.matrix()));
    }
    v.require(quad_dev < 1e-10, "quadrature deviation " + sci(quad_dev));
    v.require(mc_dev <= 5e-3, "Monte Carlo deviation " + sci(mc_dev));
    if (v.pass) v.detail = std::to_string(every_model().size()) + " models, quadrature " + sci(quad_dev) +
                           ", Monte Carlo (1e6) " + sci(mc_dev);
    return v;
}

Verdict properties() {
    Verdict v;
    const testing::PropertyWorst w = testing::run_property_trials(500, 20261016);
    v.require(testing::property_pass(w), "worst: trace " + sci(w.partial_trace) + " sqrt " + sci(w.sqrt_square) +
                                             " kraus " + sci(w.kraus_round_trip) + " dilation " + sci(w.dilation) +
                                             " iterate tp " + sci(w.iterate_trace) + " iterate eig " +
                                             sci(w.iterate_min_eig));
    if (v.pass) v.detail = "500 trials, worst Kraus round trip " + sci(w.kraus_round_trip) + ", iterate tp " +
                           sci(w.iterate_trace) + ", iterate min eig " + sci(w.iterate_min_eig);
    return v;
}

Verdict reference_values() {
    Verdict v;
    const std::vector<ReferenceRow> rows = reference_table();
    write_reference_table(std::cout, rows);
    int failed = 0;
    for (const ReferenceRow& r : rows) failed += r.pass ? 0 : 1;
    v.require(failed == 0, std::to_string(failed) + " rows outside tolerance");
    if (v.pass) v.detail = std::to_string(rows.size()) + " rows within tolerance";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"U-NOT bound", unot_bound},       {"U-NOT solve", unot_solve},
        {"cloner", cloner},                {"entangler A", entangler_a},
        {"entangler B", entangler_b},      {"shifter scan", shifter_scan},
        {"quadrature vs closed form", quadrature}, {"structural invariants", properties},
        {"reference table", reference_values},
    };
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += v.pass ? 0 : 1;
        std::printf("criterion %zu %s  %s: %s (%.2fs)\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    v.detail.c_str(), secs);
        std::fflush(stdout);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of %zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
                total);
    return failures == 0 ? 0 : 1;
}
