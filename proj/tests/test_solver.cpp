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

#include <cmath>

#include "cpopt/channel.hpp"
#include "cpopt/error.hpp"
#include "cpopt/linalg.hpp"
#include "cpopt/models.hpp"
#include "cpopt/solver.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cpopt;
using cpopt::testing::unit_image;

TEST_CASE("U-NOT from the maximally mixed start") {
    const TargetOperator r = analytic_r(ModelSpec::unot(1));
    const SolverResult res = solve(r);
    CHECK(res.converged);
    CHECK(std::abs(res.fidelity - 2.0 / 3.0) < 1e-9);
    CHECK(res.fidelity_trace.size() == static_cast<std::size_t>(res.iterations) + 1);
    CHECK(res.bound == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("one step from the maximally mixed start is the U-NOT gate") {
    const TargetOperator r = analytic_r(ModelSpec::unot(1));
    const ChoiOperator chi = iterate_once(ChoiOperator::max_mixed(2, 2), r);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            // |i><j| -> (2 delta_ij 1 - |i><j|) / 3
            ComplexMatrix expect(2, 2);
            if (i == j) expect = ComplexMatrix::identity(2) * cplx(2.0 / 3.0);
            expect(i, j) -= 1.0 / 3.0;
            CHECK(max_abs_diff(unit_image(chi, i, j), expect) < 1e-14);
        }
    }
}

TEST_CASE("U-NOT from random starts") {
    const TargetOperator r = analytic_r(ModelSpec::unot(1));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SolverOptions opts;
        opts.init = SolverInit::random(seed);
        const SolverResult res = solve(r, opts);
        CAPTURE(seed);
        CHECK(res.converged);
        CHECK(std::abs(res.fidelity - 2.0 / 3.0) < 1e-9);
    }
}

TEST_CASE("cloner N=2 converges quickly") {
    const SolverResult res = solve(analytic_r(ModelSpec::cloner(2)));
    CHECK(res.converged);
    CHECK(res.iterations <= 200);
    CHECK(std::abs(res.fidelity - 2.0 / 3.0) < 1e-10);
}

TEST_CASE("every iterate stays a channel and the fidelity never drops") {
    for (const ModelSpec& spec : {ModelSpec::cloner(3), ModelSpec::entangler_a(), ModelSpec::shifter(2.0)}) {
        const TargetOperator r = analytic_r(spec);
        ChoiOperator chi = random_choi(r.dim_in(), r.dim_out(), 17);
        double prev = fidelity(chi, r);
        for (int k = 0; k < 30; ++k) {
            chi = iterate_once(chi, r);
            const ChoiReport rep = validate_choi(chi);
            CHECK(rep.trace_preservation_deviation < 1e-9);
            CHECK(rep.min_eigenvalue > -1e-10);
            const double f = fidelity(chi, r);
            CHECK(f >= prev - 1e-12);
            prev = f;
        }
    }
}

TEST_CASE("random starts are valid and seed-determined") {
    const ChoiOperator a = random_choi(3, 2, 5);
    const ChoiOperator b = random_choi(3, 2, 5);
    CHECK(a.matrix() == b.matrix());
    CHECK(validate_choi(a).valid);
    CHECK_FALSE(a.matrix() == random_choi(3, 2, 6).matrix());
}

TEST_CASE("explicit starts and option checks") {
    const TargetOperator r = analytic_r(ModelSpec::shifter(0.4));
    SolverOptions opts;
    opts.init = SolverInit::from(ChoiOperator::identity(2));
    const SolverResult res = solve(r, opts);
    CHECK(res.converged);
    CHECK(res.fidelity == doctest::Approx(shifter_closed_forms(0.4).F_alpha).epsilon(1e-9));

    opts.init = SolverInit::from(ChoiOperator::identity(3));
    CHECK_THROWS_AS(solve(r, opts), Error);

    SolverOptions bad;
    bad.max_iters = 0;
    CHECK_THROWS_AS(solve(r, bad), Error);
    bad = {};
    bad.fid_tol = -1.0;
    CHECK_THROWS_AS(solve(r, bad), Error);
}

TEST_CASE("iteration cap is reported") {
    SolverOptions opts;
    opts.max_iters = 2;
    const SolverResult res = solve(analytic_r(ModelSpec::entangler_a()), opts);
    CHECK_FALSE(res.converged);
    CHECK(res.stop_reason == "max_iters");
    CHECK(res.iterations == 2);
}

TEST_CASE("lambda spectrum is reported") {
    const SolverResult res = solve(analytic_r(ModelSpec::cloner(2)));
    REQUIRE(res.lambda_eigenvalues.size() == 2);
    CHECK(res.lambda_eigenvalues[0] == doctest::Approx(res.lambda_eigenvalues[1]).epsilon(1e-8));
    CHECK(res.lambda_min_gap < 1e-6);
}
