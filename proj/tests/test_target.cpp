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
#include <numbers>
#include <vector>

#include "cpopt/error.hpp"
#include "cpopt/linalg.hpp"
#include "cpopt/models.hpp"
#include "cpopt/target.hpp"
#include "doctest.h"

using namespace cpopt;
using std::numbers::pi;

namespace {

std::vector<ModelSpec> all_models() {
    std::vector<ModelSpec> v;
    for (int n = 1; n <= 5; ++n) {
        v.push_back(ModelSpec::unot(n));
        v.push_back(ModelSpec::cloner(n));
    }
    v.push_back(ModelSpec::entangler_a());
    v.push_back(ModelSpec::entangler_b());
    for (double a : {0.0, 0.3, pi / 2, 2.5, pi}) v.push_back(ModelSpec::shifter(a));
    v.push_back(ModelSpec::identity());
    return v;
}

}  // namespace

TEST_CASE("Gauss-Legendre rule") {
    for (int n : {1, 2, 5, 24, 40}) {
        const auto [x, w] = gauss_legendre(n);
        REQUIRE(x.size() == static_cast<std::size_t>(n));
        double sum = 0.0;
        for (double wi : w) sum += wi;
        CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
        for (int i = 1; i < n; ++i) CHECK(x[i - 1] < x[i]);
        // exact for degree 2n - 1
        double moment = 0.0;
        for (int i = 0; i < n; ++i) moment += w[i] * std::pow(x[i], 2 * n - 2);
        CHECK(moment == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
    }
}

TEST_CASE("default node counts grow with the degree") {
    CHECK(default_nodes(4).theta == 24);
    CHECK(default_nodes(4).phi == 6);
    CHECK(default_nodes(12).theta == 40);
    CHECK(default_nodes(12).phi == 14);
}

TEST_CASE("quadrature reproduces every closed-form target") {
    for (const ModelSpec& spec : all_models()) {
        CAPTURE(spec.label());
        const TargetOperator quad = build_r_quadrature(model_family(spec));
        const TargetOperator exact = analytic_r(spec);
        CHECK(max_abs_diff(quad.matrix(), exact.matrix()) < 1e-10);
        CHECK(std::abs(quad.matrix().trace().real() - 1.0) < 1e-12);
    }
}

TEST_CASE("quadrature has plateaued at the default node counts") {
    for (const ModelSpec& spec : {ModelSpec::unot(4), ModelSpec::entangler_a(), ModelSpec::shifter(1.1)}) {
        const StateFamily fam = model_family(spec);
        QuadratureNodes more = default_nodes(fam.polynomial_degree);
        more.theta += 8;
        more.phi += 3;
        CHECK(max_abs_diff(build_r_quadrature(fam).matrix(), build_r_quadrature(fam, more).matrix()) < 1e-13);
    }
}

TEST_CASE("too few nodes visibly miss") {
    const StateFamily fam = model_family(ModelSpec::cloner(5));
    // an under-resolved rule loses the unit trace and is rejected
    CHECK_THROWS_AS(build_r_quadrature(fam, {2, 2}), Error);
}

TEST_CASE("Monte Carlo target is deterministic and close") {
    const ModelSpec spec = ModelSpec::entangler_a();
    const TargetOperator mc1 = build_r_montecarlo(model_family(spec), 20000, 7);
    const TargetOperator mc2 = build_r_montecarlo(model_family(spec), 20000, 7);
    const TargetOperator mc3 = build_r_montecarlo(model_family(spec), 20000, 8);
    CHECK(mc1.matrix() == mc2.matrix());
    CHECK_FALSE(mc1.matrix() == mc3.matrix());
    CHECK(max_abs_diff(mc1.matrix(), analytic_r(spec).matrix()) < 2e-2);
    CHECK(std::abs(mc1.matrix().trace().real() - 1.0) < 1e-12);
}

TEST_CASE("sphere samples depend only on seed and index") {
    const auto a = sphere_sample(5, 123);
    const auto b = sphere_sample(5, 123);
    CHECK(a == b);
    CHECK(a.first >= 0.0);
    CHECK(a.first <= pi);
    CHECK(a.second >= 0.0);
    CHECK(a.second < 2 * pi);
    // mean of cos(theta) over many samples ~ 0
    double s = 0.0;
    for (int i = 0; i < 20000; ++i) s += std::cos(sphere_sample(9, i).first);
    CHECK(std::abs(s / 20000) < 0.02);
}

TEST_CASE("fidelity bounds of the qubit models") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(std::abs(fidelity_bound(analytic_r(ModelSpec::unot(n))) - (n + 1.0) / (n + 2.0)) < 1e-12);
        CHECK(std::abs(fidelity_bound(analytic_r(ModelSpec::cloner(n))) - 2.0 / (n + 1.0)) < 1e-12);
    }
    CHECK(std::abs(fidelity_bound(analytic_r(ModelSpec::entangler_a())) - 1.0) < 1e-12);
    CHECK(std::abs(fidelity_bound(analytic_r(ModelSpec::identity())) - 1.0) < 1e-12);
}

TEST_CASE("target operator validation") {
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    CHECK(kind([] { TargetOperator(2, 1, ComplexMatrix{{0.5, 0.1}, {0.0, 0.5}}, "x"); }) == ErrorKind::NotHermitian);
    CHECK(kind([] { TargetOperator(2, 1, ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}, "x"); }) == ErrorKind::InvalidArgument);
    CHECK(kind([] { TargetOperator(2, 1, ComplexMatrix{{0.5, 0.0}, {0.0, 0.6}}, "x"); }) == ErrorKind::InvalidArgument);
    CHECK(kind([] { TargetOperator(2, 2, ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}}, "x"); }) == ErrorKind::DimensionMismatch);
    const TargetOperator ok(2, 1, ComplexMatrix{{0.25, 0.0}, {0.0, 0.75}}, "hand");
    CHECK(ok.lambda_max() == doctest::Approx(0.75));
    CHECK(ok.provenance() == "hand");
}

TEST_CASE("families reject non-normalized states") {
    StateFamily bad{2, 2, [](double, double) { return StatePair{{1.0, 1.0}, {1.0, 0.0}}; }, 2};
    CHECK_THROWS_AS(build_r_quadrature(bad), Error);
}
