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

#include "cpopt/target.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cpopt/error.hpp"
#include "cpopt/kernels.hpp"
#include "cpopt/linalg.hpp"
#include "cpopt/rng.hpp"

namespace cpopt {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kTargetPsdTol = 1e-10;
constexpr double kTargetTraceTol = 1e-9;
constexpr std::size_t kLeafSamples = 1024;

void check_unit(const ComplexVector& v, std::size_t dim, const char* which, double theta, double phi) {
    if (v.size() != dim) {
        throw Error(ErrorKind::DimensionMismatch, std::string(which) + " state has length " + std::to_string(v.size()) +
                                                      ", expected " + std::to_string(dim));
    }
    double n2 = 0.0;
    for (const auto& z : v) n2 += std::norm(z);
    if (std::abs(std::sqrt(n2) - 1.0) > kNormTol) {
        throw Error(ErrorKind::NormViolation, std::string(which) + " state norm " + std::to_string(std::sqrt(n2)) +
                                                  " at theta=" + std::to_string(theta) + " phi=" + std::to_string(phi));
    }
}

ComplexVector checked_integrand(const StateFamily& family, double theta, double phi) {
    StatePair s = family.evaluate(theta, phi);
    check_unit(s.in, family.dim_in, "input", theta, phi);
    check_unit(s.out, family.dim_out, "output", theta, phi);
    return integrand_vector(s);
}

// Pairwise reduction over [lo, hi): leaves are sequential sums of at most
// kLeafSamples rank-one terms, so the result does not depend on how the
// range is later chunked across workers.
ComplexMatrix mc_sum(const StateFamily& family, std::uint64_t seed, std::size_t lo, std::size_t hi) {
    const std::size_t n = family.dim_in * family.dim_out;
    if (hi - lo <= kLeafSamples) {
        ComplexMatrix acc(n, n);
        for (std::size_t i = lo; i < hi; ++i) {
            const auto [theta, phi] = sphere_sample(seed, i);
            const ComplexVector v = checked_integrand(family, theta, phi);
            kernels::active().rank1(acc.data().data(), n, n, 1.0, v.data(), v.data());
        }
        return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return mc_sum(family, seed, lo, mid) + mc_sum(family, seed, mid, hi);
}

}  // namespace

ComplexVector integrand_vector(const StatePair& states) {
    ComplexVector in_conj(states.in.size());
    std::transform(states.in.begin(), states.in.end(), in_conj.begin(), [](cplx z) { return std::conj(z); });
    return kron(in_conj, states.out);
}

TargetOperator::TargetOperator(std::size_t dim_in, std::size_t dim_out, ComplexMatrix matrix, std::string provenance)
    : dim_in_(dim_in), dim_out_(dim_out), matrix_(std::move(matrix)), lambda_max_(0.0), provenance_(std::move(provenance)) {
    if (!matrix_.is_square() || matrix_.rows() != dim_in * dim_out) {
        throw Error(ErrorKind::DimensionMismatch, "target operator must be (dim_in*dim_out)^2");
    }
    const EigenDecomposition eig = herm_eig(matrix_, 1e-10);
    lambda_max_ = eig.eigenvalues.front();
    if (eig.eigenvalues.back() < -kTargetPsdTol) {
        throw Error(ErrorKind::InvalidArgument, "target operator is not PSD, min eigenvalue " +
                                                    std::to_string(eig.eigenvalues.back()));
    }
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kTargetTraceTol) {
        throw Error(ErrorKind::InvalidArgument, "target operator trace " + std::to_string(tr) + " != 1");
    }
}

QuadratureNodes default_nodes(int polynomial_degree) {
    const int d = std::max(polynomial_degree, 0);
    return {std::max(24, 2 * d + 16), d + 2};
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "gauss_legendre needs n >= 1");
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence for P_n(z) and its derivative
            double p0 = 1.0;
            double p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        double p0 = 1.0;
        double p1 = z;
        for (int k = 2; k <= n; ++k) {
            const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        x[lo] = -z;
        x[hi] = z;
        w[lo] = w[hi] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    if (n % 2 == 1) x[static_cast<std::size_t>(n / 2)] = 0.0;
    return {x, w};
}

TargetOperator build_r_quadrature(const StateFamily& family) {
    return build_r_quadrature(family, default_nodes(family.polynomial_degree));
}

TargetOperator build_r_quadrature(const StateFamily& family, QuadratureNodes nodes) {
    if (nodes.theta < 1 || nodes.phi < 1) throw Error(ErrorKind::InvalidArgument, "quadrature node counts must be >= 1");
    const std::size_t n = family.dim_in * family.dim_out;
    const auto [x, w] = gauss_legendre(nodes.theta);
    const double half_pi = std::numbers::pi / 2.0;

    ComplexMatrix r(n, n);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double theta = half_pi * (x[j] + 1.0);
        ComplexMatrix ring(n, n);
        for (int m = 0; m < nodes.phi; ++m) {
            const double phi = 2.0 * std::numbers::pi * m / nodes.phi;
            const ComplexVector v = checked_integrand(family, theta, phi);
            kernels::active().rank1(ring.data().data(), n, n, 1.0, v.data(), v.data());
        }
        // (1/4pi) * (pi/2) w_j sin(theta_j) * (2pi / M)
        ring *= half_pi * w[j] * std::sin(theta) / (2.0 * nodes.phi);
        r += ring;
    }
    return TargetOperator(family.dim_in, family.dim_out, r.hermitian_part(),
                          "quadrature(theta=" + std::to_string(nodes.theta) + ",phi=" + std::to_string(nodes.phi) + ")");
}

std::pair<double, double> sphere_sample(std::uint64_t seed, std::uint64_t index) {
    CounterRng rng(seed, 2 * index);
    const double u = rng.uniform();
    const double v = rng.uniform();
    const double cos_theta = std::clamp(2.0 * u - 1.0, -1.0, 1.0);
    return {std::acos(cos_theta), 2.0 * std::numbers::pi * v};
}

TargetOperator build_r_montecarlo(const StateFamily& family, std::size_t samples, std::uint64_t seed) {
    if (samples < 1) throw Error(ErrorKind::InvalidArgument, "monte carlo needs at least one sample");
    ComplexMatrix r = mc_sum(family, seed, 0, samples);
    r *= 1.0 / static_cast<double>(samples);
    return TargetOperator(family.dim_in, family.dim_out, r.hermitian_part(),
                          "montecarlo(samples=" + std::to_string(samples) + ",seed=" + std::to_string(seed) + ")");
}

double fidelity_bound(const TargetOperator& r) { return static_cast<double>(r.dim_in()) * r.lambda_max(); }

}  // namespace cpopt
