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

// Target operators: R = int dx (|in><in|)^T (x) |out><out| over the Bloch
// sphere with the normalized measure sin(theta) dtheta dphi / 4pi.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cpopt/complex_matrix.hpp"

namespace cpopt {

struct StatePair {
    ComplexVector in;
    ComplexVector out;
};

/// A pure-state transformation |in(theta, phi)> -> |out(theta, phi)>.
struct StateFamily {
    std::size_t dim_in = 0;
    std::size_t dim_out = 0;
    std::function<StatePair(double theta, double phi)> evaluate;
    /// Highest trigonometric degree, in theta or phi, of any entry of the
    /// integrand. Drives the default node counts.
    int polynomial_degree = 0;
};

/// conj(in) (x) out. Its outer product is the integrand of R, and
/// <v|chi|v> is the pointwise fidelity of a channel chi.
ComplexVector integrand_vector(const StatePair& states);

class TargetOperator {
 public:
    TargetOperator(std::size_t dim_in, std::size_t dim_out, ComplexMatrix matrix, std::string provenance);

    std::size_t dim_in() const noexcept { return dim_in_; }
    std::size_t dim_out() const noexcept { return dim_out_; }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    double lambda_max() const noexcept { return lambda_max_; }
    const std::string& provenance() const noexcept { return provenance_; }

 private:
    std::size_t dim_in_;
    std::size_t dim_out_;
    ComplexMatrix matrix_;
    double lambda_max_;
    std::string provenance_;
};

struct QuadratureNodes {
    int theta = 0;  // Gauss-Legendre nodes in theta on [0, pi]
    int phi = 0;    // uniform trapezoid points on [0, 2pi)
};

/// Node counts used when the caller does not override them.
QuadratureNodes default_nodes(int polynomial_degree);

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

TargetOperator build_r_quadrature(const StateFamily& family);
TargetOperator build_r_quadrature(const StateFamily& family, QuadratureNodes nodes);

/// Uniform sphere sampling (cos theta ~ U[-1, 1], phi ~ U[0, 2pi)). Sample
/// i is drawn from a counter-based stream keyed on (seed, i) only.
TargetOperator build_r_montecarlo(const StateFamily& family, std::size_t samples, std::uint64_t seed);

/// dim_in * lambda_max(R), the ceiling on Tr[chi R] over trace-preserving chi.
double fidelity_bound(const TargetOperator& r);

/// The (theta, phi) of sample `index` in stream `seed`.
std::pair<double, double> sphere_sample(std::uint64_t seed, std::uint64_t index);

}  // namespace cpopt
