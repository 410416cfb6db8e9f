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

#include "cpopt/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cpopt/error.hpp"
#include "cpopt/linalg.hpp"

namespace cpopt {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;
constexpr double kLn2 = std::numbers::ln2;

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// Basis index of |N,k>.
std::size_t sym(int n, int k) { return static_cast<std::size_t>(n - k); }

ComplexVector basis(std::size_t dim, std::size_t i) {
    ComplexVector v(dim);
    v[i] = 1.0;
    return v;
}

ComplexVector psi_plus() { return {0.0, 1.0 / sqrt2, 1.0 / sqrt2, 0.0}; }

ComplexMatrix ket_bra(const ComplexVector& a, const ComplexVector& b) { return ComplexMatrix::outer(a, b); }

TargetOperator r_unot(int n) {
    const double d = (n + 1.0) * (n + 2.0);
    const std::size_t dk = 2;
    ComplexMatrix r((n + 1) * dk, (n + 1) * dk);
    for (int k = 0; k <= n; ++k) {
        r(sym(n, k) * dk + 0, sym(n, k) * dk + 0) = (n - k + 1) / d;
        r(sym(n, k) * dk + 1, sym(n, k) * dk + 1) = (k + 1) / d;
    }
    for (int k = 1; k <= n; ++k) {
        const double c = -std::sqrt(k * (n - k + 1.0)) / d;
        r(sym(n, k) * dk + 0, sym(n, k - 1) * dk + 1) = c;
        r(sym(n, k - 1) * dk + 1, sym(n, k) * dk + 0) = c;
    }
    return TargetOperator(static_cast<std::size_t>(n + 1), dk, std::move(r), "analytic:unot");
}

TargetOperator r_cloner(int n) {
    const double d = (n + 1.0) * (n + 2.0);
    const std::size_t dk = static_cast<std::size_t>(n + 1);
    ComplexMatrix r(2 * dk, 2 * dk);
    for (int k = 0; k <= n; ++k) {
        r(0 * dk + sym(n, k), 0 * dk + sym(n, k)) = (k + 1) / d;
        r(1 * dk + sym(n, k), 1 * dk + sym(n, k)) = (n - k + 1) / d;
    }
    for (int k = 1; k <= n; ++k) {
        const double c = std::sqrt(k * (n - k + 1.0)) / d;
        r(0 * dk + sym(n, k), 1 * dk + sym(n, k - 1)) = c;
        r(1 * dk + sym(n, k - 1), 0 * dk + sym(n, k)) = c;
    }
    return TargetOperator(2, dk, std::move(r), "analytic:cloner");
}

TargetOperator r_entangler_a() {
    const ComplexVector q0 = basis(2, 0);
    const ComplexVector q1 = basis(2, 1);
    const ComplexVector e00 = basis(4, 0);
    const ComplexVector pp = psi_plus();
    const double mixed = sqrt2 * (1.5 - 2.0 * kLn2);

    ComplexMatrix r = (2.0 * kLn2 - 1.0) * kron(ket_bra(q0, q0), ket_bra(e00, e00));
    r += (3.0 - 4.0 * kLn2) * kron(ket_bra(q1, q1), ket_bra(e00, e00));
    r += (1.5 - 2.0 * kLn2) * kron(ket_bra(q0, q0), ket_bra(pp, pp));
    r += (4.0 * kLn2 - 2.5) * kron(ket_bra(q1, q1), ket_bra(pp, pp));
    r += mixed * kron(ket_bra(q0, q1), ket_bra(e00, pp));
    r += mixed * kron(ket_bra(q1, q0), ket_bra(pp, e00));
    return TargetOperator(2, 4, std::move(r), "analytic:entangler-a");
}

TargetOperator r_entangler_b() {
    ComplexMatrix corr = ComplexMatrix::identity(4);
    for (char axis : {'x', 'y', 'z'}) corr += (1.0 / 3.0) * kron(pauli(axis), pauli(axis));
    ComplexMatrix r = kron(ComplexMatrix::identity(2), corr);
    r *= 1.0 / 8.0;
    return TargetOperator(2, 4, std::move(r), "analytic:entangler-b");
}

TargetOperator r_shifter(double alpha, const char* provenance) {
    const double c = std::cos(alpha) / 12.0;
    const double s = pi * std::sin(alpha) / 16.0;
    const double diag[4] = {0.25 + c - s, 0.25 - c + s, 0.25 - c - s, 0.25 + c + s};
    ComplexMatrix r = ComplexMatrix::diagonal(diag);
    r(0, 3) = r(3, 0) = std::cos(alpha) / 6.0;
    return TargetOperator(2, 2, std::move(r), provenance);
}

void require_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= pi)) {
        throw Error(ErrorKind::OutOfRange, "alpha " + std::to_string(alpha) + " outside [0, pi]");
    }
}

}  // namespace

std::size_t ModelSpec::dim_in() const {
    switch (kind) {
        case ModelKind::Unot: return static_cast<std::size_t>(copies + 1);
        default: return 2;
    }
}

std::size_t ModelSpec::dim_out() const {
    switch (kind) {
        case ModelKind::Cloner: return static_cast<std::size_t>(copies + 1);
        case ModelKind::EntanglerA:
        case ModelKind::EntanglerB: return 4;
        default: return 2;
    }
}

void ModelSpec::validate() const {
    if ((kind == ModelKind::Unot || kind == ModelKind::Cloner) && copies < 1) {
        throw Error(ErrorKind::InvalidSpec, "copies must be >= 1, got " + std::to_string(copies));
    }
    if (kind == ModelKind::Shifter && !(alpha >= 0.0 && alpha <= pi)) {
        throw Error(ErrorKind::InvalidSpec, "alpha " + std::to_string(alpha) + " outside [0, pi]");
    }
}

std::string ModelSpec::label() const {
    std::string s(model_name(kind));
    if (kind == ModelKind::Unot || kind == ModelKind::Cloner) s += "(N=" + std::to_string(copies) + ")";
    if (kind == ModelKind::Shifter) s += "(alpha=" + std::to_string(alpha) + ")";
    return s;
}

std::string_view model_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::Unot: return "unot";
        case ModelKind::Cloner: return "cloner";
        case ModelKind::EntanglerA: return "entangler-a";
        case ModelKind::EntanglerB: return "entangler-b";
        case ModelKind::Shifter: return "shifter";
        case ModelKind::Identity: return "identity";
    }
    return "unknown";
}

ModelSpec parse_model(std::string_view name, int copies, double alpha) {
    ModelSpec spec;
    if (name == "unot") spec = ModelSpec::unot(copies);
    else if (name == "cloner") spec = ModelSpec::cloner(copies);
    else if (name == "entangler-a") spec = ModelSpec::entangler_a();
    else if (name == "entangler-b") spec = ModelSpec::entangler_b();
    else if (name == "shifter") spec = ModelSpec::shifter(alpha);
    else if (name == "identity") spec = ModelSpec::identity();
    else throw Error(ErrorKind::InvalidSpec, "unknown model '" + std::string(name) + "'");
    spec.validate();
    return spec;
}

ComplexVector bloch_state(double theta, double phi) {
    return {std::cos(theta / 2.0), std::polar(1.0, phi) * std::sin(theta / 2.0)};
}

ComplexVector orthogonal_state(double theta, double phi) {
    return {std::sin(theta / 2.0), -std::polar(1.0, phi) * std::cos(theta / 2.0)};
}

ComplexVector symmetric_state(int n, double theta, double phi) {
    if (n < 1) throw Error(ErrorKind::InvalidSpec, "symmetric_state needs N >= 1");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    ComplexVector v(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        v[sym(n, k)] = std::sqrt(binomial(n, k)) * std::polar(1.0, (n - k) * phi) * std::pow(c, k) * std::pow(s, n - k);
    }
    return v;
}

ComplexMatrix pauli(char axis) {
    switch (axis) {
        case 'x': return {{0.0, 1.0}, {1.0, 0.0}};
        case 'y': return {{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}};
        case 'z': return {{1.0, 0.0}, {0.0, -1.0}};
    }
    throw Error(ErrorKind::InvalidArgument, std::string("no Pauli matrix for axis ") + axis);
}

int default_degree(const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelKind::Unot:
        case ModelKind::Cloner: return 2 * (spec.copies + 1);
        default: return 4;
    }
}

StateFamily model_family(const ModelSpec& spec) {
    spec.validate();
    StateFamily f{spec.dim_in(), spec.dim_out(), {}, default_degree(spec)};
    switch (spec.kind) {
        case ModelKind::Unot: {
            const int n = spec.copies;
            f.evaluate = [n](double t, double p) { return StatePair{symmetric_state(n, t, p), orthogonal_state(t, p)}; };
            break;
        }
        case ModelKind::Cloner: {
            const int n = spec.copies;
            f.evaluate = [n](double t, double p) { return StatePair{bloch_state(t, p), symmetric_state(n, t, p)}; };
            break;
        }
        case ModelKind::EntanglerA:
            f.evaluate = [](double t, double p) {
                const double c = std::cos(t / 2.0);
                const cplx s = std::polar(1.0, p) * std::sin(t / 2.0);
                const double norm = std::sqrt(1.0 + c * c);
                return StatePair{bloch_state(t, p), {sqrt2 * c / norm, s / (sqrt2 * norm), s / (sqrt2 * norm), 0.0}};
            };
            break;
        case ModelKind::EntanglerB:
            f.evaluate = [](double t, double p) {
                const ComplexVector a = bloch_state(t, p);
                const ComplexVector b = orthogonal_state(t, p);
                ComplexVector out = kron(a, b);
                const ComplexVector swapped = kron(b, a);
                for (std::size_t i = 0; i < out.size(); ++i) out[i] = (out[i] + swapped[i]) / sqrt2;
                return StatePair{a, out};
            };
            break;
        case ModelKind::Shifter: {
            const double alpha = spec.alpha;
            // theta + alpha may exceed pi; the Bloch formula is used as is.
            f.evaluate = [alpha](double t, double p) { return StatePair{bloch_state(t, p), bloch_state(t + alpha, p)}; };
            break;
        }
        case ModelKind::Identity:
            f.evaluate = [](double t, double p) { return StatePair{bloch_state(t, p), bloch_state(t, p)}; };
            break;
    }
    return f;
}

TargetOperator analytic_r(const ModelSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case ModelKind::Unot: return r_unot(spec.copies);
        case ModelKind::Cloner: return r_cloner(spec.copies);
        case ModelKind::EntanglerA: return r_entangler_a();
        case ModelKind::EntanglerB: return r_entangler_b();
        case ModelKind::Shifter: return r_shifter(spec.alpha, "analytic:shifter");
        case ModelKind::Identity: return r_shifter(0.0, "analytic:identity");
    }
    throw Error(ErrorKind::InvalidSpec, "unknown model kind");
}

KnownOptimum known_optimum(const ModelSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case ModelKind::Unot: {
            const int n = spec.copies;
            KnownOptimum k{(n + 1.0) / (n + 2.0), std::nullopt, "bound (N+1)/(N+2) is attained"};
            if (n == 1) {
                // rho -> (1/3) [[2 rho11 + rho00, -rho01], [-rho10, 2 rho00 + rho11]]
                k.chi = ChoiOperator::from_action(2, 2, [](std::size_t i, std::size_t j) {
                    ComplexMatrix out(2, 2);
                    if (i == j) {
                        out(i, i) = 1.0 / 3.0;
                        out(1 - i, 1 - i) = 2.0 / 3.0;
                    } else {
                        out(i, j) = -1.0 / 3.0;
                    }
                    return out;
                });
            }
            return k;
        }
        case ModelKind::Cloner:
            return {2.0 / (spec.copies + 1.0), std::nullopt, "bound 2/(N+1) is attained"};
        case ModelKind::EntanglerA:
            return {entangler_a_mean_fidelity(), ChoiOperator::from_isometry(entangler_a_isometry()),
                    "isometry |0> -> |00>, |1> -> |Psi+>"};
        case ModelKind::EntanglerB:
            return {1.0 / 3.0, ChoiOperator::constant_output(2, entangler_b_output_state()),
                    "constant separable output"};
        case ModelKind::Shifter: {
            const ShifterClosedForms cf = shifter_closed_forms(spec.alpha);
            return {cf.F_alpha, damping_channel(cf.beta_opt),
                    cf.boundary ? "alpha = pi: optimal damping angle is pi" : "damping channel"};
        }
        case ModelKind::Identity:
            return {1.0, ChoiOperator::identity(2), "identity channel"};
    }
    throw Error(ErrorKind::InvalidSpec, "unknown model kind");
}

ChoiOperator damping_channel(double beta) {
    if (!(beta >= 0.0 && beta <= pi)) throw Error(ErrorKind::OutOfRange, "beta outside [0, pi]");
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    return ChoiOperator::from_action(2, 2, [c, s](std::size_t i, std::size_t j) {
        ComplexMatrix out(2, 2);
        if (i == 0 && j == 0) {
            out(0, 0) = c * c;
            out(1, 1) = s * s;
        } else if (i == 1 && j == 1) {
            out(1, 1) = 1.0;
        } else {
            out(i, j) = c;
        }
        return out;
    });
}

double shifter_fidelity(double alpha, double beta) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    return 0.5 + std::cos(alpha) / 6.0 * (c * c + 2.0 * c) + pi / 8.0 * std::sin(alpha) * s * s;
}

double shifter_threshold() { return std::atan(8.0 / (3.0 * pi)); }

ShifterClosedForms shifter_closed_forms(double alpha) {
    require_alpha(alpha);
    ShifterClosedForms cf;
    cf.alpha = alpha;
    cf.alpha0 = shifter_threshold();
    cf.F_of_beta = [alpha](double beta) { return shifter_fidelity(alpha, beta); };
    cf.boundary = alpha == pi;
    if (alpha <= cf.alpha0) {
        cf.beta_opt = 0.0;
        cf.cos_beta_opt = 1.0;
        cf.F_alpha = 0.5 * (1.0 + std::cos(alpha));
        return cf;
    }
    // cos b2 = 1 / (3pi/4 tan(alpha) - 1), written to stay finite at alpha = pi/2
    const double cb = std::clamp(std::cos(alpha) / (0.75 * pi * std::sin(alpha) - std::cos(alpha)), -1.0, 1.0);
    cf.cos_beta_opt = cb;
    cf.beta_opt = std::acos(cb);
    cf.F_alpha = shifter_fidelity(alpha, cf.beta_opt);
    return cf;
}

double entangler_a_mean_fidelity() { return 3.0 * sqrt2 - 3.5 + (6.0 - 4.0 * sqrt2) * kLn2; }

double entangler_a_min_fidelity() { return 4.0 * sqrt2 * (sqrt2 - 1.0) * (sqrt2 - 1.0); }

double entangler_a_state_fidelity(double theta) {
    const double c2 = std::cos(theta / 2.0) * std::cos(theta / 2.0);
    const double s2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
    const double num = sqrt2 * c2 + s2;
    return num * num / (1.0 + c2);
}

ComplexMatrix entangler_a_isometry() {
    ComplexMatrix v(4, 2);
    v(0, 0) = 1.0;
    v(1, 1) = 1.0 / sqrt2;
    v(2, 1) = 1.0 / sqrt2;
    return v;
}

ComplexMatrix entangler_b_output_state() {
    ComplexMatrix rho = ComplexMatrix::projector(basis(4, 0));
    rho += ComplexMatrix::projector(psi_plus());
    rho += ComplexMatrix::projector(basis(4, 3));
    rho *= 1.0 / 3.0;
    return rho;
}

}  // namespace cpopt
