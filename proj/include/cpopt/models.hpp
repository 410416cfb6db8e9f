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

// Built-in transformations on a single input qubit |psi(theta, phi)> =
// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, their closed-form target
// operators and the optimal channels known for them.
//
// Symmetric N-qubit states |N,k> (k qubits in |0>) are stored at basis
// index N - k, so |N,N> = |0...0> comes first.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "cpopt/channel.hpp"
#include "cpopt/complex_matrix.hpp"
#include "cpopt/target.hpp"

namespace cpopt {

enum class ModelKind { Unot, Cloner, EntanglerA, EntanglerB, Shifter, Identity };

struct ModelSpec {
    ModelKind kind = ModelKind::Identity;
    int copies = 1;      // N for unot / cloner
    double alpha = 0.0;  // shift for the theta-shifter, radians

    static ModelSpec unot(int n) { return {ModelKind::Unot, n, 0.0}; }
    static ModelSpec cloner(int n) { return {ModelKind::Cloner, n, 0.0}; }
    static ModelSpec entangler_a() { return {ModelKind::EntanglerA, 1, 0.0}; }
    static ModelSpec entangler_b() { return {ModelKind::EntanglerB, 1, 0.0}; }
    static ModelSpec shifter(double alpha) { return {ModelKind::Shifter, 1, alpha}; }
    static ModelSpec identity() { return {ModelKind::Identity, 1, 0.0}; }

    std::size_t dim_in() const;
    std::size_t dim_out() const;
    /// Throws InvalidSpec for N < 1 or alpha outside [0, pi].
    void validate() const;
    /// Human-readable label, e.g. "unot(N=2)".
    std::string label() const;
};

/// CLI vocabulary: unot, cloner, entangler-a, entangler-b, shifter, identity.
ModelSpec parse_model(std::string_view name, int copies, double alpha);
std::string_view model_name(ModelKind kind);

ComplexVector bloch_state(double theta, double phi);
/// sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>
ComplexVector orthogonal_state(double theta, double phi);
/// |psi>^{(x) N} expressed in the symmetric basis (length N + 1).
ComplexVector symmetric_state(int n, double theta, double phi);

ComplexMatrix pauli(char axis);

int default_degree(const ModelSpec& spec);
StateFamily model_family(const ModelSpec& spec);
TargetOperator analytic_r(const ModelSpec& spec);

struct KnownOptimum {
    double fidelity = 0.0;
    std::optional<ChoiOperator> chi;
    std::string note;
};

KnownOptimum known_optimum(const ModelSpec& spec);

/// Amplitude-damping family: |0><0| -> cos^2 b |0><0| + sin^2 b |1><1|,
/// coherences scaled by cos b, |1><1| fixed. Accepts b in [0, pi]; values
/// past pi/2 flip the sign of the coherences.
ChoiOperator damping_channel(double beta);

/// Mean fidelity of damping_channel(beta) for the theta-shifter at alpha.
double shifter_fidelity(double alpha, double beta);
/// arctan(8 / (3 pi)): below it the identity is the best damping channel.
double shifter_threshold();

struct ShifterClosedForms {
    double alpha = 0.0;
    double beta_opt = 0.0;
    double cos_beta_opt = 1.0;
    double F_alpha = 1.0;
    double alpha0 = 0.0;
    std::function<double(double)> F_of_beta;
    /// alpha == pi: the optimal damping angle is pi, outside the usual
    /// [0, pi/2] range of the damping parametrization.
    bool boundary = false;
};

ShifterClosedForms shifter_closed_forms(double alpha);

/// Closed forms for the first entangler.
double entangler_a_mean_fidelity();
double entangler_a_min_fidelity();
double entangler_a_state_fidelity(double theta);
/// |0> -> |00>, |1> -> |Psi+>, as a 4 x 2 isometry.
ComplexMatrix entangler_a_isometry();
/// (|00><00| + |Psi+><Psi+| + |11><11|) / 3
ComplexMatrix entangler_b_output_state();

}  // namespace cpopt
