// Copyright 2026 The quenchsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUENCHSIM_SYNTH_H
#define QUENCHSIM_SYNTH_H

#include "quenchsim/circuit.h"

namespace quenchsim {

/// Parameters of N(alpha, beta, gamma) = exp[i(alpha XX + beta YY + gamma ZZ)].
struct CanonicalAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Angles for the bond propagator exp(-i(U ZZ - J(XX + YY)) dt): (J dt, J dt, -U dt).
CanonicalAngles block_angles(double J, double U, double dt);

/// Three-CNOT circuit for N(alpha, beta, gamma) on qubits (a, b):
///
///   a: ---------- X -- Rz(t) -- * ----------- X -- Rz(pi/2)
///   b: Rz(-pi/2) -* -- Ry(p) -- X -- Ry(l) -- *
///
/// with t = pi/2 - 2 gamma, p = 2 alpha - pi/2, l = pi/2 - 2 beta.
void append_general(Circuit &circuit, int a, int b, const CanonicalAngles &angles);

/// Two-CNOT circuit for N(alpha, 0, gamma): CNOT(a,b), Rx(-2 alpha) on a,
/// Rz(-2 gamma) on b, CNOT(a,b).
void append_xz(Circuit &circuit, int a, int b, double alpha, double gamma);

/// 2-qubit circuits on qubits (0, 1).
Circuit synth_general(const CanonicalAngles &angles);
Circuit synth_xz(double alpha, double gamma);

struct SynthOptions {
    /// Route U = 0 blocks through the two-CNOT construction.
    bool allow_two_cnot = true;
};

/// Appends the bond propagator exp(-i(U ZZ - J(XX + YY)) dt) on qubits (a, b).
///
/// U = 0 with two-CNOT routing: N(a, a, 0) is conjugated into N(a, 0, a) by
/// W = HSH on both qubits (W^dagger Z W = Y and W^dagger X W = X, so ZZ -> YY and XX -> XX),
/// giving [HSdgH x2] N(a, 0, a) [HSH x2]. J = U = 0 emits nothing.
void append_block(Circuit &circuit, int a, int b, double J, double U, double dt, const SynthOptions &options = {});

Circuit synth_block(double J, double U, double dt, const SynthOptions &options = {});

}  // namespace quenchsim

#endif  // QUENCHSIM_SYNTH_H
