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

#include "quenchsim/synth.h"

#include <numbers>

namespace quenchsim {

using std::numbers::pi;

CanonicalAngles block_angles(double J, double U, double dt) {
    return {J * dt, J * dt, -U * dt};
}

void append_general(Circuit &circuit, int a, int b, const CanonicalAngles &angles) {
    const double theta = pi / 2 - 2 * angles.gamma;
    const double phi = 2 * angles.alpha - pi / 2;
    const double lambda = pi / 2 - 2 * angles.beta;
    circuit.push_back(Gate::rz(b, -pi / 2));
    circuit.push_back(Gate::cnot(b, a));
    circuit.push_back(Gate::rz(a, theta));
    circuit.push_back(Gate::ry(b, phi));
    circuit.push_back(Gate::cnot(a, b));
    circuit.push_back(Gate::ry(b, lambda));
    circuit.push_back(Gate::cnot(b, a));
    circuit.push_back(Gate::rz(a, pi / 2));
}

void append_xz(Circuit &circuit, int a, int b, double alpha, double gamma) {
    circuit.push_back(Gate::cnot(a, b));
    circuit.push_back(Gate::rx(a, -2 * alpha));
    circuit.push_back(Gate::rz(b, -2 * gamma));
    circuit.push_back(Gate::cnot(a, b));
}

Circuit synth_general(const CanonicalAngles &angles) {
    Circuit c(2);
    append_general(c, 0, 1, angles);
    return c;
}

Circuit synth_xz(double alpha, double gamma) {
    Circuit c(2);
    append_xz(c, 0, 1, alpha, gamma);
    return c;
}

void append_block(Circuit &circuit, int a, int b, double J, double U, double dt, const SynthOptions &options) {
    const CanonicalAngles angles = block_angles(J, U, dt);
    if (angles.alpha == 0.0 && angles.gamma == 0.0) {
        return;
    }
    if (options.allow_two_cnot && angles.alpha == 0.0) {
        append_xz(circuit, a, b, 0.0, angles.gamma);
        return;
    }
    if (options.allow_two_cnot && angles.gamma == 0.0) {
        for (int q : {a, b}) {
            circuit.push_back(Gate::h(q));
            circuit.push_back(Gate::sdg(q));
            circuit.push_back(Gate::h(q));
        }
        append_xz(circuit, a, b, angles.alpha, angles.alpha);
        for (int q : {a, b}) {
            circuit.push_back(Gate::h(q));
            circuit.push_back(Gate::s(q));
            circuit.push_back(Gate::h(q));
        }
        return;
    }
    append_general(circuit, a, b, angles);
}

Circuit synth_block(double J, double U, double dt, const SynthOptions &options) {
    Circuit c(2);
    append_block(c, 0, 1, J, U, dt, options);
    return c;
}

}  // namespace quenchsim
