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

#ifndef QUENCHSIM_CIRCUIT_H
#define QUENCHSIM_CIRCUIT_H

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quenchsim/linalg.h"

namespace quenchsim {

enum class GateKind { X, Y, Z, H, S, Sdg, T, Rx, Ry, Rz, U1, U2, U3, CNOT };

std::string_view gate_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);
int angle_count(GateKind kind);

/// One device-native gate. Rotations follow R_a(theta) = exp(-i theta sigma^a / 2);
/// U3(theta, phi, lambda) = [[cos, -e^{i lambda} sin], [e^{i phi} sin, e^{i(phi+lambda)} cos]]
/// with half-angle theta/2; U2(phi, lambda) = U3(pi/2, phi, lambda); U1(lambda) = U3(0, 0, lambda).
struct Gate {
    GateKind kind = GateKind::X;
    std::array<int, 2> qubits{0, -1};  // qubits[1] is the CNOT target, -1 otherwise
    std::array<double, 3> angles{0.0, 0.0, 0.0};

    bool is_two_qubit() const {
        return kind == GateKind::CNOT;
    }
    bool acts_on(int q) const {
        return qubits[0] == q || (is_two_qubit() && qubits[1] == q);
    }
    bool operator==(const Gate &other) const = default;

    static Gate x(int q) {
        return {GateKind::X, {q, -1}, {}};
    }
    static Gate y(int q) {
        return {GateKind::Y, {q, -1}, {}};
    }
    static Gate z(int q) {
        return {GateKind::Z, {q, -1}, {}};
    }
    static Gate h(int q) {
        return {GateKind::H, {q, -1}, {}};
    }
    static Gate s(int q) {
        return {GateKind::S, {q, -1}, {}};
    }
    static Gate sdg(int q) {
        return {GateKind::Sdg, {q, -1}, {}};
    }
    static Gate t(int q) {
        return {GateKind::T, {q, -1}, {}};
    }
    static Gate rx(int q, double theta) {
        return {GateKind::Rx, {q, -1}, {theta, 0.0, 0.0}};
    }
    static Gate ry(int q, double theta) {
        return {GateKind::Ry, {q, -1}, {theta, 0.0, 0.0}};
    }
    static Gate rz(int q, double theta) {
        return {GateKind::Rz, {q, -1}, {theta, 0.0, 0.0}};
    }
    static Gate u1(int q, double lambda) {
        return {GateKind::U1, {q, -1}, {lambda, 0.0, 0.0}};
    }
    static Gate u2(int q, double phi, double lambda) {
        return {GateKind::U2, {q, -1}, {phi, lambda, 0.0}};
    }
    static Gate u3(int q, double theta, double phi, double lambda) {
        return {GateKind::U3, {q, -1}, {theta, phi, lambda}};
    }
    static Gate cnot(int control, int target) {
        return {GateKind::CNOT, {control, target}, {}};
    }
};

/// 2x2 matrix of a single-qubit gate. Throws for CNOT.
Matrix2 gate_matrix(const Gate &gate);

Matrix2 u3_matrix(double theta, double phi, double lambda);

struct U3Angles {
    double theta, phi, lambda;
};

/// Angles with m = e^{i delta} U3(theta, phi, lambda) for some global phase delta.
U3Angles u3_angles(const Matrix2 &m);

/// Ordered gate list; gate order is application order.
class Circuit {
   public:
    explicit Circuit(int n_qubits);

    int n_qubits() const {
        return n_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }

    /// New circuit with `gate` at the end; this circuit is unchanged.
    [[nodiscard]] Circuit append(const Gate &gate) const;

    /// In-place builders used by the compilers.
    void push_back(const Gate &gate);
    void extend(const Circuit &other);

    std::size_t cnot_count() const;

    bool operator==(const Circuit &other) const = default;

   private:
    void check(const Gate &gate) const;

    int n_qubits_;
    std::vector<Gate> gates_;
};

/// Reversed gate order with every gate replaced by its adjoint.
Circuit inverse(const Circuit &circuit);

/// Adjoint of one gate, expressed in the same gate set.
Gate adjoint(const Gate &gate);

/// Collapses every run of single-qubit gates on a qubit (between CNOTs
/// touching that qubit) into one U3. Runs equal to the identity up to phase
/// are dropped. CNOTs are kept in order; the unitary is preserved up to a
/// global phase.
Circuit fuse_single_qubit_runs(const Circuit &circuit);

/// H on both qubits, CNOT(control -> target), H on both qubits. The result
/// acts as a CNOT with the roles exchanged (control `target`, target
/// `control`), which is how a CNOT is run against the native direction of a
/// coupler.
Circuit reversed_cnot(int n_qubits, int control, int target);

enum class BasisAxis { X, Y };
enum class BasisDirection { Forward, Inverse };

/// X: [H] (self-inverse). Y: forward [H, S, H] maps Z -> Y; inverse [H, Sdg, H].
/// A Z measurement after the forward Y change measures Y; after the inverse
/// change it measures -Y. Products with an even number of Y factors agree.
Circuit basis_change(int n_qubits, BasisAxis axis, int qubit, BasisDirection direction);

/// Line format: a `qubits N` header, then one gate per line as
/// `KIND q[,q2][;angle,...]`. Blank lines and `#` comments are ignored.
/// Angles are written in shortest round-trip form.
std::string serialize_circuit(const Circuit &circuit);
Circuit parse_circuit(std::string_view text);

}  // namespace quenchsim

#endif  // QUENCHSIM_CIRCUIT_H
