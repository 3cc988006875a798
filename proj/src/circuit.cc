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

#include "quenchsim/circuit.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace quenchsim {

namespace {

struct KindName {
    GateKind kind;
    std::string_view name;
};

constexpr KindName kKindNames[] = {
    {GateKind::X, "X"},   {GateKind::Y, "Y"},   {GateKind::Z, "Z"},       {GateKind::H, "H"},
    {GateKind::S, "S"},   {GateKind::Sdg, "SDG"}, {GateKind::T, "T"},     {GateKind::Rx, "RX"},
    {GateKind::Ry, "RY"}, {GateKind::Rz, "RZ"}, {GateKind::U1, "U1"},     {GateKind::U2, "U2"},
    {GateKind::U3, "U3"}, {GateKind::CNOT, "CNOT"},
};

// Phases below this are treated as identity when dropping fused runs.
constexpr double kIdentityTolerance = 1e-12;

double wrap_angle(double a) {
    return std::remainder(a, 2.0 * std::numbers::pi);
}

std::string format_angle(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto &entry : kKindNames) {
        if (entry.kind == kind) {
            return entry.name;
        }
    }
    throw std::invalid_argument("unknown gate kind");
}

GateKind parse_gate_kind(std::string_view name) {
    for (const auto &entry : kKindNames) {
        if (entry.name == name) {
            return entry.kind;
        }
    }
    throw std::invalid_argument("unknown gate name `" + std::string(name) + "`");
}

int angle_count(GateKind kind) {
    switch (kind) {
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::U1:
            return 1;
        case GateKind::U2:
            return 2;
        case GateKind::U3:
            return 3;
        default:
            return 0;
    }
}

Matrix2 u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    Matrix2 m;
    m << c, -std::exp(kI * lambda) * s, std::exp(kI * phi) * s, std::exp(kI * (phi + lambda)) * c;
    return m;
}

Matrix2 gate_matrix(const Gate &gate) {
    using std::numbers::pi;
    const double r = 1.0 / std::numbers::sqrt2;
    const double a = gate.angles[0];
    Matrix2 m;
    switch (gate.kind) {
        case GateKind::X:
            m << 0, 1, 1, 0;
            return m;
        case GateKind::Y:
            m << 0, -kI, kI, 0;
            return m;
        case GateKind::Z:
            m << 1, 0, 0, -1;
            return m;
        case GateKind::H:
            m << r, r, r, -r;
            return m;
        case GateKind::S:
            m << 1, 0, 0, kI;
            return m;
        case GateKind::Sdg:
            m << 1, 0, 0, -kI;
            return m;
        case GateKind::T:
            m << 1, 0, 0, std::exp(kI * (pi / 4));
            return m;
        case GateKind::Rx:
            m << std::cos(a / 2), -kI * std::sin(a / 2), -kI * std::sin(a / 2), std::cos(a / 2);
            return m;
        case GateKind::Ry:
            m << std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2);
            return m;
        case GateKind::Rz:
            m << std::exp(-kI * (a / 2)), 0, 0, std::exp(kI * (a / 2));
            return m;
        case GateKind::U1:
            return u3_matrix(0.0, 0.0, a);
        case GateKind::U2:
            return u3_matrix(pi / 2, gate.angles[0], gate.angles[1]);
        case GateKind::U3:
            return u3_matrix(gate.angles[0], gate.angles[1], gate.angles[2]);
        case GateKind::CNOT:
            break;
    }
    throw std::invalid_argument("gate_matrix: CNOT is not a single-qubit gate");
}

U3Angles u3_angles(const Matrix2 &m) {
    const double c = std::abs(m(0, 0));
    const double s = std::abs(m(1, 0));
    const double theta = 2.0 * std::atan2(s, c);
    constexpr double tiny = 1e-14;
    if (s < tiny) {
        // Diagonal: only phi + lambda is defined.
        return {theta, 0.0, wrap_angle(std::arg(m(1, 1)) - std::arg(m(0, 0)))};
    }
    if (c < tiny) {
        return {theta, std::arg(m(1, 0)), std::arg(-m(0, 1))};
    }
    const double base = std::arg(m(0, 0));
    return {theta, wrap_angle(std::arg(m(1, 0)) - base), wrap_angle(std::arg(-m(0, 1)) - base)};
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("Circuit: n_qubits must be >= 1");
    }
}

void Circuit::check(const Gate &gate) const {
    auto in_range = [&](int q) { return q >= 0 && q < n_qubits_; };
    if (!in_range(gate.qubits[0])) {
        throw std::out_of_range("gate qubit " + std::to_string(gate.qubits[0]) + " outside circuit of width " +
                                std::to_string(n_qubits_));
    }
    if (gate.is_two_qubit()) {
        if (!in_range(gate.qubits[1])) {
            throw std::out_of_range("gate qubit " + std::to_string(gate.qubits[1]) + " outside circuit of width " +
                                    std::to_string(n_qubits_));
        }
        if (gate.qubits[0] == gate.qubits[1]) {
            throw std::invalid_argument("CNOT control and target must differ");
        }
    }
}

Circuit Circuit::append(const Gate &gate) const {
    Circuit copy = *this;
    copy.push_back(gate);
    return copy;
}

void Circuit::push_back(const Gate &gate) {
    check(gate);
    gates_.push_back(gate);
}

void Circuit::extend(const Circuit &other) {
    if (other.n_qubits_ > n_qubits_) {
        throw std::invalid_argument("extend: other circuit is wider");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

std::size_t Circuit::cnot_count() const {
    std::size_t n = 0;
    for (const auto &g : gates_) {
        n += g.is_two_qubit() ? 1 : 0;
    }
    return n;
}

Gate adjoint(const Gate &gate) {
    using std::numbers::pi;
    const int q = gate.qubits[0];
    const auto &a = gate.angles;
    switch (gate.kind) {
        case GateKind::S:
            return Gate::sdg(q);
        case GateKind::Sdg:
            return Gate::s(q);
        case GateKind::T:
            return Gate::u1(q, -pi / 4);
        case GateKind::Rx:
            return Gate::rx(q, -a[0]);
        case GateKind::Ry:
            return Gate::ry(q, -a[0]);
        case GateKind::Rz:
            return Gate::rz(q, -a[0]);
        case GateKind::U1:
            return Gate::u1(q, -a[0]);
        case GateKind::U2:
            // U2(phi, lambda)^dagger = U3(-pi/2, -lambda, -phi) = U2(pi - lambda, pi - phi)
            return Gate::u2(q, pi - a[1], pi - a[0]);
        case GateKind::U3:
            return Gate::u3(q, -a[0], -a[2], -a[1]);
        default:
            return gate;  // X, Y, Z, H, CNOT are self-adjoint
    }
}

Circuit inverse(const Circuit &circuit) {
    Circuit result(circuit.n_qubits());
    const auto &gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        result.push_back(adjoint(*it));
    }
    return result;
}

Circuit fuse_single_qubit_runs(const Circuit &circuit) {
    const int n = circuit.n_qubits();
    std::vector<Matrix2> pending(static_cast<std::size_t>(n), Matrix2::Identity());
    std::vector<bool> dirty(static_cast<std::size_t>(n), false);
    // A run that is a single U3 is re-emitted as is, which makes fusion idempotent.
    std::vector<int> run_length(static_cast<std::size_t>(n), 0);
    std::vector<Gate> last(static_cast<std::size_t>(n));
    Circuit result(n);

    auto flush = [&](int q) {
        if (!dirty[q]) {
            return;
        }
        const Matrix2 &m = pending[q];
        dirty[q] = false;
        // Identity up to phase: off-diagonals vanish and the diagonal phases agree.
        Complex ratio = m(1, 1) / m(0, 0);
        bool identity = std::abs(m(0, 1)) < kIdentityTolerance && std::abs(m(1, 0)) < kIdentityTolerance &&
                        std::abs(ratio - Complex{1.0, 0.0}) < kIdentityTolerance;
        if (!identity && run_length[q] == 1 && last[q].kind == GateKind::U3) {
            result.push_back(last[q]);
        } else if (!identity) {
            U3Angles angles = u3_angles(m);
            result.push_back(Gate::u3(q, angles.theta, angles.phi, angles.lambda));
        }
        pending[q] = Matrix2::Identity();
        run_length[q] = 0;
    };

    for (const auto &gate : circuit.gates()) {
        if (gate.is_two_qubit()) {
            flush(gate.qubits[0]);
            flush(gate.qubits[1]);
            result.push_back(gate);
        } else {
            int q = gate.qubits[0];
            pending[q] = gate_matrix(gate) * pending[q];
            dirty[q] = true;
            ++run_length[q];
            last[q] = gate;
        }
    }
    for (int q = 0; q < n; ++q) {
        flush(q);
    }
    return result;
}

Circuit reversed_cnot(int n_qubits, int control, int target) {
    if (control == target) {
        throw std::invalid_argument("reversed_cnot: control and target must differ");
    }
    Circuit c(n_qubits);
    c.push_back(Gate::h(control));
    c.push_back(Gate::h(target));
    c.push_back(Gate::cnot(control, target));
    c.push_back(Gate::h(control));
    c.push_back(Gate::h(target));
    return c;
}

Circuit basis_change(int n_qubits, BasisAxis axis, int qubit, BasisDirection direction) {
    Circuit c(n_qubits);
    c.push_back(Gate::h(qubit));
    if (axis == BasisAxis::Y) {
        c.push_back(direction == BasisDirection::Forward ? Gate::s(qubit) : Gate::sdg(qubit));
        c.push_back(Gate::h(qubit));
    }
    return c;
}

std::string serialize_circuit(const Circuit &circuit) {
    std::string out = "qubits " + std::to_string(circuit.n_qubits()) + "\n";
    for (const auto &gate : circuit.gates()) {
        out += gate_name(gate.kind);
        out += ' ';
        out += std::to_string(gate.qubits[0]);
        if (gate.is_two_qubit()) {
            out += ',';
            out += std::to_string(gate.qubits[1]);
        }
        int count = angle_count(gate.kind);
        for (int i = 0; i < count; ++i) {
            out += i == 0 ? ';' : ',';
            out += format_angle(gate.angles[i]);
        }
        out += '\n';
    }
    return out;
}

namespace {

template <typename T>
T parse_number(std::string_view text, int line_number) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("circuit line " + std::to_string(line_number) + ": bad number `" +
                                    std::string(text) + "`");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string head;
        std::string args;
        if (!(fields >> head)) {
            continue;
        }
        fields >> args;
        std::string extra;
        if (fields >> extra) {
            throw std::invalid_argument("circuit line " + std::to_string(line_number) + ": trailing text");
        }
        if (!circuit) {
            if (head != "qubits") {
                throw std::invalid_argument("circuit line " + std::to_string(line_number) +
                                            ": expected `qubits N` header");
            }
            circuit.emplace(parse_number<int>(args, line_number));
            continue;
        }
        GateKind kind = parse_gate_kind(head);
        std::string_view arg_view = args;
        std::string_view qubit_part = arg_view.substr(0, arg_view.find(';'));
        std::vector<std::string_view> angle_parts;
        if (auto semi = arg_view.find(';'); semi != std::string_view::npos) {
            angle_parts = split(arg_view.substr(semi + 1), ',');
        }
        std::vector<std::string_view> qubit_parts = split(qubit_part, ',');
        int expected_qubits = kind == GateKind::CNOT ? 2 : 1;
        if (static_cast<int>(qubit_parts.size()) != expected_qubits) {
            throw std::invalid_argument("circuit line " + std::to_string(line_number) + ": " + head + " takes " +
                                        std::to_string(expected_qubits) + " qubit(s)");
        }
        if (static_cast<int>(angle_parts.size()) != angle_count(kind)) {
            throw std::invalid_argument("circuit line " + std::to_string(line_number) + ": " + head + " takes " +
                                        std::to_string(angle_count(kind)) + " angle(s)");
        }
        Gate gate{kind, {parse_number<int>(qubit_parts[0], line_number), -1}, {}};
        if (expected_qubits == 2) {
            gate.qubits[1] = parse_number<int>(qubit_parts[1], line_number);
        }
        for (std::size_t i = 0; i < angle_parts.size(); ++i) {
            gate.angles[i] = parse_number<double>(angle_parts[i], line_number);
        }
        circuit->push_back(gate);
    }
    if (!circuit) {
        throw std::invalid_argument("circuit: missing `qubits N` header");
    }
    return *circuit;
}

}  // namespace quenchsim
