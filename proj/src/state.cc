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

#include "quenchsim/state.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace quenchsim {

int total_sz(std::uint64_t outcome, int n_qubits) {
    return n_qubits - 2 * std::popcount(outcome);
}

std::string to_bitstring(std::uint64_t outcome, int n_qubits) {
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((outcome >> q) & 1U) {
            bits[q] = '1';
        }
    }
    return bits;
}

std::uint64_t from_bitstring(std::string_view bits) {
    if (bits.empty() || bits.size() > 63) {
        throw std::invalid_argument("bitstring length must be in [1, 63]");
    }
    std::uint64_t outcome = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] == '1') {
            outcome |= std::uint64_t{1} << q;
        } else if (bits[q] != '0') {
            throw std::invalid_argument("bitstring may only contain 0 and 1: " + std::string(bits));
        }
    }
    return outcome;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw std::invalid_argument("StateVector: n_qubits must be in [1, 30]");
    }
    amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    StateVector state(n_qubits);
    if (index >= state.dim()) {
        throw std::out_of_range("basis_state: index out of range");
    }
    state.amplitudes_[0] = 0.0;
    state.amplitudes_[index] = 1.0;
    return state;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("from_amplitudes: size must be a power of two >= 2");
    }
    StateVector state(std::countr_zero(dim));
    state.amplitudes_ = std::move(amplitudes);
    if (std::abs(state.norm_squared() - 1.0) > 1e-10) {
        throw std::invalid_argument("from_amplitudes: state is not normalized");
    }
    return state;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(), [](const Complex &a) { return std::norm(a); });
    return p;
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("inner: width mismatch");
    }
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        total += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    }
    return total;
}

Counts::Counts(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 63) {
        throw std::invalid_argument("Counts: n_qubits must be in [1, 63]");
    }
}

void Counts::add(std::uint64_t outcome, std::uint64_t count) {
    if (n_qubits_ < 64 && (outcome >> n_qubits_) != 0) {
        throw std::out_of_range("Counts::add: outcome wider than the register");
    }
    if (count == 0) {
        return;
    }
    table_[outcome] += count;
    shots_ += count;
}

std::uint64_t Counts::count(std::uint64_t outcome) const {
    auto it = table_.find(outcome);
    return it == table_.end() ? 0 : it->second;
}

std::string Counts::serialize() const {
    std::vector<std::pair<std::string, std::uint64_t>> rows;
    rows.reserve(table_.size());
    for (const auto &[outcome, count] : table_) {
        rows.emplace_back(to_bitstring(outcome, n_qubits_), count);
    }
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (const auto &[bits, count] : rows) {
        out += bits;
        out += ' ';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

Counts Counts::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Counts> counts;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string bits;
        std::string number;
        if (!(fields >> bits) || bits[0] == '#') {
            continue;
        }
        std::string extra;
        if (!(fields >> number) || (fields >> extra)) {
            throw std::invalid_argument("counts line " + std::to_string(line_number) + ": expected `bitstring count`");
        }
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
        if (ec != std::errc() || ptr != number.data() + number.size()) {
            throw std::invalid_argument("counts line " + std::to_string(line_number) + ": bad count `" + number + "`");
        }
        if (!counts) {
            counts.emplace(static_cast<int>(bits.size()));
        } else if (static_cast<int>(bits.size()) != counts->n_qubits()) {
            throw std::invalid_argument("counts line " + std::to_string(line_number) + ": inconsistent bitstring width");
        }
        counts->add(from_bitstring(bits), value);
    }
    if (!counts) {
        throw std::invalid_argument("counts: no records");
    }
    return *counts;
}

}  // namespace quenchsim
