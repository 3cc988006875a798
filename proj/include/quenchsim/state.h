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

#ifndef QUENCHSIM_STATE_H
#define QUENCHSIM_STATE_H

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quenchsim/linalg.h"

namespace quenchsim {

// Bit q of a basis index is qubit q (site q+1). Bit value 0 is spin up
// (sigma^z = +1), bit value 1 is spin down (sigma^z = -1).

inline int sigma_z(std::uint64_t outcome, int qubit) {
    return ((outcome >> qubit) & 1U) ? -1 : 1;
}

/// Sum of sigma^z over all n qubits of a basis outcome.
int total_sz(std::uint64_t outcome, int n_qubits);

/// Bitstring with site 1 first, e.g. outcome 0b001 on 3 qubits -> "100".
std::string to_bitstring(std::uint64_t outcome, int n_qubits);
std::uint64_t from_bitstring(std::string_view bits);

class StateVector {
   public:
    /// |0...0>, i.e. all spins up.
    explicit StateVector(int n_qubits);

    static StateVector basis_state(int n_qubits, std::uint64_t index);

    /// Takes ownership of amplitudes; rejects a size that is not a power of two
    /// or a norm that deviates from 1 by more than 1e-10.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    int n_qubits() const {
        return n_qubits_;
    }
    std::size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    std::span<Complex> mutable_amplitudes() {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }

    double norm_squared() const;
    std::vector<double> probabilities() const;
    Complex inner(const StateVector &other) const;

   private:
    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Shot statistics: basis outcome -> number of times it was observed.
class Counts {
   public:
    explicit Counts(int n_qubits);

    void add(std::uint64_t outcome, std::uint64_t count = 1);

    int n_qubits() const {
        return n_qubits_;
    }
    std::uint64_t shots() const {
        return shots_;
    }
    bool empty() const {
        return shots_ == 0;
    }
    const std::map<std::uint64_t, std::uint64_t> &table() const {
        return table_;
    }
    std::uint64_t count(std::uint64_t outcome) const;

    /// `bitstring count` per line, sorted by bitstring.
    std::string serialize() const;
    static Counts parse(std::string_view text);

    bool operator==(const Counts &other) const = default;

   private:
    int n_qubits_;
    std::uint64_t shots_ = 0;
    std::map<std::uint64_t, std::uint64_t> table_;
};

}  // namespace quenchsim

#endif  // QUENCHSIM_STATE_H
