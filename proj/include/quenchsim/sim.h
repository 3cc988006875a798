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

#ifndef QUENCHSIM_SIM_H
#define QUENCHSIM_SIM_H

#include <cstdint>
#include <vector>

#include "quenchsim/circuit.h"
#include "quenchsim/model.h"
#include "quenchsim/state.h"

namespace quenchsim {

void apply_gate(StateVector &state, const Gate &gate);

/// Runs the circuit on a copy of `state`. Throws std::invalid_argument on width mismatch.
StateVector apply_circuit(StateVector state, const Circuit &circuit);

inline constexpr int kMaxUnitaryQubits = 10;

/// Full unitary; column k is the circuit applied to basis state k.
ComplexMatrix unitary_of(const Circuit &circuit);

/// Exact propagator exp(-iHt) from the eigendecomposition of H.
///
/// H conserves total S_z, so it is diagonalized one magnetization sector at a
/// time; the largest block at N = 12 is 924 x 924.
class ExactPropagator {
   public:
    explicit ExactPropagator(const ModelParams &params);

    int n_sites() const {
        return n_sites_;
    }
    StateVector evolve(const StateVector &state, double t) const;
    ComplexMatrix unitary(double t) const;
    double energy(const StateVector &state) const;

   private:
    struct Sector {
        std::vector<std::uint64_t> basis;
        Eigen::VectorXd energies;
        Eigen::MatrixXd vectors;  // columns are eigenvectors in `basis` order
    };

    int n_sites_;
    std::vector<Sector> sectors_;
};

/// exp(-iHt)|state> via ExactPropagator. N <= kMaxDenseSites.
StateVector exact_evolve(const ModelParams &params, const StateVector &state, double t);

/// Cumulative distribution of |amplitude|^2 used by every z-basis sampler.
std::vector<double> cumulative_probabilities(const StateVector &state);

/// Outcome whose CDF bucket contains u in [0, 1).
std::uint64_t sample_outcome(const std::vector<double> &cdf, double u);

/// i.i.d. z-basis samples. Shot k draws from its own stream (seed, k), so the
/// result does not depend on `threads`.
Counts sample_counts(const StateVector &state, std::uint64_t shots, std::uint64_t seed, int threads = 1);

/// Von Neumann entropy (natural log) of the reduced state of sites 0..cut-1.
double entanglement_entropy(const StateVector &state, int cut);

}  // namespace quenchsim

#endif  // QUENCHSIM_SIM_H
