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

#ifndef QUENCHSIM_MODEL_H
#define QUENCHSIM_MODEL_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quenchsim/state.h"

namespace quenchsim {

/// Parameters of the open spin-1/2 chain
///
///   H = -J sum_j (X_j X_{j+1} + Y_j Y_{j+1}) + U sum_j Z_j Z_{j+1} + sum_j h_j Z_j.
///
/// Site j (1-based in physics notation) is qubit j-1 everywhere in this library.
struct ModelParams {
    int n_sites = 0;
    double hopping = 0.0;      // J
    double interaction = 0.0;  // U
    std::vector<double> fields;  // h_j, one per site

    /// Throws std::invalid_argument unless n_sites >= 2 and fields.size() == n_sites.
    void validate() const;
    bool has_fields() const;
};

enum class ModelCase { XX, DisorderedXX, XXZ, XXZLinearPotential };

/// Parses "I".."IV" (or "1".."4").
ModelCase parse_model_case(const std::string &text);

/// Builds the parameters of one of the four model families.
///
/// XX forces U = 0 and h_j = 0. DisorderedXX draws h_j uniformly from [-h, h]
/// with a counter-based stream keyed by `seed`. XXZ requires U != 0 and uses
/// h_j = 0. XXZLinearPotential requires U > 0 and sets h_j = h * j, j = 1..N.
/// Contradictory inputs (e.g. XX with U != 0) throw std::invalid_argument.
ModelParams build_case(ModelCase model_case, int n_sites, double J, double U, double h, std::uint64_t seed = 0);

/// Uniform disorder in [-strength, strength]; realization `index` uses its own stream.
std::vector<double> sample_disorder(int n_sites, double strength, std::uint64_t seed, std::uint64_t index = 0);

enum class InitialKind { DomainWall, Neel, Bitstring };

struct InitialState {
    InitialKind kind = InitialKind::DomainWall;
    /// Spin per site, true = down. Filled in by `make_initial_state`.
    std::vector<bool> down;

    int n_sites() const {
        return static_cast<int>(down.size());
    }
    /// Basis index of the product state.
    std::uint64_t basis_index() const;
    /// Total sigma^z of the state, i.e. its magnetization sector.
    int total_sz() const;
};

/// DomainWall: left half down, right half up (requires even N).
/// Neel: up, down, up, ... starting at site 1.
InitialState make_initial_state(InitialKind kind, int n_sites);

/// Parses a site-1-first bitstring such as "000111" (1 = down).
InitialState initial_state_from_bitstring(const std::string &bits);

StateVector initial_statevector(const InitialState &init, int n_sites);

/// Largest chain handled by the dense exact-diagonalization routines.
inline constexpr int kMaxDenseSites = 12;

/// Real symmetric matrix of H in the computational basis (dimension 2^N).
/// Refuses N > kMaxDenseSites.
Eigen::MatrixXd hamiltonian_matrix(const ModelParams &params);

/// Applies H to one basis state: calls `emit(column_index, value)` for every
/// nonzero entry of H |index>. Shared by the dense and sector-block builders.
template <typename Emit>
void for_each_hamiltonian_entry(const ModelParams &params, std::uint64_t index, Emit &&emit) {
    double diagonal = 0.0;
    for (int j = 0; j < params.n_sites; ++j) {
        diagonal += params.fields[j] * sigma_z(index, j);
    }
    for (int j = 0; j + 1 < params.n_sites; ++j) {
        int zz = sigma_z(index, j) * sigma_z(index, j + 1);
        diagonal += params.interaction * zz;
        if (zz < 0) {
            // (XX + YY)|01> = 2|10>
            emit(index ^ (std::uint64_t{3} << j), -2.0 * params.hopping);
        }
    }
    emit(index, diagonal);
}

/// Total S_z operator sum_j Z_j as a diagonal vector.
Eigen::VectorXd total_sz_diagonal(int n_sites);

}  // namespace quenchsim

#endif  // QUENCHSIM_MODEL_H
