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

#include "quenchsim/sim.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "quenchsim/parallel.h"
#include "quenchsim/rng.h"

namespace quenchsim {

void apply_gate(StateVector &state, const Gate &gate) {
    auto amps = state.mutable_amplitudes();
    const std::size_t dim = amps.size();
    if (gate.is_two_qubit()) {
        const std::uint64_t cbit = std::uint64_t{1} << gate.qubits[0];
        const std::uint64_t tbit = std::uint64_t{1} << gate.qubits[1];
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & cbit) && !(i & tbit)) {
                std::swap(amps[i], amps[i | tbit]);
            }
        }
        return;
    }
    const Matrix2 m = gate_matrix(gate);
    const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    const std::uint64_t bit = std::uint64_t{1} << gate.qubits[0];
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & bit) {
            continue;
        }
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | bit];
        amps[i] = m00 * a0 + m01 * a1;
        amps[i | bit] = m10 * a0 + m11 * a1;
    }
}

StateVector apply_circuit(StateVector state, const Circuit &circuit) {
    if (state.n_qubits() != circuit.n_qubits()) {
        throw std::invalid_argument("apply_circuit: state has " + std::to_string(state.n_qubits()) +
                                    " qubits, circuit has " + std::to_string(circuit.n_qubits()));
    }
    for (const Gate &gate : circuit.gates()) {
        apply_gate(state, gate);
    }
    return state;
}

ComplexMatrix unitary_of(const Circuit &circuit) {
    const int n = circuit.n_qubits();
    if (n > kMaxUnitaryQubits) {
        throw std::invalid_argument("unitary_of: at most " + std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix u(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        StateVector column = apply_circuit(StateVector::basis_state(n, k), circuit);
        for (std::size_t i = 0; i < dim; ++i) {
            u(i, k) = column[i];
        }
    }
    return u;
}

ExactPropagator::ExactPropagator(const ModelParams &params) : n_sites_(params.n_sites) {
    params.validate();
    if (n_sites_ > kMaxDenseSites) {
        throw std::invalid_argument("ExactPropagator: at most " + std::to_string(kMaxDenseSites) + " sites");
    }
    const std::uint64_t dim = std::uint64_t{1} << n_sites_;
    std::vector<std::vector<std::uint64_t>> by_weight(n_sites_ + 1);
    for (std::uint64_t i = 0; i < dim; ++i) {
        by_weight[std::popcount(i)].push_back(i);
    }
    for (auto &basis : by_weight) {
        std::unordered_map<std::uint64_t, Eigen::Index> position;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            position[basis[k]] = static_cast<Eigen::Index>(k);
        }
        const auto size = static_cast<Eigen::Index>(basis.size());
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(size, size);
        for (Eigen::Index col = 0; col < size; ++col) {
            for_each_hamiltonian_entry(params, basis[col], [&](std::uint64_t row, double value) {
                h(position.at(row), col) += value;
            });
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("ExactPropagator: eigensolver failed");
        }
        sectors_.push_back({std::move(basis), solver.eigenvalues(), solver.eigenvectors()});
    }
}

StateVector ExactPropagator::evolve(const StateVector &state, double t) const {
    if (state.n_qubits() != n_sites_) {
        throw std::invalid_argument("ExactPropagator::evolve: width mismatch");
    }
    if (t == 0.0) {
        return state;
    }
    std::vector<Complex> out(state.dim());
    for (const Sector &sector : sectors_) {
        const auto size = static_cast<Eigen::Index>(sector.basis.size());
        Eigen::VectorXcd local(size);
        for (Eigen::Index k = 0; k < size; ++k) {
            local(k) = state[sector.basis[k]];
        }
        Eigen::VectorXcd coeffs = sector.vectors.transpose().cast<Complex>() * local;
        for (Eigen::Index k = 0; k < size; ++k) {
            coeffs(k) *= std::exp(-kI * (sector.energies(k) * t));
        }
        Eigen::VectorXcd evolved = sector.vectors.cast<Complex>() * coeffs;
        for (Eigen::Index k = 0; k < size; ++k) {
            out[sector.basis[k]] = evolved(k);
        }
    }
    return StateVector::from_amplitudes(std::move(out));
}

ComplexMatrix ExactPropagator::unitary(double t) const {
    const std::size_t dim = std::size_t{1} << n_sites_;
    ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
    for (const Sector &sector : sectors_) {
        Eigen::VectorXcd phases(sector.energies.size());
        for (Eigen::Index k = 0; k < phases.size(); ++k) {
            phases(k) = std::exp(-kI * (sector.energies(k) * t));
        }
        const Eigen::MatrixXcd v = sector.vectors.cast<Complex>();
        const Eigen::MatrixXcd block = v * phases.asDiagonal() * v.transpose();
        for (std::size_t r = 0; r < sector.basis.size(); ++r) {
            for (std::size_t c = 0; c < sector.basis.size(); ++c) {
                u(sector.basis[r], sector.basis[c]) = block(r, c);
            }
        }
    }
    return u;
}

double ExactPropagator::energy(const StateVector &state) const {
    // E = sum_k E_k |<v_k|psi>|^2 per sector.
    double total = 0.0;
    for (const Sector &sector : sectors_) {
        const auto size = static_cast<Eigen::Index>(sector.basis.size());
        Eigen::VectorXcd local(size);
        for (Eigen::Index k = 0; k < size; ++k) {
            local(k) = state[sector.basis[k]];
        }
        Eigen::VectorXcd coeffs = sector.vectors.transpose().cast<Complex>() * local;
        for (Eigen::Index k = 0; k < size; ++k) {
            total += sector.energies(k) * std::norm(coeffs(k));
        }
    }
    return total;
}

StateVector exact_evolve(const ModelParams &params, const StateVector &state, double t) {
    return ExactPropagator(params).evolve(state, t);
}

std::vector<double> cumulative_probabilities(const StateVector &state) {
    std::vector<double> cdf(state.dim());
    double running = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        running += std::norm(state[i]);
        cdf[i] = running;
    }
    return cdf;
}

std::uint64_t sample_outcome(const std::vector<double> &cdf, double u) {
    if (cdf.empty()) {
        throw std::invalid_argument("sample_outcome: empty distribution");
    }
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u * cdf.back());
    std::size_t index = static_cast<std::size_t>(it - cdf.begin());
    if (index >= cdf.size()) {
        index = cdf.size() - 1;
    }
    // Never land on a zero-probability outcome because of rounding at the top.
    while (index > 0 && cdf[index] == cdf[index - 1]) {
        --index;
    }
    return index;
}

Counts sample_counts(const StateVector &state, std::uint64_t shots, std::uint64_t seed, int threads) {
    const std::vector<double> cdf = cumulative_probabilities(state);
    const std::size_t chunks = static_cast<std::size_t>(std::max(threads, 1));
    std::vector<Counts> partial(chunks, Counts(state.n_qubits()));
    parallel_for(chunks, threads, [&](std::size_t c) {
        auto [begin, end] = chunk_range(shots, chunks, c);
        for (std::uint64_t k = begin; k < end; ++k) {
            CounterRng rng(seed, k, StreamTag::Measurement);
            partial[c].add(sample_outcome(cdf, rng.uniform()));
        }
    });
    Counts counts(state.n_qubits());
    for (const Counts &p : partial) {
        for (auto [outcome, n] : p.table()) {
            counts.add(outcome, n);
        }
    }
    return counts;
}

double entanglement_entropy(const StateVector &state, int cut) {
    const int n = state.n_qubits();
    if (cut < 1 || cut >= n) {
        throw std::invalid_argument("entanglement_entropy: cut must lie in [1, N)");
    }
    const Eigen::Index left = Eigen::Index{1} << cut;
    const Eigen::Index right = Eigen::Index{1} << (n - cut);
    Eigen::MatrixXcd psi(left, right);
    for (Eigen::Index r = 0; r < right; ++r) {
        for (Eigen::Index l = 0; l < left; ++l) {
            psi(l, r) = state[static_cast<std::size_t>(l + (r << cut))];
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(psi);
    double entropy = 0.0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        double p = svd.singularValues()(k) * svd.singularValues()(k);
        if (p > 1e-300) {
            entropy -= p * std::log(p);
        }
    }
    return std::max(entropy, 0.0);
}

}  // namespace quenchsim
