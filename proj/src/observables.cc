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

#include "quenchsim/observables.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "quenchsim/errors.h"
#include "quenchsim/sim.h"

namespace quenchsim {

Distribution Distribution::from_counts(const Counts &counts) {
    if (counts.empty()) {
        throw EmptyCountsError("estimator called on empty counts");
    }
    Distribution d;
    d.n_qubits_ = counts.n_qubits();
    d.shots_ = counts.shots();
    const double total = static_cast<double>(counts.shots());
    for (auto [outcome, n] : counts.table()) {
        d.weights_.emplace_back(outcome, static_cast<double>(n) / total);
    }
    return d;
}

Distribution Distribution::from_state(const StateVector &state) {
    Distribution d;
    d.n_qubits_ = state.n_qubits();
    for (std::size_t i = 0; i < state.dim(); ++i) {
        double p = std::norm(state[i]);
        if (p > 0.0) {
            d.weights_.emplace_back(i, p);
        }
    }
    return d;
}

namespace {

void check_site(const Distribution &dist, int site) {
    if (site < 0 || site >= dist.n_qubits()) {
        throw std::out_of_range("site " + std::to_string(site) + " outside a " + std::to_string(dist.n_qubits()) +
                                "-qubit distribution");
    }
}

// Mean of f with standard error sqrt(Var f / shots).
template <typename F>
Estimate mean_of(const Distribution &dist, F &&f) {
    double m1 = 0.0, m2 = 0.0;
    for (auto [outcome, p] : dist.weights()) {
        double v = f(outcome);
        m1 += p * v;
        m2 += p * v * v;
    }
    if (dist.exact()) {
        return {m1, 0.0};
    }
    double var = std::max(m2 - m1 * m1, 0.0);
    return {m1, std::sqrt(var / static_cast<double>(dist.shots()))};
}

// Covariance of f and g; the standard error uses the delta-method variance
// (E[(f - mf)^2 (g - mg)^2] - cov^2) / shots.
template <typename F, typename G>
Estimate covariance_of(const Distribution &dist, F &&f, G &&g) {
    double mf = 0.0, mg = 0.0;
    for (auto [outcome, p] : dist.weights()) {
        mf += p * f(outcome);
        mg += p * g(outcome);
    }
    double cov = 0.0, m22 = 0.0;
    for (auto [outcome, p] : dist.weights()) {
        double df = f(outcome) - mf;
        double dg = g(outcome) - mg;
        cov += p * df * dg;
        m22 += p * df * df * dg * dg;
    }
    if (dist.exact()) {
        return {cov, 0.0};
    }
    return {cov, std::sqrt(std::max(m22 - cov * cov, 0.0) / static_cast<double>(dist.shots()))};
}

}  // namespace

Estimate magnetization(const Distribution &dist, int site) {
    check_site(dist, site);
    return mean_of(dist, [site](std::uint64_t o) { return static_cast<double>(sigma_z(o, site)); });
}

Estimate n_half(const Distribution &dist) {
    const int n = dist.n_qubits();
    if (n % 2 != 0) {
        throw std::invalid_argument("n_half requires an even number of sites");
    }
    return mean_of(dist, [n](std::uint64_t o) {
        double up = 0.0;
        for (int j = 0; j < n / 2; ++j) {
            up += sigma_z(o, j) > 0 ? 1.0 : 0.0;
        }
        return up;
    });
}

Estimate connected_correlator(const Distribution &dist, int j, int k) {
    check_site(dist, j);
    check_site(dist, k);
    if (j == k) {
        throw std::invalid_argument("connected_correlator requires distinct sites");
    }
    // Fixed argument order keeps C_jk and C_kj bit-identical.
    if (j > k) {
        std::swap(j, k);
    }
    return covariance_of(
        dist, [j](std::uint64_t o) { return static_cast<double>(sigma_z(o, j)); },
        [k](std::uint64_t o) { return static_cast<double>(sigma_z(o, k)); });
}

std::vector<int> half_chain_signs(int n_sites) {
    std::vector<int> signs(static_cast<std::size_t>(n_sites));
    for (int j = 0; j < n_sites; ++j) {
        signs[j] = j < n_sites / 2 ? 1 : -1;
    }
    return signs;
}

Estimate qfi(const Distribution &dist, std::span<const int> signs) {
    const int n = dist.n_qubits();
    if (static_cast<int>(signs.size()) != n) {
        throw std::invalid_argument("qfi: need one sign per site");
    }
    for (int s : signs) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("qfi: signs must be +1 or -1");
        }
    }
    auto weighted = [&](std::uint64_t o) {
        double total = 0.0;
        for (int j = 0; j < n; ++j) {
            total += signs[j] * sigma_z(o, j);
        }
        return total;
    };
    // Variance of S = sum_j s_j Z_j; error from the fourth central moment.
    double mean = 0.0;
    for (auto [o, p] : dist.weights()) {
        mean += p * weighted(o);
    }
    double m2 = 0.0, m4 = 0.0;
    for (auto [o, p] : dist.weights()) {
        double d = weighted(o) - mean;
        m2 += p * d * d;
        m4 += p * d * d * d * d;
    }
    if (dist.exact()) {
        return {m2, 0.0};
    }
    return {m2, std::sqrt(std::max(m4 - m2 * m2, 0.0) / static_cast<double>(dist.shots()))};
}

Estimate parity(const Distribution &dist) {
    return mean_of(dist, [](std::uint64_t o) { return std::popcount(o) % 2 == 0 ? 1.0 : -1.0; });
}

Estimate mermin(const Distribution &xxx, const Distribution &xyy, const Distribution &yxy, const Distribution &yyx) {
    for (const Distribution *d : {&xxx, &xyy, &yxy, &yyx}) {
        if (d->n_qubits() != 3) {
            throw std::invalid_argument("mermin: distributions must be over 3 qubits");
        }
    }
    Estimate a = parity(xyy), b = parity(yxy), c = parity(yyx), d = parity(xxx);
    double value = std::abs(a.value + b.value + c.value - d.value);
    double err = std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error + c.std_error * c.std_error +
                           d.std_error * d.std_error);
    return {value, err};
}

Estimate physical_fraction(const Distribution &dist, int target_sz) {
    const int n = dist.n_qubits();
    return mean_of(dist, [n, target_sz](std::uint64_t o) { return total_sz(o, n) == target_sz ? 1.0 : 0.0; });
}

Estimate magnetization(const Counts &counts, int site) {
    return magnetization(Distribution::from_counts(counts), site);
}
Estimate n_half(const Counts &counts) {
    return n_half(Distribution::from_counts(counts));
}
Estimate connected_correlator(const Counts &counts, int j, int k) {
    return connected_correlator(Distribution::from_counts(counts), j, k);
}
Estimate qfi(const Counts &counts, std::span<const int> signs) {
    return qfi(Distribution::from_counts(counts), signs);
}
Estimate mermin(const Counts &xxx, const Counts &xyy, const Counts &yxy, const Counts &yyx) {
    return mermin(Distribution::from_counts(xxx), Distribution::from_counts(xyy), Distribution::from_counts(yxy),
                  Distribution::from_counts(yyx));
}
Estimate physical_fraction(const Counts &counts, int target_sz) {
    return physical_fraction(Distribution::from_counts(counts), target_sz);
}

Circuit mermin_circuit(const std::string &axes) {
    if (axes.size() != 3) {
        throw std::invalid_argument("mermin_circuit: expected three axes, got `" + axes + "`");
    }
    Circuit c(3);
    c.push_back(Gate::x(0));
    c.push_back(Gate::h(0));
    c.push_back(Gate::cnot(0, 1));
    c.push_back(Gate::cnot(1, 2));
    for (int q = 0; q < 3; ++q) {
        BasisAxis axis;
        if (axes[q] == 'X') {
            axis = BasisAxis::X;
        } else if (axes[q] == 'Y') {
            axis = BasisAxis::Y;
        } else {
            throw std::invalid_argument("mermin_circuit: axis must be X or Y, got `" + axes + "`");
        }
        c.extend(basis_change(3, axis, q, BasisDirection::Inverse));
    }
    return c;
}

Circuit echo_circuit(const ModelParams &params, const TrotterPlan &plan, const InitialState &init,
                     const SynthOptions &options) {
    Circuit forward = compile_layers(params, plan_layers(params, plan), options);
    Circuit circuit = preparation_circuit(init);
    circuit.extend(forward);
    circuit.extend(inverse(forward));
    return fuse_single_qubit_runs(circuit);
}

Estimate loschmidt_echo(const ModelParams &params, const TrotterPlan &plan, const InitialState &init,
                        const std::optional<NoiseSetup> &noise, std::uint64_t shots, std::uint64_t seed,
                        int threads) {
    const Circuit circuit = echo_circuit(params, plan, init);
    const std::uint64_t target = init.basis_index();
    if (shots == 0) {
        if (noise) {
            throw std::invalid_argument("loschmidt_echo: noisy echoes need shots > 0");
        }
        StateVector state = apply_circuit(StateVector(circuit.n_qubits()), circuit);
        return {std::norm(state[target]), 0.0};
    }
    Counts counts = noise ? noisy_counts(circuit, noise->layout, noise->model, shots, seed, threads)
                          : sample_counts(apply_circuit(StateVector(circuit.n_qubits()), circuit), shots, seed,
                                          threads);
    return mean_of(Distribution::from_counts(counts), [target](std::uint64_t o) { return o == target ? 1.0 : 0.0; });
}

}  // namespace quenchsim
