# Copyright 2026 The quenchsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
from math import comb

import numpy as np
import pytest

import quenchsim as qs


def pauli_kron(a, b):
    return np.kron(b, a)  # qubit 0 is the least significant bit


X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]])
Z = np.diag([1.0 + 0j, -1.0])


def canonical(alpha, beta, gamma):
    h = alpha * pauli_kron(X, X) + beta * pauli_kron(Y, Y) + gamma * pauli_kron(Z, Z)
    w, v = np.linalg.eigh(h)
    return v @ np.diag(np.exp(1j * w)) @ v.conj().T


def phase_distance(a, b):
    k = np.unravel_index(np.argmax(np.abs(a)), a.shape)
    phase = a[k] / b[k]
    return np.max(np.abs(a - b * phase / abs(phase)))


def test_synthesis_matches_matrix_exponential():
    rng = np.random.default_rng(3)
    for alpha, beta, gamma in rng.uniform(-np.pi, np.pi, size=(20, 3)):
        c = qs.synth_general(alpha, beta, gamma)
        assert c.cnot_count() == 3
        assert phase_distance(canonical(alpha, beta, gamma), c.unitary()) < 1e-9
        c2 = qs.synth_xz(alpha, gamma)
        assert c2.cnot_count() == 2
        assert phase_distance(canonical(alpha, 0.0, gamma), c2.unitary()) < 1e-9


def test_two_site_rabi_oscillation():
    params = qs.ModelParams(2, J=1.0)
    psi0 = qs.initial_state("10", 2)
    for t in (0.0, 0.3, 0.9):
        psi = qs.exact_evolve(params, psi0, t)
        p_down_site1 = abs(psi[1]) ** 2 + abs(psi[3]) ** 2
        assert 1 - 2 * p_down_site1 == pytest.approx(-np.cos(4 * t), abs=1e-10)


def test_trotter_tracks_exact_evolution():
    params = qs.build_case("III", 4, J=1.0, U=0.5)
    psi0 = qs.initial_state("neel", 4)
    exact = qs.exact_evolve(params, psi0, 1.0)
    trotter = qs.run_circuit(qs.quench_circuit(params, "neel", "symmetric", dt=0.05, n_steps=19))
    assert abs(np.vdot(exact, trotter)) == pytest.approx(1.0, abs=1e-3)


def test_counts_and_postselection():
    counts = qs.sample_counts(qs.initial_state("domain_wall", 6), 1000, seed=1)
    assert counts.to_dict() == {"111000": 1000}
    assert qs.magnetization(counts, 0).value == -1.0
    assert qs.n_half(counts).value == 0.0
    kept, fraction = qs.postselect(counts, 0)
    assert fraction == 1.0 and kept.shots == 1000


def test_readout_noise_retention():
    cal = qs.uniform_chain_calibration(6, 0.05, 0.0, 1e9)
    circuit = qs.quench_circuit(qs.ModelParams(6), "domain_wall", dt=0.25, n_steps=0, sub_dt=0.0)
    counts = qs.noisy_counts(circuit, list(range(6)), cal, 20000, seed=5, dephasing=False)
    # Sector kept when as many up spins flip as down spins: sum_k C(3,k)^2 p^2k (1-p)^(6-2k).
    p = 0.05
    expected = sum(comb(3, k) ** 2 * p ** (2 * k) * (1 - p) ** (6 - 2 * k) for k in range(4))
    assert qs.physical_fraction(counts, 0).value == pytest.approx(expected, abs=0.012)


def test_best_chain_on_line():
    cal = qs.uniform_chain_calibration(6, 0.01, 0.02, 100.0)
    assert qs.best_chain(cal, 6) == [0, 1, 2, 3, 4, 5]
    assert qs.brute_force_chain(cal, 6) == [0, 1, 2, 3, 4, 5]


def test_ghz_runner():
    config = {"schema_version": 1, "model": {"n_sites": 3}, "initial_state": "000", "shots": 2000, "seed": 2}
    csv, meta = qs.run_ghz_mermin(json.dumps(config))
    rows = [line.split(",") for line in csv.strip().splitlines()[1:]]
    exact = [r for r in rows if r[1] == "M_GHZ" and r[5] == "exact"][0]
    assert float(exact[2]) == pytest.approx(4.0, abs=1e-12)
    assert json.loads(meta)["command"] == "ghz-mermin"


def test_bad_config_is_rejected():
    with pytest.raises(ValueError):
        qs.run_quench(json.dumps({"schema_version": 1, "model": {"n_sites": 4}, "colour": 1}))
