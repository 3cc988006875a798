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

#include <gtest/gtest.h>

#include "oracles.h"
#include "quenchsim/rng.h"
#include "quenchsim/sim.h"

namespace qs = quenchsim;
using std::numbers::pi;

namespace {

// B = exp(-i(U ZZ - J(XX + YY)) dt)
oracle::Mat bond(double J, double U, double dt) {
    oracle::Mat gen = U * oracle::kron(oracle::pauli('Z'), oracle::pauli('Z')) -
                      J * (oracle::kron(oracle::pauli('X'), oracle::pauli('X')) +
                           oracle::kron(oracle::pauli('Y'), oracle::pauli('Y')));
    return oracle::propagator(gen, dt);
}

}  // namespace

TEST(Synth, BlockAngles) {
    qs::CanonicalAngles a = qs::block_angles(1.0, 0.0, 0.3);
    EXPECT_EQ(a.alpha, 0.3);
    EXPECT_EQ(a.beta, 0.3);
    EXPECT_EQ(a.gamma, 0.0);
    qs::CanonicalAngles b = qs::block_angles(0.0, 1.0, 0.5);
    EXPECT_EQ(b.alpha, 0.0);
    EXPECT_EQ(b.gamma, -0.5);
    for (auto [J, U, dt] : {std::tuple{1.0, 0.0, 0.3}, {0.0, 1.0, 0.5}, {0.7, -0.4, 0.2}, {1.0, 1.0, 0.0}}) {
        qs::CanonicalAngles c = qs::block_angles(J, U, dt);
        EXPECT_LT((oracle::canonical(c.alpha, c.beta, c.gamma) - bond(J, U, dt)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Synth, GeneralAtSpecialAngles) {
    EXPECT_LT(qs::phase_aligned_distance(qs::unitary_of(qs::synth_general({0, 0, 0})), oracle::Mat::Identity(4, 4)),
              1e-10);
    qs::Circuit c = qs::synth_general({pi / 4, pi / 4, pi / 4});
    EXPECT_LT(qs::phase_aligned_distance(oracle::canonical(pi / 4, pi / 4, pi / 4), qs::unitary_of(c)), 1e-10);
}

TEST(Synth, GeneralFuzz) {
    qs::CounterRng rng(1, 0, qs::StreamTag::Task);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        double a = (2 * rng.uniform() - 1) * pi, b = (2 * rng.uniform() - 1) * pi, g = (2 * rng.uniform() - 1) * pi;
        qs::Circuit c = qs::synth_general({a, b, g});
        ASSERT_EQ(c.cnot_count(), 3u);
        worst = std::max(worst, qs::phase_aligned_distance(oracle::canonical(a, b, g), oracle::circuit_unitary(c)));
    }
    EXPECT_LT(worst, 1e-9);
}

TEST(Synth, XzFuzz) {
    EXPECT_LT(qs::phase_aligned_distance(qs::unitary_of(qs::synth_xz(0, 0)), oracle::Mat::Identity(4, 4)), 1e-10);
    qs::CounterRng rng(2, 0, qs::StreamTag::Task);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        double a = (2 * rng.uniform() - 1) * pi, g = (2 * rng.uniform() - 1) * pi;
        qs::Circuit c = qs::synth_xz(a, g);
        ASSERT_EQ(c.cnot_count(), 2u);
        worst = std::max(worst, qs::phase_aligned_distance(oracle::canonical(a, 0, g), oracle::circuit_unitary(c)));
    }
    EXPECT_LT(worst, 1e-9);
}

TEST(Synth, MagicMatrixDiagonalizesXzFamily) {
    const double r = 1.0 / std::sqrt(2.0);
    const oracle::C i(0, 1);
    oracle::Mat m(4, 4);
    m << r, i * r, 0, 0, 0, 0, i * r, r, 0, 0, i * r, -r, r, -i * r, 0, 0;
    qs::CounterRng rng(3, 0, qs::StreamTag::Task);
    for (int k = 0; k < 50; ++k) {
        double a = (2 * rng.uniform() - 1) * pi, g = (2 * rng.uniform() - 1) * pi;
        oracle::Mat diag = m.adjoint() * qs::unitary_of(qs::synth_xz(a, g)) * m;
        oracle::Mat expected = oracle::kron(oracle::rotation('Z', -2 * g), oracle::rotation('Z', -2 * a));
        EXPECT_LT(qs::phase_aligned_distance(expected, diag), 1e-10);
    }
}

TEST(Synth, BlockRouting) {
    qs::Circuit xx = qs::synth_block(1.0, 0.0, 0.2);
    EXPECT_EQ(xx.cnot_count(), 2u);
    EXPECT_LT(qs::phase_aligned_distance(bond(1.0, 0.0, 0.2), oracle::circuit_unitary(xx)), 1e-10);

    qs::Circuit xxz = qs::synth_block(1.0, 0.5, 0.2);
    EXPECT_EQ(xxz.cnot_count(), 3u);
    EXPECT_LT(qs::phase_aligned_distance(bond(1.0, 0.5, 0.2), oracle::circuit_unitary(xxz)), 1e-10);

    qs::Circuit forced = qs::synth_block(1.0, 0.0, 0.2, {false});
    EXPECT_EQ(forced.cnot_count(), 3u);
    EXPECT_LT(qs::phase_aligned_distance(bond(1.0, 0.0, 0.2), oracle::circuit_unitary(forced)), 1e-10);

    qs::Circuit zz = qs::synth_block(0.0, 0.8, 0.3);
    EXPECT_EQ(zz.cnot_count(), 2u);
    EXPECT_LT(qs::phase_aligned_distance(bond(0.0, 0.8, 0.3), oracle::circuit_unitary(zz)), 1e-10);

    EXPECT_TRUE(qs::synth_block(0.0, 0.0, 0.7).empty());
}

TEST(Synth, SwapSymmetry) {
    oracle::Mat swap = oracle::Mat::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1;
    qs::CounterRng rng(4, 0, qs::StreamTag::Task);
    for (int k = 0; k < 50; ++k) {
        qs::CanonicalAngles a{rng.uniform() * pi, rng.uniform() * pi, rng.uniform() * pi};
        oracle::Mat u = qs::unitary_of(qs::synth_general(a));
        EXPECT_LT(qs::phase_aligned_distance(u, swap * u * swap), 1e-10);
    }
}

TEST(Synth, BlocksConserveSz) {
    oracle::Mat sz = oracle::total_sz(2);
    for (auto [J, U] : {std::pair{1.0, 0.0}, {1.0, 0.5}, {0.3, -1.2}, {0.0, 1.0}}) {
        oracle::Mat u = qs::unitary_of(qs::synth_block(J, U, 0.37));
        EXPECT_LT((u * sz - sz * u).cwiseAbs().maxCoeff(), 1e-10);
    }
}
