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

#include "quenchsim/model.h"

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.h"
#include "quenchsim/rng.h"

namespace qs = quenchsim;

TEST(Model, CaseOneHasNoInteractionOrFields) {
    qs::ModelParams p = qs::build_case(qs::ModelCase::XX, 6, 1.0, 0.0, 0.0);
    EXPECT_EQ(p.n_sites, 6);
    EXPECT_EQ(p.interaction, 0.0);
    EXPECT_EQ(p.fields, std::vector<double>(6, 0.0));
    EXPECT_FALSE(p.has_fields());
}

TEST(Model, LinearPotentialGrowsWithSite) {
    qs::ModelParams p = qs::build_case(qs::ModelCase::XXZLinearPotential, 4, 1.0, 1.0, 1.5);
    EXPECT_EQ(p.fields, (std::vector<double>{1.5, 3.0, 4.5, 6.0}));
}

TEST(Model, ContradictoryInputsAreRejected) {
    EXPECT_THROW(qs::build_case(qs::ModelCase::XX, 6, 1.0, 0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(qs::build_case(qs::ModelCase::XX, 6, 1.0, 0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(qs::build_case(qs::ModelCase::XXZ, 6, 1.0, 0.0, 0.0), std::invalid_argument);
    EXPECT_THROW(qs::build_case(qs::ModelCase::XXZLinearPotential, 6, 1.0, -1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(qs::build_case(qs::ModelCase::DisorderedXX, 6, 1.0, 0.0, -1.0), std::invalid_argument);
    EXPECT_THROW(qs::build_case(qs::ModelCase::XX, 1, 1.0, 0.0, 0.0), std::invalid_argument);
}

TEST(Model, ParsesCaseNames) {
    EXPECT_EQ(qs::parse_model_case("I"), qs::ModelCase::XX);
    EXPECT_EQ(qs::parse_model_case("2"), qs::ModelCase::DisorderedXX);
    EXPECT_EQ(qs::parse_model_case("III"), qs::ModelCase::XXZ);
    EXPECT_EQ(qs::parse_model_case("IV"), qs::ModelCase::XXZLinearPotential);
    EXPECT_THROW(qs::parse_model_case("V"), std::invalid_argument);
}

TEST(Model, DisorderIsBoundedAndReproducible) {
    qs::ModelParams a = qs::build_case(qs::ModelCase::DisorderedXX, 6, 1.0, 0.0, 2.0, 42);
    qs::ModelParams b = qs::build_case(qs::ModelCase::DisorderedXX, 6, 1.0, 0.0, 2.0, 42);
    EXPECT_EQ(a.fields, b.fields);
    for (double h : a.fields) {
        EXPECT_LE(std::abs(h), 2.0);
    }
    EXPECT_NE(a.fields, qs::build_case(qs::ModelCase::DisorderedXX, 6, 1.0, 0.0, 2.0, 43).fields);
}

TEST(Model, DisorderMeanIsCentred) {
    // 10^4 seeds: the mean of h_1 is within 3 sigma of zero, sigma = h / sqrt(3 * 10^4).
    const double h = 2.0;
    const int draws = 10000;
    double sum = 0.0;
    for (int s = 0; s < draws; ++s) {
        auto f = qs::sample_disorder(6, h, static_cast<std::uint64_t>(s));
        for (double v : f) {
            ASSERT_LE(std::abs(v), h);
        }
        sum += f[0];
    }
    EXPECT_LT(std::abs(sum / draws), 3.0 * h / std::sqrt(3.0 * draws));
}

TEST(Model, InitialStates) {
    qs::InitialState dw = qs::make_initial_state(qs::InitialKind::DomainWall, 2);
    EXPECT_EQ(qs::to_bitstring(dw.basis_index(), 2), "10");
    EXPECT_EQ(dw.total_sz(), 0);
    qs::InitialState neel = qs::make_initial_state(qs::InitialKind::Neel, 3);
    EXPECT_EQ(qs::to_bitstring(neel.basis_index(), 3), "010");
    EXPECT_EQ(neel.total_sz(), 1);
    EXPECT_THROW(qs::make_initial_state(qs::InitialKind::DomainWall, 5), std::invalid_argument);

    qs::StateVector s = qs::initial_statevector(qs::make_initial_state(qs::InitialKind::DomainWall, 6), 6);
    int nonzero = 0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        nonzero += std::abs(s[i]) > 0 ? 1 : 0;
    }
    EXPECT_EQ(nonzero, 1);
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
    EXPECT_EQ(std::abs(s[qs::from_bitstring("111000")]), 1.0);
}

TEST(Model, BitstringInitialState) {
    qs::InitialState s = qs::initial_state_from_bitstring("0110");
    EXPECT_EQ(s.kind, qs::InitialKind::Bitstring);
    EXPECT_EQ(s.down, (std::vector<bool>{false, true, true, false}));
    EXPECT_THROW(qs::initial_state_from_bitstring("01a"), std::invalid_argument);
}

TEST(Model, TwoSiteSpectrum) {
    qs::ModelParams p = qs::build_case(qs::ModelCase::XX, 2, 1.0, 0.0, 0.0);
    Eigen::MatrixXd h = qs::hamiltonian_matrix(p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    Eigen::Vector4d expected(-2.0, 0.0, 0.0, 2.0);
    EXPECT_LT((es.eigenvalues() - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Model, HamiltonianMatchesKroneckerConstruction) {
    qs::CounterRng rng(11, 0, qs::StreamTag::Task);
    for (int trial = 0; trial < 5; ++trial) {
        int n = 2 + trial;
        qs::ModelParams p{n, rng.uniform() - 0.5, rng.uniform() - 0.5, {}};
        for (int j = 0; j < n; ++j) {
            p.fields.push_back(2.0 * rng.uniform() - 1.0);
        }
        Eigen::MatrixXcd h = qs::hamiltonian_matrix(p).cast<std::complex<double>>();
        EXPECT_LT((h - oracle::hamiltonian(p)).cwiseAbs().maxCoeff(), 1e-12) << "n=" << n;
        EXPECT_EQ((h - h.adjoint()).cwiseAbs().maxCoeff(), 0.0);
        Eigen::MatrixXcd sz = oracle::total_sz(n);
        EXPECT_LT((h * sz - sz * h).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Model, DenseCapIsEnforced) {
    qs::ModelParams p = qs::build_case(qs::ModelCase::XX, 13, 1.0, 0.0, 0.0);
    EXPECT_THROW(qs::hamiltonian_matrix(p), std::invalid_argument);
}

TEST(Model, TotalSzDiagonal) {
    Eigen::VectorXd d = qs::total_sz_diagonal(3);
    EXPECT_EQ(d(0), 3.0);
    EXPECT_EQ(d(7), -3.0);
    EXPECT_EQ(d(qs::from_bitstring("100")), 1.0);
}
