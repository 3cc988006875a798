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

#include "quenchsim/trotter.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "quenchsim/sim.h"

namespace qs = quenchsim;

namespace {

qs::ModelParams params(int n, double J, double U, std::vector<double> h = {}) {
    qs::ModelParams p;
    p.n_sites = n;
    p.hopping = J;
    p.interaction = U;
    p.fields = h.empty() ? std::vector<double>(n, 0.0) : h;
    return p;
}

double step_error(const qs::Circuit &c, const qs::ModelParams &p, double t) {
    return qs::phase_aligned_distance(oracle::propagator(oracle::hamiltonian(p), t), qs::unitary_of(c));
}

qs::ComplexMatrix power(const qs::ComplexMatrix &u, int m) {
    qs::ComplexMatrix out = qs::ComplexMatrix::Identity(u.rows(), u.cols());
    for (int i = 0; i < m; ++i) {
        out = u * out;
    }
    return out;
}

}  // namespace

TEST(Trotter, ParseScheme) {
    EXPECT_EQ(qs::parse_scheme("basic"), qs::TrotterScheme::Basic);
    EXPECT_EQ(qs::parse_scheme("symmetric"), qs::TrotterScheme::Symmetric);
    EXPECT_THROW(qs::parse_scheme("fourth"), std::invalid_argument);
    EXPECT_EQ(qs::scheme_name(qs::TrotterScheme::Basic), "basic");
}

TEST(Trotter, StepLayers) {
    using L = qs::Layer;
    using K = qs::LayerKind;
    EXPECT_EQ(qs::step_layers(qs::TrotterScheme::Basic, 0.2),
              (std::vector<L>{{K::Field, 0.2}, {K::EvenBonds, 0.2}, {K::OddBonds, 0.2}}));
    EXPECT_EQ(qs::step_layers(qs::TrotterScheme::Symmetric, 0.2),
              (std::vector<L>{{K::Field, 0.1}, {K::EvenBonds, 0.1}, {K::OddBonds, 0.2}, {K::EvenBonds, 0.1},
                              {K::Field, 0.1}}));
}

TEST(Trotter, BasicStepErrorIsSecondOrderPerStep) {
    qs::ModelParams p = params(2, 1.0, 0.0, {0.3, -0.5});
    std::vector<double> err;
    for (double dt : {0.1, 0.05, 0.025}) {
        err.push_back(step_error(qs::basic_step(p, dt), p, dt));
    }
    EXPECT_NEAR(err[0] / err[1], 4.0, 0.4);
    EXPECT_NEAR(err[1] / err[2], 4.0, 0.4);
}

TEST(Trotter, SymmetricStepErrorIsThirdOrderPerStep) {
    qs::ModelParams p = params(3, 1.0, 0.5);
    std::vector<double> err;
    for (double dt : {0.2, 0.1, 0.05}) {
        err.push_back(step_error(qs::symmetric_step(p, dt), p, dt));
    }
    EXPECT_NEAR(err[0] / err[1], 8.0, 0.8);
    EXPECT_NEAR(err[1] / err[2], 8.0, 0.8);
}

TEST(Trotter, SmallAndZeroStepsAreIdentity) {
    qs::ModelParams p = params(4, 1.0, 0.5, {0.1, 0.2, 0.3, 0.4});
    oracle::Mat id = oracle::Mat::Identity(16, 16);
    // At dt = 1e-5 the step is I - iH dt + O(dt^2): it sits within 1e-8 of the
    // exact short-time propagator and within |H| dt of the identity.
    EXPECT_LT(step_error(qs::basic_step(p, 1e-5), p, 1e-5), 1e-8);
    EXPECT_LT(step_error(qs::symmetric_step(p, 1e-5), p, 1e-5), 1e-8);
    double bound = oracle::hamiltonian(p).cwiseAbs().rowwise().sum().maxCoeff() * 1e-5;
    EXPECT_LT(qs::phase_aligned_distance(id, qs::unitary_of(qs::basic_step(p, 1e-5))), bound);
    EXPECT_LT(qs::phase_aligned_distance(id, qs::unitary_of(qs::symmetric_step(p, 0.0))), 1e-14);
    EXPECT_LT(qs::phase_aligned_distance(id, qs::unitary_of(qs::basic_step(p, 0.0))), 1e-14);
}

TEST(Trotter, SymmetricStepIsPalindromic) {
    qs::ModelParams p = params(4, 1.0, -0.7, {0.5, -0.2, 0.0, 0.9});
    qs::ComplexMatrix fwd = qs::unitary_of(qs::symmetric_step(p, 0.3));
    qs::ComplexMatrix back = qs::unitary_of(qs::symmetric_step(p, -0.3));
    EXPECT_LT(qs::phase_aligned_distance(fwd.adjoint(), back), 1e-12);
    auto layers = qs::step_layers(qs::TrotterScheme::Symmetric, 0.3);
    std::vector<qs::Layer> reversed(layers.rbegin(), layers.rend());
    for (auto &l : reversed) {
        l.tau = -l.tau;
    }
    EXPECT_LT(qs::phase_aligned_distance(fwd.adjoint(), qs::unitary_of(qs::compile_layers(p, reversed))), 1e-12);
}

TEST(Trotter, StepsConserveTotalSz) {
    for (int n = 2; n <= 6; ++n) {
        std::vector<double> h(n);
        for (int j = 0; j < n; ++j) {
            h[j] = 0.3 * (j + 1) - 0.8;
        }
        qs::ModelParams p = params(n, 1.0, 0.4, h);
        oracle::Mat sz = oracle::total_sz(n);
        for (auto scheme : {qs::TrotterScheme::Basic, qs::TrotterScheme::Symmetric}) {
            qs::TrotterPlan plan{scheme, 0.3, 2, 0.1, 1};
            qs::ComplexMatrix u = qs::unitary_of(qs::evolution_circuit(p, plan));
            EXPECT_LT((u * sz - sz * u).cwiseAbs().maxCoeff(), 1e-10) << n;
        }
        qs::ModelParams xx = params(n, 1.0, 0.0);
        qs::ComplexMatrix u = qs::unitary_of(qs::basic_step(xx, 0.2));
        EXPECT_LT((u * sz - sz * u).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Trotter, MergeLayers) {
    using L = qs::Layer;
    using K = qs::LayerKind;
    std::vector<L> two = qs::step_layers(qs::TrotterScheme::Symmetric, 0.2);
    auto second = qs::step_layers(qs::TrotterScheme::Symmetric, 0.2);
    two.insert(two.end(), second.begin(), second.end());
    EXPECT_EQ(qs::merge_layers(two, false),
              (std::vector<L>{{K::EvenBonds, 0.1}, {K::OddBonds, 0.2}, {K::EvenBonds, 0.2}, {K::OddBonds, 0.2},
                              {K::EvenBonds, 0.1}}));
    auto with_fields = qs::merge_layers(two, true);
    ASSERT_EQ(with_fields.size(), 9u);
    EXPECT_EQ(with_fields[4], (L{K::Field, 0.2}));
    EXPECT_TRUE(qs::merge_layers({{K::Field, 0.0}, {K::OddBonds, 0.0}}, true).empty());
}

TEST(Trotter, SingleStepPlanEqualsFusedStep) {
    qs::ModelParams p = qs::build_case(qs::ModelCase::XXZLinearPotential, 4, 1.0, 0.5, 0.3);
    qs::TrotterPlan plan{qs::TrotterScheme::Symmetric, 0.25, 0, 0.25, 1};
    EXPECT_EQ(qs::evolution_circuit(p, plan), qs::fuse_single_qubit_runs(qs::symmetric_step(p, 0.25)));
    qs::TrotterPlan basic{qs::TrotterScheme::Basic, 0.25, 0, 0.25, 1};
    EXPECT_EQ(qs::evolution_circuit(p, basic), qs::fuse_single_qubit_runs(qs::basic_step(p, 0.25)));
}

TEST(Trotter, MergedEqualsUnmerged) {
    for (double h : {0.0, 0.4}) {
        qs::ModelParams p = params(4, 1.0, 0.5, {h, -h, 2 * h, 0.0});
        qs::TrotterPlan plan{qs::TrotterScheme::Symmetric, 0.2, 2, 0.2, 1};
        qs::ComplexMatrix step = qs::unitary_of(qs::symmetric_step(p, 0.2));
        qs::Circuit merged = qs::evolution_circuit(p, plan);
        EXPECT_LT(qs::phase_aligned_distance(power(step, 3), qs::unitary_of(merged)), 1e-10);
        qs::Circuit unmerged(4);
        for (int i = 0; i < 3; ++i) {
            unmerged.extend(qs::symmetric_step(p, 0.2));
        }
        // Without fields the half bond layers of consecutive steps meet and merge.
        if (h == 0.0) {
            EXPECT_LT(merged.cnot_count(), unmerged.cnot_count());
        } else {
            EXPECT_EQ(merged.cnot_count(), unmerged.cnot_count());
        }
    }
}

TEST(Trotter, PartialFinalStep) {
    qs::ModelParams p = params(3, 1.0, 0.5, {0.2, 0.0, -0.1});
    qs::TrotterPlan plan{qs::TrotterScheme::Basic, 0.3, 2, 0.1, 3};
    qs::ComplexMatrix expected = qs::unitary_of(qs::basic_step(p, 0.1)) * power(qs::unitary_of(qs::basic_step(p, 0.3)), 2);
    EXPECT_LT(qs::phase_aligned_distance(expected, qs::unitary_of(qs::evolution_circuit(p, plan))), 1e-10);
    qs::TrotterPlan zero{qs::TrotterScheme::Basic, 0.3, 0, 0.0, 1};
    EXPECT_TRUE(qs::evolution_circuit(p, zero).empty());
}

TEST(Trotter, PlanValidation) {
    EXPECT_THROW((qs::TrotterPlan{qs::TrotterScheme::Basic, 0.0, 1, 0.0, 1}).validate(), std::invalid_argument);
    EXPECT_THROW((qs::TrotterPlan{qs::TrotterScheme::Basic, 0.1, -1, 0.1, 1}).validate(), std::invalid_argument);
    EXPECT_THROW((qs::TrotterPlan{qs::TrotterScheme::Basic, 0.1, 1, 0.2, 1}).validate(), std::invalid_argument);
    EXPECT_THROW((qs::TrotterPlan{qs::TrotterScheme::Basic, 0.1, 1, 0.1, 0}).validate(), std::invalid_argument);
}

TEST(Trotter, TimeGrid) {
    auto grid = qs::time_grid(qs::TrotterScheme::Symmetric, 0.25, 3, 3);
    ASSERT_EQ(grid.size(), 10u);
    EXPECT_EQ(grid[0].time(), 0.0);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        EXPECT_GT(grid[i].time(), grid[i - 1].time());
        int m = static_cast<int>((i - 1) / 3), k = static_cast<int>((i - 1) % 3) + 1;
        EXPECT_EQ(grid[i].n_steps, m);
        EXPECT_NEAR(grid[i].time(), m * 0.25 + k * 0.25 / 3, 1e-15);
        EXPECT_GT(grid[i].sub_dt, 0.0);
    }
    EXPECT_EQ(grid.back().sub_dt, 0.25);
    EXPECT_EQ(grid.back().time(), 0.75);
}

TEST(Trotter, GlobalErrorScaling) {
    qs::ModelParams p = params(4, 1.0, 0.5);
    oracle::Mat exact = oracle::propagator(oracle::hamiltonian(p), 1.0);
    std::vector<double> dts{0.2, 0.1, 0.05, 0.025};
    for (auto [scheme, slope] : {std::pair{qs::TrotterScheme::Basic, 1.0}, {qs::TrotterScheme::Symmetric, 2.0}}) {
        std::vector<double> err;
        for (double dt : dts) {
            int m = static_cast<int>(std::lround(1.0 / dt));
            qs::TrotterPlan plan{scheme, dt, m - 1, dt, 1};
            err.push_back(qs::phase_aligned_distance(exact, qs::unitary_of(qs::evolution_circuit(p, plan))));
        }
        EXPECT_NEAR(oracle::loglog_slope(dts, err), slope, 0.3);
    }
}

TEST(Trotter, PreparationFlipsDownSites) {
    qs::InitialState init = qs::make_initial_state(qs::InitialKind::Neel, 4);
    qs::Circuit prep = qs::preparation_circuit(init);
    EXPECT_EQ(prep.size(), 2u);
    qs::StateVector s = qs::apply_circuit(qs::StateVector(4), prep);
    EXPECT_NEAR(std::abs(s[init.basis_index()]), 1.0, 1e-15);
}
