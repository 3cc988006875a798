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

#include <gtest/gtest.h>

#include "quenchsim/rng.h"

namespace qs = quenchsim;

TEST(State, BitstringsAreSiteOneFirst) {
    EXPECT_EQ(qs::to_bitstring(0b001, 3), "100");
    EXPECT_EQ(qs::from_bitstring("100"), 1u);
    EXPECT_EQ(qs::from_bitstring("0011"), 0b1100u);
    EXPECT_EQ(qs::total_sz(0b0011, 4), 0);
    EXPECT_EQ(qs::sigma_z(0b10, 1), -1);
    EXPECT_EQ(qs::sigma_z(0b10, 0), 1);
}

TEST(State, DefaultIsAllUp) {
    qs::StateVector s(3);
    EXPECT_EQ(s.dim(), 8u);
    EXPECT_EQ(s[0], qs::Complex(1.0, 0.0));
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(State, FromAmplitudesValidates) {
    EXPECT_THROW(qs::StateVector::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(qs::StateVector::from_amplitudes({1.0, 1.0}), std::invalid_argument);
    const double r = 1.0 / std::sqrt(2.0);
    qs::StateVector s = qs::StateVector::from_amplitudes({r, qs::Complex(0, r)});
    EXPECT_EQ(s.n_qubits(), 1);
    EXPECT_NEAR(std::abs(s.inner(s) - 1.0), 0.0, 1e-15);
}

TEST(State, CountsRoundTrip) {
    qs::Counts c(3);
    c.add(qs::from_bitstring("110"), 5);
    c.add(qs::from_bitstring("001"), 2);
    c.add(qs::from_bitstring("110"));
    EXPECT_EQ(c.shots(), 8u);
    EXPECT_EQ(c.count(qs::from_bitstring("110")), 6u);
    EXPECT_EQ(c.serialize(), "001 2\n110 6\n");
    EXPECT_EQ(qs::Counts::parse(c.serialize()), c);
}

TEST(State, CountsParseErrors) {
    EXPECT_THROW(qs::Counts::parse("01 3\n011 1\n"), std::invalid_argument);
    EXPECT_THROW(qs::Counts::parse("012 3\n"), std::invalid_argument);
    EXPECT_THROW(qs::Counts::parse("01 x\n"), std::invalid_argument);
}

TEST(State, CountsSumToShots) {
    qs::CounterRng rng(5, 0, qs::StreamTag::Task);
    qs::Counts c(4);
    std::uint64_t total = 0;
    for (int i = 0; i < 100; ++i) {
        std::uint64_t k = rng.below(7) + 1;
        c.add(rng.below(16), k);
        total += k;
    }
    std::uint64_t sum = 0;
    for (auto [o, n] : c.table()) {
        sum += n;
    }
    EXPECT_EQ(sum, total);
    EXPECT_EQ(c.shots(), total);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
    qs::CounterRng a(1, 2, qs::StreamTag::Measurement), b(1, 2, qs::StreamTag::Measurement);
    qs::CounterRng c(1, 3, qs::StreamTag::Measurement), d(1, 2, qs::StreamTag::Noise);
    for (int i = 0; i < 10; ++i) {
        std::uint64_t x = a.next();
        EXPECT_EQ(x, b.next());
        EXPECT_NE(x, c.next());
        EXPECT_NE(x, d.next());
    }
    qs::CounterRng u(9, 0, qs::StreamTag::Task);
    for (int i = 0; i < 1000; ++i) {
        double v = u.uniform();
        ASSERT_GE(v, 0.0);
        ASSERT_LT(v, 1.0);
        ASSERT_LT(u.below(15), 15u);
    }
}
