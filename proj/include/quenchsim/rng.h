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

#ifndef QUENCHSIM_RNG_H
#define QUENCHSIM_RNG_H

#include <cstdint>

namespace quenchsim {

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Purpose tags that separate the random streams drawn from one master seed.
enum class StreamTag : std::uint64_t {
    Measurement = 1,
    Noise = 2,
    Disorder = 3,
    Task = 4,
};

/// Counter-based generator: the n-th output is a pure function of
/// (seed, stream, n). Two generators built from the same triple produce the
/// same sequence on every platform, which is what makes shot k of a parallel
/// run bit-identical to shot k of a serial run.
class CounterRng {
   public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, StreamTag tag)
        : key_(mix64(mix64(seed) ^ mix64(stream * 0xd1b54a32d192ed03ULL + static_cast<std::uint64_t>(tag)))) {
    }

    std::uint64_t next() {
        ++counter_;
        return mix64(key_ ^ mix64(counter_));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n), rejection-sampled so there is no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        while (true) {
            std::uint64_t r = next();
            if (r < limit) {
                return r % n;
            }
        }
    }

   private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Derives an independent child seed, e.g. one per time point of an experiment.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed ^ 0x5851f42d4c957f2dULL) + index);
}

}  // namespace quenchsim

#endif  // QUENCHSIM_RNG_H
