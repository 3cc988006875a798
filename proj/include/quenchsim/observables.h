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

#ifndef QUENCHSIM_OBSERVABLES_H
#define QUENCHSIM_OBSERVABLES_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quenchsim/model.h"
#include "quenchsim/noise.h"
#include "quenchsim/state.h"
#include "quenchsim/trotter.h"

namespace quenchsim {

/// Probability-weighted z-basis outcomes, either empirical (from Counts) or
/// exact (from a state vector). Exact distributions report zero standard error.
class Distribution {
   public:
    static Distribution from_counts(const Counts &counts);
    static Distribution from_state(const StateVector &state);

    int n_qubits() const {
        return n_qubits_;
    }
    /// Number of shots behind the estimate; 0 for exact distributions.
    std::uint64_t shots() const {
        return shots_;
    }
    bool exact() const {
        return shots_ == 0;
    }
    const std::vector<std::pair<std::uint64_t, double>> &weights() const {
        return weights_;
    }

   private:
    int n_qubits_ = 0;
    std::uint64_t shots_ = 0;
    std::vector<std::pair<std::uint64_t, double>> weights_;
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

// Standard errors: sample standard deviation / sqrt(shots) for plain means;
// the delta method (fourth-moment form) for the covariance-type estimators.

/// <sigma^z_site> in [-1, 1].
Estimate magnetization(const Distribution &dist, int site);

/// sum_{j < N/2} (1 + <sigma^z_j>) / 2, in [0, N/2]. Requires even N.
Estimate n_half(const Distribution &dist);

/// <Z_j Z_k> - <Z_j><Z_k>. Requires j != k.
Estimate connected_correlator(const Distribution &dist, int j, int k);

/// Default signs: +1 on the left half, -1 on the right half.
std::vector<int> half_chain_signs(int n_sites);

/// Pure-state QFI for O = 1/2 sum_j s_j Z_j:
/// sum_jk s_j s_k <Z_j Z_k> - (sum_j s_j <Z_j>)^2, in [0, N^2].
Estimate qfi(const Distribution &dist, std::span<const int> signs);

/// Scale factor in S_vN ~ F_Q / a.
inline constexpr double kEntropyQfiScale = 32.0 / 5.0;

/// <Z Z ... Z> over all qubits, i.e. the parity expectation.
Estimate parity(const Distribution &dist);

/// |<XYY> + <YXY> + <YYX> - <XXX>| from the four basis-rotated measurements.
Estimate mermin(const Distribution &xxx, const Distribution &xyy, const Distribution &yxy, const Distribution &yyx);

/// Fraction of outcomes with total sigma^z equal to target_sz.
Estimate physical_fraction(const Distribution &dist, int target_sz);

/// Counts overloads of the estimators above.
Estimate magnetization(const Counts &counts, int site);
Estimate n_half(const Counts &counts);
Estimate connected_correlator(const Counts &counts, int j, int k);
Estimate qfi(const Counts &counts, std::span<const int> signs);
Estimate mermin(const Counts &xxx, const Counts &xyy, const Counts &yxy, const Counts &yyx);
Estimate physical_fraction(const Counts &counts, int target_sz);

/// GHZ preparation (|000> - |111>)/sqrt(2) on qubits 0..2 followed by the
/// z-measurement basis change for the Pauli string `axes` (each 'X' or 'Y').
Circuit mermin_circuit(const std::string &axes);

/// Noise emulation setup shared by the echo and the experiment runner.
struct NoiseSetup {
    NoiseModel model;
    std::vector<int> layout;
};

/// Evolution circuit followed by its inverse.
Circuit echo_circuit(const ModelParams &params, const TrotterPlan &plan, const InitialState &init,
                     const SynthOptions &options = {});

/// Probability of measuring the initial bitstring after forward-then-inverse
/// evolution. shots == 0 computes it exactly from the state vector (noise
/// must then be absent); otherwise it is estimated from (noisy) shots.
Estimate loschmidt_echo(const ModelParams &params, const TrotterPlan &plan, const InitialState &init,
                        const std::optional<NoiseSetup> &noise, std::uint64_t shots, std::uint64_t seed,
                        int threads = 1);

/// One output row.
struct ObservableRecord {
    double time = 0.0;
    std::string name;
    std::optional<double> value;  // empty when undefined (e.g. no shots kept)
    double std_error = 0.0;
    std::optional<double> retained_fraction;
    std::string source;
};

}  // namespace quenchsim

#endif  // QUENCHSIM_OBSERVABLES_H
