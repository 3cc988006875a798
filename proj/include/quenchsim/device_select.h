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

#ifndef QUENCHSIM_DEVICE_SELECT_H
#define QUENCHSIM_DEVICE_SELECT_H

#include <string>
#include <vector>

#include "quenchsim/noise.h"

namespace quenchsim {

struct SelectionConfig {
    int chain_length = 6;
    double meas_threshold = 0.05;  // max readout error
    double t2_threshold = 50.0;    // min T2, us
    double relaxation_factor = 1.25;

    void validate() const;
};

struct ChainSelection {
    /// Physical qubits in chain order, starting at the lower-indexed endpoint.
    std::vector<int> chain;
    double average_cnot_error = 0.0;
    /// Measurement threshold in force when the chain was found.
    double meas_threshold = 0.0;
    /// Size of the restricted CNOT list the chain was found in.
    int restricted_edges = 0;
    /// Number of qubits allowed when the chain was found.
    int allowed_qubits = 0;
    int relaxations = 0;
};

/// Iterative selection:
///  1. allow qubits with readout error <= meas threshold and T2 >= T2 threshold;
///  2. list the CNOTs among allowed qubits;
///  3. start with M = N - 1;
///  4. keep the M lowest-error CNOTs;
///  5. enumerate every simple chain of N qubits over the kept CNOTs;
///  6. none found: grow M while M < allowed count, else raise the measurement
///     threshold until one more qubit is allowed and restart from 2;
///  7. return the chain with the lowest average CNOT error.
///
/// Ties go to the lexicographically smallest qubit sequence. Once no further
/// qubit can be admitted, M keeps growing to the full edge list before the
/// search fails with InfeasibleError.
ChainSelection best_chain(const Calibration &calibration, const SelectionConfig &config);

/// Exhaustive search over all simple N-qubit paths whose qubits meet the
/// configured thresholds. Throws InfeasibleError when there is none.
ChainSelection brute_force_chain(const Calibration &calibration, const SelectionConfig &config);

struct Spread {
    double min = 0.0;
    double avg = 0.0;
    double max = 0.0;
};

struct ChainStatistics {
    Spread readout_error;
    Spread cnot_error;
    Spread t2;
};

ChainStatistics chain_statistics(const Calibration &calibration, const std::vector<int> &chain);

/// Chain and its min/avg/max figures laid out like a device report, 4 decimals
/// for error rates and 2 for T2.
std::string format_chain_report(const std::vector<int> &chain, const ChainStatistics &stats);

}  // namespace quenchsim

#endif  // QUENCHSIM_DEVICE_SELECT_H
