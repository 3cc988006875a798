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

#ifndef QUENCHSIM_NOISE_H
#define QUENCHSIM_NOISE_H

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quenchsim/circuit.h"
#include "quenchsim/state.h"

namespace quenchsim {

struct QubitCalibration {
    int index = 0;
    double readout_error = 0.0;  // probability
    double t1 = 0.0;             // us
    double t2 = 0.0;             // us
    bool operator==(const QubitCalibration &) const = default;
};

struct EdgeCalibration {
    int a = 0;
    int b = 0;
    double cnot_error = 0.0;  // probability
    double duration = 0.4;    // us
    bool operator==(const EdgeCalibration &) const = default;
};

/// Device snapshot: per-qubit readout error, T1, T2 and per-coupler CNOT
/// error. The coupling graph is undirected.
struct Calibration {
    std::vector<QubitCalibration> qubits;
    std::vector<EdgeCalibration> edges;
    double single_qubit_duration = 0.1;  // us

    /// Throws ConfigError on an empty qubit list, duplicate indices,
    /// probabilities outside [0, 1], non-positive times or dangling edges.
    void validate() const;

    const QubitCalibration &qubit(int index) const;
    bool has_qubit(int index) const;
    /// Edge between a and b in either orientation, or nullptr.
    const EdgeCalibration *edge(int a, int b) const;

    bool operator==(const Calibration &) const = default;
};

/// Text format, one record per line:
///
///   single_qubit_duration 0.1
///   qubit 0 readout=0.037 t1=52.1 t2=58.03
///   edge 0 1 cnot=0.0127 duration=0.4
///
/// `#` starts a comment. Parse errors carry the line number and field name.
Calibration load_calibration(std::string_view text);
Calibration load_calibration_file(const std::filesystem::path &path);

/// Inverse of load_calibration; numbers use shortest round-trip formatting,
/// so load(format(c)) == c bit for bit.
std::string format_calibration(const Calibration &calibration);

/// Qubits 0..n-1 in a line, all with the same error figures.
Calibration uniform_chain_calibration(int n_qubits, double readout_error, double cnot_error, double t2_us,
                                      double t1_us = 100.0);

struct NoiseChannels {
    bool cnot_depolarizing = true;
    bool readout = true;
    bool dephasing = true;
};

struct NoiseModel {
    Calibration calibration;
    NoiseChannels channels;

    /// Short text describing the emulated channels, for output metadata.
    std::string describe() const;
};

/// Dephasing probability for a gate of the given duration: (1 - exp(-d / T2)) / 2.
double dephasing_probability(double duration_us, double t2_us);

/// Monte Carlo emulation: every shot is one trajectory from |0...0>.
///
/// After each CNOT a uniformly chosen non-identity two-qubit Pauli is inserted
/// with the coupler's cnot_error; after each gate every participating qubit
/// gets Z with the dephasing probability of that gate's duration; at readout
/// every bit flips with its qubit's readout_error. Circuit qubit q runs on
/// physical qubit layout[q], and every CNOT must sit on a calibration edge.
///
/// Shot k uses the streams (seed, k), so the counts do not depend on
/// `threads`, and with all rates zero they equal sample_counts(...) exactly.
Counts noisy_counts(const Circuit &circuit, std::span<const int> layout, const NoiseModel &noise,
                    std::uint64_t shots, std::uint64_t seed, int threads = 1);

/// Throws InfeasibleError if `layout` is not injective into the calibration
/// or a CNOT of `circuit` does not map onto an edge.
void check_layout(const Circuit &circuit, std::span<const int> layout, const Calibration &calibration);

}  // namespace quenchsim

#endif  // QUENCHSIM_NOISE_H
