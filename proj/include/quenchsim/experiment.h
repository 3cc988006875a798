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

#ifndef QUENCHSIM_EXPERIMENT_H
#define QUENCHSIM_EXPERIMENT_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quenchsim/device_select.h"
#include "quenchsim/model.h"
#include "quenchsim/noise.h"
#include "quenchsim/observables.h"
#include "quenchsim/trotter.h"

namespace quenchsim {

inline constexpr int kConfigSchemaVersion = 1;

struct ModelConfig {
    ModelCase model_case = ModelCase::XX;
    int n_sites = 6;
    double J = 1.0;
    double U = 0.0;
    double h = 0.0;
    std::uint64_t disorder_seed = 0;
    /// Case II only: number of disorder realizations averaged (1 = single sample).
    int disorder_realizations = 1;
};

struct NoiseConfig {
    std::filesystem::path calibration;
    NoiseChannels channels;
};

enum class Source { Exact, Trotter, Shots };

/// Declarative description of one experiment. Loaded from JSON with
/// `load_experiment_config`; unknown keys are rejected.
struct ExperimentConfig {
    ModelConfig model;
    InitialState initial_state;
    TrotterScheme scheme = TrotterScheme::Symmetric;
    double dt = 0.25;
    int max_steps = 4;
    int substeps = 1;
    bool two_cnot = true;
    std::uint64_t shots = 8192;
    std::uint64_t seed = 0;
    bool mitigation = true;
    std::optional<NoiseConfig> noise;
    /// Empty means "auto" (chosen by best_chain when noise is enabled).
    std::vector<int> layout;
    SelectionConfig selection;
    std::vector<std::string> observables{"magnetization"};
    std::vector<Source> sources{Source::Exact, Source::Trotter, Source::Shots};
    std::filesystem::path output;

    void validate() const;
};

struct SelectQubitsConfig {
    std::filesystem::path calibration;
    SelectionConfig selection;
    bool brute_force_check = false;
};

/// Parses the JSON document; relative paths resolve against `base_dir`.
/// Throws ConfigError naming the offending field.
ExperimentConfig parse_experiment_config(const nlohmann::json &doc, const std::filesystem::path &base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path &path);
SelectQubitsConfig parse_select_config(const nlohmann::json &doc, const std::filesystem::path &base_dir = {});
SelectQubitsConfig load_select_config(const std::filesystem::path &path);

struct RunResult {
    std::vector<ObservableRecord> records;
    nlohmann::json metadata;
};

/// Quench dynamics: for every grid time emits the requested observables from
/// exact diagonalization ("ed"), the noiseless Trotter state ("trotter"),
/// sampled shots ("shots_raw") and, with mitigation, post-selected shots
/// ("shots_mitigated"). Time points run on `threads` workers with results
/// gathered in time order, so output is independent of the worker count.
RunResult run_quench(const ExperimentConfig &config, int threads = 1);

/// M_GHZ from exact expectations ("exact"), noiseless shots ("shots") and,
/// when noise is configured, emulated shots ("noisy").
RunResult run_ghz_mermin(const ExperimentConfig &config, int threads = 1);

/// Echo probability (exact and from shots) and physical fraction of the
/// forward evolution at every grid time.
RunResult run_echo(const ExperimentConfig &config, int threads = 1);

/// Resolves the device layout for a noisy run: explicit layout if given,
/// otherwise best_chain over the calibration.
std::vector<int> resolve_layout(const ExperimentConfig &config, const Calibration &calibration, int n_qubits);

/// Header `t,name,value,stderr,retained_fraction,source`; numbers in shortest
/// round-trip form; undefined values are written as `undefined`.
std::string format_csv(const std::vector<ObservableRecord> &records);

std::string format_double(double value);

}  // namespace quenchsim

#endif  // QUENCHSIM_EXPERIMENT_H
