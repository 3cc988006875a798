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

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "quenchsim/device_select.h"
#include "quenchsim/errors.h"
#include "quenchsim/experiment.h"
#include "quenchsim/rng.h"
#include "quenchsim/sim.h"
#include "quenchsim/synth.h"

namespace {

namespace qs = quenchsim;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInvariant = 4;

struct CommonOptions {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    int threads = 1;
};

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw qs::ConfigError("cannot write " + path.string());
    }
    file << text;
}

int emit(const qs::RunResult &result, const qs::ExperimentConfig &config) {
    const std::string csv = qs::format_csv(result.records);
    if (config.output.empty()) {
        std::cout << csv;
        return kExitOk;
    }
    write_text(config.output, csv);
    write_text(config.output.string() + ".meta.json", result.metadata.dump(2) + "\n");
    std::cerr << "wrote " << result.records.size() << " rows to " << config.output.string() << "\n";
    return kExitOk;
}

qs::ExperimentConfig load(const CommonOptions &options) {
    qs::ExperimentConfig config = qs::load_experiment_config(options.config);
    if (options.seed) {
        config.seed = *options.seed;
    }
    if (!options.out.empty()) {
        config.output = options.out;
    }
    return config;
}

// Closed form: XX, YY and ZZ commute and square to one, so each factor is cos + i sin P.
qs::Matrix4 canonical(const qs::CanonicalAngles &a) {
    qs::Matrix4 xx = qs::Matrix4::Zero(), yy = qs::Matrix4::Zero(), zz = qs::Matrix4::Zero();
    xx(0, 3) = xx(3, 0) = xx(1, 2) = xx(2, 1) = 1.0;
    yy(0, 3) = yy(3, 0) = -1.0;
    yy(1, 2) = yy(2, 1) = 1.0;
    zz.diagonal() << 1.0, -1.0, -1.0, 1.0;
    const qs::Matrix4 id = qs::Matrix4::Identity();
    auto factor = [&](double t, const qs::Matrix4 &p) -> qs::Matrix4 {
        return std::cos(t) * id + qs::kI * std::sin(t) * p;
    };
    return factor(a.alpha, xx) * factor(a.beta, yy) * factor(a.gamma, zz);
}

int synth_check(std::uint64_t seed, int trials) {
    double worst_general = 0.0, worst_xz = 0.0;
    bool counts_ok = true;
    qs::CounterRng rng(seed, 0, qs::StreamTag::Task);
    auto angle = [&]() { return (2.0 * rng.uniform() - 1.0) * std::numbers::pi; };
    for (int i = 0; i < trials; ++i) {
        qs::CanonicalAngles a{angle(), angle(), angle()};
        qs::Circuit general = qs::synth_general(a);
        worst_general = std::max(worst_general, qs::phase_aligned_distance(canonical(a), qs::unitary_of(general)));
        counts_ok = counts_ok && general.cnot_count() == 3;

        qs::CanonicalAngles b{angle(), 0.0, angle()};
        qs::Circuit xz = qs::synth_xz(b.alpha, b.gamma);
        worst_xz = std::max(worst_xz, qs::phase_aligned_distance(canonical(b), qs::unitary_of(xz)));
        counts_ok = counts_ok && xz.cnot_count() == 2;
    }
    const bool ok = worst_general < 1e-9 && worst_xz < 1e-9 && counts_ok;
    std::cout << "trials " << trials << "\n"
              << "three-cnot max error " << worst_general << "\n"
              << "two-cnot max error " << worst_xz << "\n"
              << "cnot counts " << (counts_ok ? "ok" : "WRONG") << "\n"
              << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitInvariant;
}

int select_qubits(const CommonOptions &options) {
    qs::SelectQubitsConfig config = qs::load_select_config(options.config);
    qs::Calibration calibration = qs::load_calibration_file(config.calibration);
    qs::ChainSelection chosen = qs::best_chain(calibration, config.selection);
    std::string report = qs::format_chain_report(chosen.chain, qs::chain_statistics(calibration, chosen.chain));
    report += "meas threshold " + qs::format_double(chosen.meas_threshold) + ", restricted CNOTs " +
              std::to_string(chosen.restricted_edges) + ", allowed qubits " + std::to_string(chosen.allowed_qubits) +
              "\n";
    if (config.brute_force_check) {
        qs::SelectionConfig relaxed = config.selection;
        relaxed.meas_threshold = chosen.meas_threshold;
        qs::ChainSelection optimum = qs::brute_force_chain(calibration, relaxed);
        report += "brute force:";
        for (int q : optimum.chain) {
            report += " " + std::to_string(q);
        }
        report += optimum.chain == chosen.chain ? " (agrees)\n"
                                                : " (differs, avg CNOT error " +
                                                      qs::format_double(optimum.average_cnot_error) + ")\n";
    }
    if (options.out.empty()) {
        std::cout << report;
    } else {
        write_text(options.out, report);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quench dynamics of spin chains on emulated digital quantum hardware"};
    app.require_subcommand(1);

    CommonOptions options;
    auto add_common = [&](CLI::App *sub, bool needs_config) {
        auto *config = sub->add_option("--config", options.config, "JSON configuration file");
        if (needs_config) {
            config->required()->check(CLI::ExistingFile);
        }
        sub->add_option("--out", options.out, "output path (overrides the config)");
        sub->add_option("--seed", options.seed, "master seed (overrides the config)");
        sub->add_option("--threads", options.threads, "worker threads")->check(CLI::PositiveNumber);
    };

    auto *run = app.add_subcommand("run", "quench dynamics: ED, Trotter and sampled observables");
    add_common(run, true);
    auto *ghz = app.add_subcommand("ghz-mermin", "Mermin witness of a three-qubit GHZ state");
    add_common(ghz, true);
    auto *echo = app.add_subcommand("echo", "Loschmidt echo and physical fraction");
    add_common(echo, true);
    auto *select = app.add_subcommand("select-qubits", "choose a qubit chain from a calibration");
    add_common(select, true);
    auto *synth = app.add_subcommand("synth-check", "randomized check of the two-qubit synthesis");
    add_common(synth, false);
    int trials = 1000;
    synth->add_option("--trials", trials, "random angle sets per construction")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*run) {
            qs::ExperimentConfig config = load(options);
            return emit(qs::run_quench(config, options.threads), config);
        }
        if (*ghz) {
            qs::ExperimentConfig config = load(options);
            return emit(qs::run_ghz_mermin(config, options.threads), config);
        }
        if (*echo) {
            qs::ExperimentConfig config = load(options);
            return emit(qs::run_echo(config, options.threads), config);
        }
        if (*select) {
            return select_qubits(options);
        }
        if (*synth) {
            return synth_check(options.seed.value_or(0), trials);
        }
    } catch (const qs::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qs::InfeasibleError &e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}
