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

#include "quenchsim/noise.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "quenchsim/errors.h"
#include "quenchsim/parallel.h"
#include "quenchsim/rng.h"
#include "quenchsim/sim.h"

namespace quenchsim {

namespace {

std::string shortest(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

bool is_probability(double p) {
    return p >= 0.0 && p <= 1.0;
}

}  // namespace

void Calibration::validate() const {
    if (qubits.empty()) {
        throw ConfigError("calibration: no qubits");
    }
    if (!(single_qubit_duration > 0.0)) {
        throw ConfigError("calibration: single_qubit_duration must be positive");
    }
    std::set<int> seen;
    for (const auto &q : qubits) {
        if (q.index < 0) {
            throw ConfigError("calibration: negative qubit index " + std::to_string(q.index));
        }
        if (!seen.insert(q.index).second) {
            throw ConfigError("calibration: duplicate qubit " + std::to_string(q.index));
        }
        if (!is_probability(q.readout_error)) {
            throw ConfigError("calibration: qubit " + std::to_string(q.index) + " readout outside [0, 1]");
        }
        if (!(q.t1 > 0.0)) {
            throw ConfigError("calibration: qubit " + std::to_string(q.index) + " t1 must be positive");
        }
        if (!(q.t2 > 0.0)) {
            throw ConfigError("calibration: qubit " + std::to_string(q.index) + " t2 must be positive");
        }
    }
    std::set<std::pair<int, int>> pairs;
    for (const auto &e : edges) {
        std::string name = "edge " + std::to_string(e.a) + "-" + std::to_string(e.b);
        if (!seen.count(e.a) || !seen.count(e.b)) {
            throw ConfigError("calibration: " + name + " references an unknown qubit");
        }
        if (e.a == e.b) {
            throw ConfigError("calibration: " + name + " is a self loop");
        }
        if (!pairs.insert(std::minmax(e.a, e.b)).second) {
            throw ConfigError("calibration: duplicate " + name);
        }
        if (!is_probability(e.cnot_error)) {
            throw ConfigError("calibration: " + name + " cnot outside [0, 1]");
        }
        if (!(e.duration > 0.0)) {
            throw ConfigError("calibration: " + name + " duration must be positive");
        }
    }
}

const QubitCalibration &Calibration::qubit(int index) const {
    for (const auto &q : qubits) {
        if (q.index == index) {
            return q;
        }
    }
    throw InfeasibleError("calibration has no qubit " + std::to_string(index));
}

bool Calibration::has_qubit(int index) const {
    return std::any_of(qubits.begin(), qubits.end(), [&](const auto &q) { return q.index == index; });
}

const EdgeCalibration *Calibration::edge(int a, int b) const {
    for (const auto &e : edges) {
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
            return &e;
        }
    }
    return nullptr;
}

Calibration load_calibration(std::string_view text) {
    Calibration cal;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    auto fail = [&](const std::string &what) {
        throw ConfigError("calibration line " + std::to_string(line_number) + ": " + what);
    };
    auto number = [&](const std::string &token, const std::string &field) {
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
            fail("field `" + field + "`: bad number `" + token + "`");
        }
        return value;
    };
    auto integer = [&](const std::string &token, const std::string &field) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            fail("field `" + field + "`: bad integer `" + token + "`");
        }
        return value;
    };
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) {
            tokens.push_back(t);
        }
        if (tokens.empty()) {
            continue;
        }
        // key=value pairs after the positional fields
        auto keyed = [&](std::size_t first, std::initializer_list<std::string> required,
                         std::initializer_list<std::string> optional) {
            std::vector<std::pair<std::string, double>> values;
            for (std::size_t i = first; i < tokens.size(); ++i) {
                auto eq = tokens[i].find('=');
                if (eq == std::string::npos) {
                    fail("expected key=value, got `" + tokens[i] + "`");
                }
                std::string key = tokens[i].substr(0, eq);
                bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                             std::find(optional.begin(), optional.end(), key) != optional.end();
                if (!known) {
                    fail("unknown field `" + key + "`");
                }
                for (const auto &v : values) {
                    if (v.first == key) {
                        fail("repeated field `" + key + "`");
                    }
                }
                values.emplace_back(key, number(tokens[i].substr(eq + 1), key));
            }
            for (const auto &key : required) {
                if (std::none_of(values.begin(), values.end(), [&](const auto &v) { return v.first == key; })) {
                    fail("missing field `" + key + "`");
                }
            }
            return values;
        };
        const std::string &kind = tokens[0];
        if (kind == "single_qubit_duration") {
            if (tokens.size() != 2) {
                fail("single_qubit_duration takes one value");
            }
            cal.single_qubit_duration = number(tokens[1], "single_qubit_duration");
        } else if (kind == "qubit") {
            if (tokens.size() < 2) {
                fail("qubit record needs an index");
            }
            QubitCalibration q;
            q.index = integer(tokens[1], "index");
            for (auto &[key, value] : keyed(2, {"readout", "t1", "t2"}, {})) {
                if (key == "readout") {
                    q.readout_error = value;
                } else if (key == "t1") {
                    q.t1 = value;
                } else {
                    q.t2 = value;
                }
            }
            cal.qubits.push_back(q);
        } else if (kind == "edge") {
            if (tokens.size() < 3) {
                fail("edge record needs two qubit indices");
            }
            EdgeCalibration e;
            e.a = integer(tokens[1], "a");
            e.b = integer(tokens[2], "b");
            for (auto &[key, value] : keyed(3, {"cnot"}, {"duration"})) {
                if (key == "cnot") {
                    e.cnot_error = value;
                } else {
                    e.duration = value;
                }
            }
            cal.edges.push_back(e);
        } else {
            fail("unknown record `" + kind + "`");
        }
    }
    cal.validate();
    return cal;
}

Calibration load_calibration_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open calibration file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return load_calibration(buffer.str());
    } catch (const ConfigError &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::string format_calibration(const Calibration &calibration) {
    std::string out = "single_qubit_duration " + shortest(calibration.single_qubit_duration) + "\n";
    for (const auto &q : calibration.qubits) {
        out += "qubit " + std::to_string(q.index) + " readout=" + shortest(q.readout_error) +
               " t1=" + shortest(q.t1) + " t2=" + shortest(q.t2) + "\n";
    }
    for (const auto &e : calibration.edges) {
        out += "edge " + std::to_string(e.a) + " " + std::to_string(e.b) + " cnot=" + shortest(e.cnot_error) +
               " duration=" + shortest(e.duration) + "\n";
    }
    return out;
}

Calibration uniform_chain_calibration(int n_qubits, double readout_error, double cnot_error, double t2_us,
                                      double t1_us) {
    Calibration cal;
    for (int q = 0; q < n_qubits; ++q) {
        cal.qubits.push_back({q, readout_error, t1_us, t2_us});
    }
    for (int q = 0; q + 1 < n_qubits; ++q) {
        cal.edges.push_back({q, q + 1, cnot_error, 0.4});
    }
    cal.validate();
    return cal;
}

std::string NoiseModel::describe() const {
    std::string out;
    auto add = [&](const std::string &part) {
        out += out.empty() ? part : "; " + part;
    };
    if (channels.cnot_depolarizing) {
        add("two-qubit Pauli error after each CNOT at the coupler cnot_error");
    }
    if (channels.dephasing) {
        add("Z dephasing per gate with p = (1 - exp(-duration/T2))/2, single-qubit gates " +
            shortest(calibration.single_qubit_duration) + " us");
    }
    if (channels.readout) {
        add("symmetric readout flips at the qubit readout_error");
    }
    if (out.empty()) {
        out = "noiseless";
    }
    return out + "; T1 not modeled";
}

double dephasing_probability(double duration_us, double t2_us) {
    return 0.5 * (1.0 - std::exp(-duration_us / t2_us));
}

void check_layout(const Circuit &circuit, std::span<const int> layout, const Calibration &calibration) {
    if (static_cast<int>(layout.size()) != circuit.n_qubits()) {
        throw InfeasibleError("layout has " + std::to_string(layout.size()) + " entries for a " +
                              std::to_string(circuit.n_qubits()) + "-qubit circuit");
    }
    std::set<int> used;
    for (int p : layout) {
        if (!calibration.has_qubit(p)) {
            throw InfeasibleError("layout uses qubit " + std::to_string(p) + " absent from the calibration");
        }
        if (!used.insert(p).second) {
            throw InfeasibleError("layout uses qubit " + std::to_string(p) + " twice");
        }
    }
    for (const Gate &g : circuit.gates()) {
        if (g.is_two_qubit() && calibration.edge(layout[g.qubits[0]], layout[g.qubits[1]]) == nullptr) {
            throw InfeasibleError("CNOT between physical qubits " + std::to_string(layout[g.qubits[0]]) + " and " +
                                  std::to_string(layout[g.qubits[1]]) + " has no coupler");
        }
    }
}

namespace {

// One inserted error: Pauli `code` on `qubit` (1 = X, 2 = Y, 3 = Z) right after gate `gate`.
struct ErrorEvent {
    std::size_t gate;
    int qubit;
    int code;
};

void apply_pauli(StateVector &state, int qubit, int code) {
    switch (code) {
        case 1:
            apply_gate(state, Gate::x(qubit));
            break;
        case 2:
            apply_gate(state, Gate::y(qubit));
            break;
        case 3:
            apply_gate(state, Gate::z(qubit));
            break;
        default:
            break;
    }
}

// Per-gate error probabilities resolved against the layout once per run.
struct GateRates {
    double depolarizing = 0.0;
    double dephasing[2] = {0.0, 0.0};
};

// Noiseless states saved every `stride` gates so error trajectories can start
// from the last checkpoint before their first error.
class Checkpoints {
   public:
    Checkpoints(const Circuit &circuit, std::size_t stride) : stride_(stride) {
        StateVector state(circuit.n_qubits());
        const auto &gates = circuit.gates();
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (i % stride_ == 0) {
                saved_.push_back(state);
            }
            apply_gate(state, gates[i]);
        }
        final_ = state;
        if (gates.empty()) {
            saved_.push_back(state);
        }
    }
    // State before gate `index` (index is a multiple of stride) and that index.
    std::pair<const StateVector &, std::size_t> before(std::size_t gate) const {
        std::size_t slot = gate / stride_;
        return {saved_[slot], slot * stride_};
    }
    const StateVector &final_state() const {
        return *final_;
    }

   private:
    std::size_t stride_;
    std::vector<StateVector> saved_;
    std::optional<StateVector> final_;
};

}  // namespace

Counts noisy_counts(const Circuit &circuit, std::span<const int> layout, const NoiseModel &noise,
                    std::uint64_t shots, std::uint64_t seed, int threads) {
    const Calibration &cal = noise.calibration;
    check_layout(circuit, layout, cal);
    const int n = circuit.n_qubits();
    const auto &gates = circuit.gates();

    std::vector<GateRates> rates(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        if (g.is_two_qubit()) {
            const EdgeCalibration *e = cal.edge(layout[g.qubits[0]], layout[g.qubits[1]]);
            if (noise.channels.cnot_depolarizing) {
                rates[i].depolarizing = e->cnot_error;
            }
            if (noise.channels.dephasing) {
                for (int k = 0; k < 2; ++k) {
                    rates[i].dephasing[k] = dephasing_probability(e->duration, cal.qubit(layout[g.qubits[k]]).t2);
                }
            }
        } else if (noise.channels.dephasing) {
            rates[i].dephasing[0] = dephasing_probability(cal.single_qubit_duration, cal.qubit(layout[g.qubits[0]]).t2);
        }
    }
    std::vector<double> readout(n, 0.0);
    if (noise.channels.readout) {
        for (int q = 0; q < n; ++q) {
            readout[q] = cal.qubit(layout[q]).readout_error;
        }
    }

    // Keep checkpoint memory near 256 MiB.
    const double state_bytes = 16.0 * static_cast<double>(std::size_t{1} << n);
    const double budget = 256.0 * 1024 * 1024;
    std::size_t stride = 1;
    if (!gates.empty()) {
        stride = static_cast<std::size_t>(std::ceil(static_cast<double>(gates.size()) * state_bytes / budget));
        stride = std::clamp<std::size_t>(stride, 1, gates.size());
    }
    const Checkpoints checkpoints(circuit, stride);
    const std::vector<double> clean_cdf = cumulative_probabilities(checkpoints.final_state());

    const std::size_t chunks = static_cast<std::size_t>(std::max(threads, 1));
    std::vector<Counts> partial(chunks, Counts(n));
    parallel_for(chunks, threads, [&](std::size_t c) {
        auto [begin, end] = chunk_range(shots, chunks, c);
        std::vector<ErrorEvent> events;
        for (std::uint64_t k = begin; k < end; ++k) {
            CounterRng noise_rng(seed, k, StreamTag::Noise);
            events.clear();
            for (std::size_t i = 0; i < gates.size(); ++i) {
                const Gate &g = gates[i];
                if (g.is_two_qubit()) {
                    if (noise_rng.uniform() < rates[i].depolarizing) {
                        int code = static_cast<int>(noise_rng.below(15)) + 1;
                        if (code / 4) {
                            events.push_back({i, g.qubits[0], code / 4});
                        }
                        if (code % 4) {
                            events.push_back({i, g.qubits[1], code % 4});
                        }
                    }
                    for (int q = 0; q < 2; ++q) {
                        if (noise_rng.uniform() < rates[i].dephasing[q]) {
                            events.push_back({i, g.qubits[q], 3});
                        }
                    }
                } else if (noise_rng.uniform() < rates[i].dephasing[0]) {
                    events.push_back({i, g.qubits[0], 3});
                }
            }

            CounterRng meas_rng(seed, k, StreamTag::Measurement);
            std::uint64_t outcome = 0;
            if (events.empty()) {
                outcome = sample_outcome(clean_cdf, meas_rng.uniform());
            } else {
                auto [start_state, start] = checkpoints.before(events.front().gate);
                StateVector state = start_state;
                std::size_t e = 0;
                for (std::size_t i = start; i < gates.size(); ++i) {
                    apply_gate(state, gates[i]);
                    for (; e < events.size() && events[e].gate == i; ++e) {
                        apply_pauli(state, events[e].qubit, events[e].code);
                    }
                }
                outcome = sample_outcome(cumulative_probabilities(state), meas_rng.uniform());
            }
            for (int q = 0; q < n; ++q) {
                if (meas_rng.uniform() < readout[q]) {
                    outcome ^= std::uint64_t{1} << q;
                }
            }
            partial[c].add(outcome);
        }
    });
    Counts counts(n);
    for (const Counts &p : partial) {
        for (auto [outcome, m] : p.table()) {
            counts.add(outcome, m);
        }
    }
    return counts;
}

}  // namespace quenchsim
