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

#include "quenchsim/device_select.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>

#include "quenchsim/errors.h"

namespace quenchsim {

void SelectionConfig::validate() const {
    if (chain_length < 2) {
        throw ConfigError("selection: chain_length must be >= 2");
    }
    if (!(meas_threshold > 0.0)) {
        throw ConfigError("selection: meas_threshold must be positive");
    }
    if (!(t2_threshold > 0.0)) {
        throw ConfigError("selection: t2_threshold must be positive");
    }
    if (!(relaxation_factor > 1.0)) {
        throw ConfigError("selection: relaxation_factor must exceed 1");
    }
}

namespace {

struct Candidate {
    std::vector<int> chain;
    double average = std::numeric_limits<double>::infinity();
};

bool better(const Candidate &a, const Candidate &b) {
    if (a.average != b.average) {
        return a.average < b.average;
    }
    return a.chain < b.chain;
}

// Every simple path on `chain_length` vertices over `edges`; keeps the best.
std::optional<Candidate> best_path(const std::vector<const EdgeCalibration *> &edges, int chain_length) {
    std::map<int, std::vector<std::pair<int, double>>> adjacency;
    for (const EdgeCalibration *e : edges) {
        adjacency[e->a].emplace_back(e->b, e->cnot_error);
        adjacency[e->b].emplace_back(e->a, e->cnot_error);
    }
    std::optional<Candidate> best;
    std::vector<int> path;
    std::vector<double> errors;
    auto visit = [&](auto &&self, int vertex) -> void {
        if (static_cast<int>(path.size()) == chain_length) {
            // Each undirected path is met from both ends; take the canonical one.
            if (path.front() > path.back()) {
                return;
            }
            double sum = 0.0;
            for (double e : errors) {
                sum += e;
            }
            Candidate c{path, sum / static_cast<double>(errors.size())};
            if (!best || better(c, *best)) {
                best = std::move(c);
            }
            return;
        }
        for (auto [next, error] : adjacency[vertex]) {
            if (std::find(path.begin(), path.end(), next) != path.end()) {
                continue;
            }
            path.push_back(next);
            errors.push_back(error);
            self(self, next);
            path.pop_back();
            errors.pop_back();
        }
    };
    for (auto &[start, _] : adjacency) {
        path.assign(1, start);
        errors.clear();
        visit(visit, start);
    }
    return best;
}

std::vector<int> allowed_qubits(const Calibration &calibration, double meas_threshold, double t2_threshold) {
    std::vector<int> allowed;
    for (const auto &q : calibration.qubits) {
        if (q.readout_error <= meas_threshold && q.t2 >= t2_threshold) {
            allowed.push_back(q.index);
        }
    }
    std::sort(allowed.begin(), allowed.end());
    return allowed;
}

std::vector<const EdgeCalibration *> edges_among(const Calibration &calibration, const std::vector<int> &allowed) {
    auto ok = [&](int q) { return std::binary_search(allowed.begin(), allowed.end(), q); };
    std::vector<const EdgeCalibration *> edges;
    for (const auto &e : calibration.edges) {
        if (ok(e.a) && ok(e.b)) {
            edges.push_back(&e);
        }
    }
    std::sort(edges.begin(), edges.end(), [](const EdgeCalibration *x, const EdgeCalibration *y) {
        if (x->cnot_error != y->cnot_error) {
            return x->cnot_error < y->cnot_error;
        }
        return std::minmax(x->a, x->b) < std::minmax(y->a, y->b);
    });
    return edges;
}

}  // namespace

ChainSelection best_chain(const Calibration &calibration, const SelectionConfig &config) {
    config.validate();
    calibration.validate();
    const int n = config.chain_length;
    double threshold = config.meas_threshold;
    int relaxations = 0;
    while (true) {
        // Qubits and couplers that pass the thresholds, best CNOTs first.
        const std::vector<int> allowed = allowed_qubits(calibration, threshold, config.t2_threshold);
        const std::vector<const EdgeCalibration *> edges = edges_among(calibration, allowed);
        const int n_allowed = static_cast<int>(allowed.size());

        // Could a higher measurement threshold admit another qubit?
        bool can_relax = false;
        for (const auto &q : calibration.qubits) {
            if (q.t2 >= config.t2_threshold && q.readout_error > threshold) {
                can_relax = true;
            }
        }
        const int n_edges = static_cast<int>(edges.size());
        const int m_limit = can_relax ? n_allowed : std::max(n_allowed, n_edges);

        // Grow the restricted CNOT list until a chain appears.
        for (int m = n - 1; m <= m_limit; ++m) {
            const int kept = std::min(m, n_edges);
            std::vector<const EdgeCalibration *> restricted(edges.begin(), edges.begin() + kept);
            if (auto found = best_path(restricted, n)) {
                return {found->chain, found->average, threshold, kept, n_allowed, relaxations};
            }
            if (kept == n_edges && !can_relax) {
                break;
            }
        }
        if (!can_relax) {
            throw InfeasibleError("no chain of " + std::to_string(n) +
                                  " qubits exists even with every T2-qualified qubit allowed");
        }
        // Nothing found: raise the threshold until one more qubit is admitted.
        while (static_cast<int>(allowed_qubits(calibration, threshold, config.t2_threshold).size()) == n_allowed) {
            threshold *= config.relaxation_factor;
        }
        ++relaxations;
    }
}

ChainSelection brute_force_chain(const Calibration &calibration, const SelectionConfig &config) {
    config.validate();
    calibration.validate();
    const std::vector<int> allowed = allowed_qubits(calibration, config.meas_threshold, config.t2_threshold);
    const std::vector<const EdgeCalibration *> edges = edges_among(calibration, allowed);
    auto found = best_path(edges, config.chain_length);
    if (!found) {
        throw InfeasibleError("no chain of " + std::to_string(config.chain_length) +
                              " qubits meets the thresholds");
    }
    return {found->chain, found->average, config.meas_threshold, static_cast<int>(edges.size()),
            static_cast<int>(allowed.size()), 0};
}

ChainStatistics chain_statistics(const Calibration &calibration, const std::vector<int> &chain) {
    if (chain.size() < 2) {
        throw std::invalid_argument("chain_statistics: chain needs at least two qubits");
    }
    auto spread = [](const std::vector<double> &values) {
        Spread s{values.front(), 0.0, values.front()};
        for (double v : values) {
            s.min = std::min(s.min, v);
            s.max = std::max(s.max, v);
            s.avg += v;
        }
        s.avg /= static_cast<double>(values.size());
        return s;
    };
    std::vector<double> readout, t2, cnot;
    for (int q : chain) {
        const auto &cal = calibration.qubit(q);
        readout.push_back(cal.readout_error);
        t2.push_back(cal.t2);
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const EdgeCalibration *e = calibration.edge(chain[i], chain[i + 1]);
        if (e == nullptr) {
            throw InfeasibleError("qubits " + std::to_string(chain[i]) + " and " + std::to_string(chain[i + 1]) +
                                  " are not coupled");
        }
        cnot.push_back(e->cnot_error);
    }
    return {spread(readout), spread(cnot), spread(t2)};
}

std::string format_chain_report(const std::vector<int> &chain, const ChainStatistics &stats) {
    std::string out = "chain:";
    for (int q : chain) {
        out += " " + std::to_string(q);
    }
    out += "\n";
    char line[128];
    std::snprintf(line, sizeof(line), "%-14s %8s %8s %8s\n", "", "min", "avg", "max");
    out += line;
    std::snprintf(line, sizeof(line), "%-14s %8.4f %8.4f %8.4f\n", "readout error", stats.readout_error.min,
                  stats.readout_error.avg, stats.readout_error.max);
    out += line;
    std::snprintf(line, sizeof(line), "%-14s %8.4f %8.4f %8.4f\n", "CNOT error", stats.cnot_error.min,
                  stats.cnot_error.avg, stats.cnot_error.max);
    out += line;
    std::snprintf(line, sizeof(line), "%-14s %8.2f %8.2f %8.2f\n", "T2 (us)", stats.t2.min, stats.t2.avg,
                  stats.t2.max);
    out += line;
    return out;
}

}  // namespace quenchsim
