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

#include <cmath>
#include <stdexcept>

namespace quenchsim {

TrotterScheme parse_scheme(const std::string &text) {
    if (text == "basic") {
        return TrotterScheme::Basic;
    }
    if (text == "symmetric") {
        return TrotterScheme::Symmetric;
    }
    throw std::invalid_argument("unknown Trotter scheme `" + text + "` (expected basic or symmetric)");
}

std::string scheme_name(TrotterScheme scheme) {
    return scheme == TrotterScheme::Basic ? "basic" : "symmetric";
}

void TrotterPlan::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("TrotterPlan: dt must be positive and finite");
    }
    if (n_steps < 0) {
        throw std::invalid_argument("TrotterPlan: n_steps must be >= 0");
    }
    if (!(sub_dt >= 0.0 && sub_dt <= dt)) {
        throw std::invalid_argument("TrotterPlan: sub_dt must lie in [0, dt]");
    }
    if (substep_divisor < 1) {
        throw std::invalid_argument("TrotterPlan: substep_divisor must be >= 1");
    }
}

std::vector<TrotterPlan> time_grid(TrotterScheme scheme, double dt, int max_steps, int substep_divisor) {
    TrotterPlan origin{scheme, dt, 0, 0.0, substep_divisor};
    origin.validate();
    if (max_steps < 0) {
        throw std::invalid_argument("time_grid: max_steps must be >= 0");
    }
    std::vector<TrotterPlan> grid{origin};
    for (int m = 0; m < max_steps; ++m) {
        for (int k = 1; k <= substep_divisor; ++k) {
            double sub = k == substep_divisor ? dt : dt * k / substep_divisor;
            grid.push_back({scheme, dt, m, sub, substep_divisor});
        }
    }
    return grid;
}

std::vector<Layer> step_layers(TrotterScheme scheme, double dt) {
    if (scheme == TrotterScheme::Basic) {
        return {{LayerKind::Field, dt}, {LayerKind::EvenBonds, dt}, {LayerKind::OddBonds, dt}};
    }
    return {{LayerKind::Field, dt / 2},
            {LayerKind::EvenBonds, dt / 2},
            {LayerKind::OddBonds, dt},
            {LayerKind::EvenBonds, dt / 2},
            {LayerKind::Field, dt / 2}};
}

std::vector<Layer> merge_layers(const std::vector<Layer> &layers, bool has_fields) {
    std::vector<Layer> merged;
    for (const Layer &layer : layers) {
        if (layer.kind == LayerKind::Field && !has_fields) {
            continue;
        }
        if (layer.tau == 0.0) {
            continue;
        }
        if (!merged.empty() && merged.back().kind == layer.kind) {
            merged.back().tau += layer.tau;
        } else {
            merged.push_back(layer);
        }
    }
    return merged;
}

Circuit compile_layers(const ModelParams &params, const std::vector<Layer> &layers, const SynthOptions &options) {
    params.validate();
    const int n = params.n_sites;
    Circuit circuit(n);
    for (const Layer &layer : layers) {
        switch (layer.kind) {
            case LayerKind::Field:
                for (int q = 0; q < n; ++q) {
                    double angle = 2.0 * params.fields[q] * layer.tau;
                    if (angle != 0.0) {
                        circuit.push_back(Gate::rz(q, angle));
                    }
                }
                break;
            case LayerKind::EvenBonds:
                for (int q = 1; q + 1 < n; q += 2) {
                    append_block(circuit, q, q + 1, params.hopping, params.interaction, layer.tau, options);
                }
                break;
            case LayerKind::OddBonds:
                for (int q = 0; q + 1 < n; q += 2) {
                    append_block(circuit, q, q + 1, params.hopping, params.interaction, layer.tau, options);
                }
                break;
        }
    }
    return circuit;
}

Circuit basic_step(const ModelParams &params, double dt, const SynthOptions &options) {
    return compile_layers(params, step_layers(TrotterScheme::Basic, dt), options);
}

Circuit symmetric_step(const ModelParams &params, double dt, const SynthOptions &options) {
    return compile_layers(params, step_layers(TrotterScheme::Symmetric, dt), options);
}

std::vector<Layer> plan_layers(const ModelParams &params, const TrotterPlan &plan) {
    plan.validate();
    std::vector<Layer> layers;
    for (int m = 0; m < plan.n_steps; ++m) {
        auto step = step_layers(plan.scheme, plan.dt);
        layers.insert(layers.end(), step.begin(), step.end());
    }
    if (plan.sub_dt > 0.0) {
        auto step = step_layers(plan.scheme, plan.sub_dt);
        layers.insert(layers.end(), step.begin(), step.end());
    }
    return merge_layers(layers, params.has_fields());
}

Circuit evolution_circuit(const ModelParams &params, const TrotterPlan &plan, const SynthOptions &options) {
    return fuse_single_qubit_runs(compile_layers(params, plan_layers(params, plan), options));
}

Circuit preparation_circuit(const InitialState &init) {
    Circuit circuit(init.n_sites());
    for (int q = 0; q < init.n_sites(); ++q) {
        if (init.down[q]) {
            circuit.push_back(Gate::x(q));
        }
    }
    return circuit;
}

Circuit quench_circuit(const ModelParams &params, const TrotterPlan &plan, const InitialState &init,
                       const SynthOptions &options) {
    if (init.n_sites() != params.n_sites) {
        throw std::invalid_argument("quench_circuit: initial state width does not match the model");
    }
    Circuit circuit = preparation_circuit(init);
    circuit.extend(compile_layers(params, plan_layers(params, plan), options));
    return fuse_single_qubit_runs(circuit);
}

}  // namespace quenchsim
