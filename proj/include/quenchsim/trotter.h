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

#ifndef QUENCHSIM_TROTTER_H
#define QUENCHSIM_TROTTER_H

#include <string>
#include <vector>

#include "quenchsim/circuit.h"
#include "quenchsim/model.h"
#include "quenchsim/synth.h"

namespace quenchsim {

enum class TrotterScheme { Basic, Symmetric };

TrotterScheme parse_scheme(const std::string &text);
std::string scheme_name(TrotterScheme scheme);

/// Evolution to t = n_steps * dt + sub_dt: n_steps full steps followed by one
/// step of length sub_dt. sub_dt == dt is a full final step; sub_dt == 0 means
/// no partial step (only meaningful for the t = 0 point when n_steps == 0).
struct TrotterPlan {
    TrotterScheme scheme = TrotterScheme::Symmetric;
    double dt = 0.0;
    int n_steps = 0;
    double sub_dt = 0.0;
    int substep_divisor = 1;

    double time() const {
        return n_steps * dt + sub_dt;
    }
    /// Throws std::invalid_argument unless dt > 0, n_steps >= 0,
    /// 0 <= sub_dt <= dt and substep_divisor >= 1.
    void validate() const;
};

/// Grid of plans: t = 0, then for M = 0..max_steps-1 and k = 1..r the point
/// M dt + k dt / r. Returned in increasing time order.
std::vector<TrotterPlan> time_grid(TrotterScheme scheme, double dt, int max_steps, int substep_divisor);

enum class LayerKind { Field, EvenBonds, OddBonds };

/// One layer of commuting factors, each evolved for `tau`.
struct Layer {
    LayerKind kind;
    double tau;
    bool operator==(const Layer &) const = default;
};

/// Basic: fields, even bonds, odd bonds (all for dt).
/// Symmetric: fields dt/2, even dt/2, odd dt, even dt/2, fields dt/2.
std::vector<Layer> step_layers(TrotterScheme scheme, double dt);

/// Peephole pass: drops field layers when every h_j is zero and sums the
/// durations of adjacent layers of the same kind (exact, since a layer's
/// factors commute and share one generator).
std::vector<Layer> merge_layers(const std::vector<Layer> &layers, bool has_fields);

/// Even bonds are the 1-based bonds j = 2, 4, ... (qubits (1,2), (3,4), ...);
/// odd bonds are j = 1, 3, ... (qubits (0,1), (2,3), ...).
Circuit compile_layers(const ModelParams &params, const std::vector<Layer> &layers, const SynthOptions &options = {});

/// One step of each scheme, not fused. Any finite dt is accepted (dt = 0 gives the identity).
Circuit basic_step(const ModelParams &params, double dt, const SynthOptions &options = {});
Circuit symmetric_step(const ModelParams &params, double dt, const SynthOptions &options = {});

/// Layers of the full plan after merging.
std::vector<Layer> plan_layers(const ModelParams &params, const TrotterPlan &plan);

/// Full evolution circuit for the plan: merged layers, compiled and fused.
Circuit evolution_circuit(const ModelParams &params, const TrotterPlan &plan, const SynthOptions &options = {});

/// X on every down site of the initial state.
Circuit preparation_circuit(const InitialState &init);

/// Preparation followed by evolution, fused.
Circuit quench_circuit(const ModelParams &params, const TrotterPlan &plan, const InitialState &init,
                       const SynthOptions &options = {});

}  // namespace quenchsim

#endif  // QUENCHSIM_TROTTER_H
