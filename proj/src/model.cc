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

#include "quenchsim/model.h"

#include <algorithm>
#include <stdexcept>

#include "quenchsim/rng.h"

namespace quenchsim {

void ModelParams::validate() const {
    if (n_sites < 2) {
        throw std::invalid_argument("ModelParams: n_sites must be >= 2");
    }
    if (static_cast<int>(fields.size()) != n_sites) {
        throw std::invalid_argument("ModelParams: fields must have n_sites entries");
    }
}

bool ModelParams::has_fields() const {
    return std::any_of(fields.begin(), fields.end(), [](double h) { return h != 0.0; });
}

ModelCase parse_model_case(const std::string &text) {
    if (text == "I" || text == "1") return ModelCase::XX;
    if (text == "II" || text == "2") return ModelCase::DisorderedXX;
    if (text == "III" || text == "3") return ModelCase::XXZ;
    if (text == "IV" || text == "4") return ModelCase::XXZLinearPotential;
    throw std::invalid_argument("unknown model case `" + text + "` (expected I, II, III or IV)");
}

std::vector<double> sample_disorder(int n_sites, double strength, std::uint64_t seed, std::uint64_t index) {
    if (strength < 0.0) {
        throw std::invalid_argument("disorder strength must be >= 0");
    }
    CounterRng rng(seed, index, StreamTag::Disorder);
    std::vector<double> fields(static_cast<std::size_t>(n_sites));
    for (auto &h : fields) {
        h = strength * (2.0 * rng.uniform() - 1.0);
    }
    return fields;
}

ModelParams build_case(ModelCase model_case, int n_sites, double J, double U, double h, std::uint64_t seed) {
    if (n_sites < 2) {
        throw std::invalid_argument("build_case: n_sites must be >= 2");
    }
    ModelParams params{n_sites, J, U, std::vector<double>(static_cast<std::size_t>(n_sites), 0.0)};
    switch (model_case) {
        case ModelCase::XX:
            if (U != 0.0 || h != 0.0) {
                throw std::invalid_argument("case I (XX chain) requires U = 0 and h = 0");
            }
            break;
        case ModelCase::DisorderedXX:
            if (U != 0.0) {
                throw std::invalid_argument("case II (disordered XX chain) requires U = 0");
            }
            if (h < 0.0) {
                throw std::invalid_argument("case II disorder strength h must be >= 0");
            }
            params.fields = sample_disorder(n_sites, h, seed);
            break;
        case ModelCase::XXZ:
            if (U == 0.0 || h != 0.0) {
                throw std::invalid_argument("case III (XXZ chain) requires U != 0 and h = 0");
            }
            break;
        case ModelCase::XXZLinearPotential:
            if (!(U > 0.0)) {
                throw std::invalid_argument("case IV (XXZ with linear potential) requires U > 0");
            }
            for (int j = 0; j < n_sites; ++j) {
                params.fields[j] = h * (j + 1);
            }
            break;
    }
    return params;
}

std::uint64_t InitialState::basis_index() const {
    std::uint64_t index = 0;
    for (std::size_t j = 0; j < down.size(); ++j) {
        if (down[j]) {
            index |= std::uint64_t{1} << j;
        }
    }
    return index;
}

int InitialState::total_sz() const {
    int sz = 0;
    for (bool d : down) {
        sz += d ? -1 : 1;
    }
    return sz;
}

InitialState make_initial_state(InitialKind kind, int n_sites) {
    if (n_sites < 1) {
        throw std::invalid_argument("initial state needs at least one site");
    }
    InitialState init;
    init.kind = kind;
    init.down.assign(static_cast<std::size_t>(n_sites), false);
    switch (kind) {
        case InitialKind::DomainWall:
            if (n_sites % 2 != 0) {
                throw std::invalid_argument("domain wall initial state requires an even number of sites");
            }
            for (int j = 0; j < n_sites / 2; ++j) {
                init.down[j] = true;
            }
            break;
        case InitialKind::Neel:
            for (int j = 1; j < n_sites; j += 2) {
                init.down[j] = true;
            }
            break;
        case InitialKind::Bitstring:
            throw std::invalid_argument("use initial_state_from_bitstring for explicit patterns");
    }
    return init;
}

InitialState initial_state_from_bitstring(const std::string &bits) {
    if (bits.empty()) {
        throw std::invalid_argument("initial state bitstring is empty");
    }
    InitialState init;
    init.kind = InitialKind::Bitstring;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("initial state bitstring may only contain 0 (up) and 1 (down)");
        }
        init.down.push_back(c == '1');
    }
    return init;
}

StateVector initial_statevector(const InitialState &init, int n_sites) {
    if (init.n_sites() != n_sites) {
        throw std::invalid_argument("initial state pattern length does not match n_sites");
    }
    return StateVector::basis_state(n_sites, init.basis_index());
}

Eigen::MatrixXd hamiltonian_matrix(const ModelParams &params) {
    params.validate();
    if (params.n_sites > kMaxDenseSites) {
        throw std::invalid_argument("hamiltonian_matrix: N exceeds the dense limit of " +
                                    std::to_string(kMaxDenseSites));
    }
    const std::uint64_t dim = std::uint64_t{1} << params.n_sites;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t col = 0; col < dim; ++col) {
        for_each_hamiltonian_entry(params, col, [&](std::uint64_t row, double value) {
            h(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += value;
        });
    }
    return h;
}

Eigen::VectorXd total_sz_diagonal(int n_sites) {
    const std::uint64_t dim = std::uint64_t{1} << n_sites;
    Eigen::VectorXd sz(static_cast<Eigen::Index>(dim));
    for (std::uint64_t i = 0; i < dim; ++i) {
        sz(static_cast<Eigen::Index>(i)) = total_sz(i, n_sites);
    }
    return sz;
}

}  // namespace quenchsim
