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

#include "quenchsim/experiment.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "quenchsim/errors.h"
#include "quenchsim/mitigation.h"
#include "quenchsim/parallel.h"
#include "quenchsim/rng.h"
#include "quenchsim/sim.h"

namespace quenchsim {

using nlohmann::json;

namespace {

const std::set<std::string> kObservableNames = {"magnetization", "n_half",  "correlations",     "all_correlations",
                                                "qfi",           "entropy", "physical_fraction"};

// Rejects keys outside `allowed` so typos fail loudly.
void check_keys(const json &object, const std::string &where, std::initializer_list<std::string> allowed) {
    if (!object.is_object()) {
        throw ConfigError(where + ": expected an object");
    }
    for (const auto &item : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            throw ConfigError(where + ": unknown key `" + item.key() + "`");
        }
    }
}

template <typename T>
T get(const json &object, const std::string &key, const std::string &where, T fallback) {
    if (!object.contains(key)) {
        return fallback;
    }
    try {
        return object.at(key).get<T>();
    } catch (const json::exception &) {
        throw ConfigError(where + "." + key + ": wrong type");
    }
}

template <typename T>
T require(const json &object, const std::string &key, const std::string &where) {
    if (!object.contains(key)) {
        throw ConfigError(where + ": missing `" + key + "`");
    }
    return get<T>(object, key, where, T{});
}

std::uint64_t get_u64(const json &object, const std::string &key, const std::string &where, std::uint64_t fallback) {
    if (!object.contains(key)) {
        return fallback;
    }
    const json &value = object.at(key);
    if (!value.is_number_integer() || (value.is_number_integer() && !value.is_number_unsigned() && value.get<long long>() < 0)) {
        throw ConfigError(where + "." + key + ": expected a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

void check_schema(const json &doc) {
    if (!doc.is_object()) {
        throw ConfigError("config: top level must be an object");
    }
    if (!doc.contains("schema_version")) {
        throw ConfigError("config: missing `schema_version`");
    }
    if (!doc.at("schema_version").is_number_integer() || doc.at("schema_version").get<int>() != kConfigSchemaVersion) {
        throw ConfigError("config: unsupported schema_version (expected " + std::to_string(kConfigSchemaVersion) + ")");
    }
}

std::filesystem::path resolve(const std::filesystem::path &base, const std::string &path) {
    std::filesystem::path p(path);
    return p.is_relative() && !base.empty() ? base / p : p;
}

SelectionConfig parse_selection(const json &doc, const std::string &where) {
    SelectionConfig s;
    check_keys(doc, where, {"chain_length", "meas_threshold", "t2_threshold", "relaxation_factor"});
    s.chain_length = get<int>(doc, "chain_length", where, s.chain_length);
    s.meas_threshold = get<double>(doc, "meas_threshold", where, s.meas_threshold);
    s.t2_threshold = get<double>(doc, "t2_threshold", where, s.t2_threshold);
    s.relaxation_factor = get<double>(doc, "relaxation_factor", where, s.relaxation_factor);
    return s;
}

json read_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::string case_name(ModelCase c) {
    switch (c) {
        case ModelCase::XX:
            return "I";
        case ModelCase::DisorderedXX:
            return "II";
        case ModelCase::XXZ:
            return "III";
        case ModelCase::XXZLinearPotential:
            return "IV";
    }
    return "?";
}

std::string source_name(Source s) {
    switch (s) {
        case Source::Exact:
            return "ed";
        case Source::Trotter:
            return "trotter";
        case Source::Shots:
            return "shots";
    }
    return "?";
}

bool wants(const ExperimentConfig &config, const std::string &observable) {
    return std::find(config.observables.begin(), config.observables.end(), observable) != config.observables.end();
}

bool has_source(const ExperimentConfig &config, Source s) {
    return std::find(config.sources.begin(), config.sources.end(), s) != config.sources.end();
}

std::vector<ModelParams> realizations(const ExperimentConfig &config) {
    const ModelConfig &m = config.model;
    std::vector<ModelParams> out;
    if (m.model_case != ModelCase::DisorderedXX) {
        out.push_back(build_case(m.model_case, m.n_sites, m.J, m.U, m.h));
        return out;
    }
    for (int r = 0; r < m.disorder_realizations; ++r) {
        ModelParams p = build_case(m.model_case, m.n_sites, m.J, m.U, 0.0);
        p.fields = sample_disorder(m.n_sites, m.h, m.disorder_seed, static_cast<std::uint64_t>(r));
        out.push_back(std::move(p));
    }
    return out;
}

// Named values for one distribution, in output order.
struct Value {
    std::string name;
    Estimate estimate;
};

std::vector<Value> observe(const ExperimentConfig &config, const Distribution &dist, const StateVector *state) {
    const int n = dist.n_qubits();
    std::vector<Value> values;
    if (wants(config, "magnetization")) {
        for (int j = 0; j < n; ++j) {
            values.push_back({"M_" + std::to_string(j + 1), magnetization(dist, j)});
        }
    }
    if (wants(config, "n_half")) {
        values.push_back({"N_half", n_half(dist)});
    }
    if (wants(config, "all_correlations")) {
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                values.push_back(
                    {"C_" + std::to_string(j + 1) + "_" + std::to_string(k + 1), connected_correlator(dist, j, k)});
            }
        }
    } else if (wants(config, "correlations")) {
        for (int k = 1; k < n; ++k) {
            values.push_back({"C_1_" + std::to_string(k + 1), connected_correlator(dist, 0, k)});
        }
    }
    if (wants(config, "qfi")) {
        std::vector<int> signs = half_chain_signs(n);
        values.push_back({"F_Q", qfi(dist, signs)});
    }
    if (wants(config, "entropy") && state != nullptr) {
        values.push_back({"S_vN", {entanglement_entropy(*state, n / 2), 0.0}});
    }
    if (wants(config, "physical_fraction")) {
        values.push_back({"physical_fraction", physical_fraction(dist, config.initial_state.total_sz())});
    }
    return values;
}

// Averages per-realization values; any undefined realization makes the average undefined.
struct Accumulator {
    std::vector<std::string> names;
    std::vector<double> sums;
    std::vector<double> variances;
    bool undefined = false;
    double retained = 0.0;
    int count = 0;

    void add(const std::vector<Value> &values, double retained_fraction) {
        if (names.empty()) {
            for (const auto &v : values) {
                names.push_back(v.name);
            }
            sums.assign(values.size(), 0.0);
            variances.assign(values.size(), 0.0);
        }
        for (std::size_t i = 0; i < values.size(); ++i) {
            sums[i] += values[i].estimate.value;
            variances[i] += values[i].estimate.std_error * values[i].estimate.std_error;
        }
        retained += retained_fraction;
        ++count;
    }

    void emit(std::vector<ObservableRecord> &out, double t, const std::string &source, bool with_retained,
              const std::vector<std::string> &fallback_names) const {
        const auto &row_names = names.empty() ? fallback_names : names;
        for (std::size_t i = 0; i < row_names.size(); ++i) {
            ObservableRecord r;
            r.time = t;
            r.name = row_names[i];
            r.source = source;
            if (!undefined && count > 0) {
                r.value = sums[i] / count;
                r.std_error = std::sqrt(variances[i]) / count;
            }
            if (with_retained) {
                r.retained_fraction = count > 0 ? retained / count : 0.0;
            }
            out.push_back(std::move(r));
        }
    }
};

std::vector<std::string> names_of(const std::vector<Value> &values) {
    std::vector<std::string> names;
    for (const auto &v : values) {
        names.push_back(v.name);
    }
    return names;
}

std::optional<NoiseSetup> make_noise(const ExperimentConfig &config, int n_qubits) {
    if (!config.noise) {
        return std::nullopt;
    }
    NoiseSetup setup;
    setup.model.calibration = load_calibration_file(config.noise->calibration);
    setup.model.channels = config.noise->channels;
    setup.layout = resolve_layout(config, setup.model.calibration, n_qubits);
    return setup;
}

Counts run_shots(const Circuit &circuit, const std::optional<NoiseSetup> &noise, std::uint64_t shots,
                 std::uint64_t seed) {
    if (noise) {
        return noisy_counts(circuit, noise->layout, noise->model, shots, seed);
    }
    return sample_counts(apply_circuit(StateVector(circuit.n_qubits()), circuit), shots, seed);
}

json base_metadata(const ExperimentConfig &config, const std::string &command,
                   const std::optional<NoiseSetup> &noise) {
    json meta;
    meta["command"] = command;
    meta["schema_version"] = kConfigSchemaVersion;
    meta["model"] = {{"case", case_name(config.model.model_case)},
                     {"n_sites", config.model.n_sites},
                     {"J", config.model.J},
                     {"U", config.model.U},
                     {"h", config.model.h},
                     {"disorder_seed", config.model.disorder_seed},
                     {"disorder_realizations", config.model.disorder_realizations}};
    meta["initial_state"] = to_bitstring(config.initial_state.basis_index(), config.initial_state.n_sites());
    meta["scheme"] = scheme_name(config.scheme);
    meta["dt"] = config.dt;
    meta["max_steps"] = config.max_steps;
    meta["substeps"] = config.substeps;
    meta["two_cnot"] = config.two_cnot;
    meta["shots"] = config.shots;
    meta["seed"] = config.seed;
    meta["mitigation"] = config.mitigation;
    if (noise) {
        meta["noise"] = {{"description", noise->model.describe()},
                         {"calibration", config.noise->calibration.filename().string()},
                         {"layout", noise->layout}};
    } else {
        meta["noise"] = "none";
    }
    meta["stderr"] = "mean: sd/sqrt(shots); covariance and F_Q: fourth-moment delta method; exact sources: 0";
    return meta;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (model.n_sites < 2) {
        throw ConfigError("model.n_sites must be >= 2");
    }
    if (model.n_sites > 24) {
        throw ConfigError("model.n_sites must be <= 24");
    }
    if (model.disorder_realizations < 1) {
        throw ConfigError("model.disorder_realizations must be >= 1");
    }
    try {
        build_case(model.model_case, model.n_sites, model.J, model.U,
                   model.model_case == ModelCase::DisorderedXX ? 0.0 : model.h);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("model: ") + e.what());
    }
    if (initial_state.n_sites() != model.n_sites) {
        throw ConfigError("initial_state: length does not match model.n_sites");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw ConfigError("trotter.dt must be positive");
    }
    if (max_steps < 0) {
        throw ConfigError("trotter.max_steps must be >= 0");
    }
    if (substeps < 1) {
        throw ConfigError("trotter.substeps must be >= 1");
    }
    if (shots < 1) {
        throw ConfigError("shots must be >= 1");
    }
    if (sources.empty()) {
        throw ConfigError("sources must not be empty");
    }
    for (const auto &o : observables) {
        if (!kObservableNames.count(o)) {
            throw ConfigError("observables: unknown observable `" + o + "`");
        }
    }
    if ((std::find(observables.begin(), observables.end(), "n_half") != observables.end()) && model.n_sites % 2) {
        throw ConfigError("observables: n_half needs an even number of sites");
    }
    if (std::find(sources.begin(), sources.end(), Source::Exact) != sources.end() && model.n_sites > kMaxDenseSites) {
        throw ConfigError("sources: ed supports at most " + std::to_string(kMaxDenseSites) + " sites");
    }
    if (!layout.empty() && static_cast<int>(layout.size()) != model.n_sites) {
        throw ConfigError("layout: expected one physical qubit per site");
    }
    if (!layout.empty() && !noise) {
        throw ConfigError("layout: only meaningful with noise");
    }
    selection.validate();
}

ExperimentConfig parse_experiment_config(const json &doc, const std::filesystem::path &base_dir) {
    check_schema(doc);
    check_keys(doc, "config",
               {"schema_version", "model", "initial_state", "trotter", "shots", "seed", "mitigation", "noise", "layout",
                "selection", "observables", "sources", "output"});
    ExperimentConfig c;

    const json model = doc.value("model", json::object());
    check_keys(model, "model", {"case", "n_sites", "J", "U", "h", "disorder_seed", "disorder_realizations"});
    try {
        c.model.model_case = parse_model_case(get<std::string>(model, "case", "model", "I"));
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("model.case: ") + e.what());
    }
    c.model.n_sites = require<int>(model, "n_sites", "model");
    c.model.J = get<double>(model, "J", "model", c.model.J);
    c.model.U = get<double>(model, "U", "model", c.model.U);
    c.model.h = get<double>(model, "h", "model", c.model.h);
    c.model.disorder_seed = get_u64(model, "disorder_seed", "model", 0);
    c.model.disorder_realizations = get<int>(model, "disorder_realizations", "model", 1);

    const std::string init = get<std::string>(doc, "initial_state", "config", "domain_wall");
    try {
        if (init == "domain_wall") {
            c.initial_state = make_initial_state(InitialKind::DomainWall, c.model.n_sites);
        } else if (init == "neel") {
            c.initial_state = make_initial_state(InitialKind::Neel, c.model.n_sites);
        } else {
            c.initial_state = initial_state_from_bitstring(init);
        }
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("initial_state: ") + e.what());
    }

    const json trotter = doc.value("trotter", json::object());
    check_keys(trotter, "trotter", {"scheme", "dt", "max_steps", "substeps", "two_cnot"});
    try {
        c.scheme = parse_scheme(get<std::string>(trotter, "scheme", "trotter", "symmetric"));
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("trotter.scheme: ") + e.what());
    }
    c.dt = get<double>(trotter, "dt", "trotter", c.dt);
    c.max_steps = get<int>(trotter, "max_steps", "trotter", c.max_steps);
    c.substeps = get<int>(trotter, "substeps", "trotter", c.substeps);
    c.two_cnot = get<bool>(trotter, "two_cnot", "trotter", c.two_cnot);

    c.shots = get_u64(doc, "shots", "config", c.shots);
    c.seed = get_u64(doc, "seed", "config", c.seed);
    c.mitigation = get<bool>(doc, "mitigation", "config", c.mitigation);

    if (doc.contains("noise") && !doc.at("noise").is_null()) {
        const json &noise = doc.at("noise");
        check_keys(noise, "noise", {"calibration", "channels"});
        NoiseConfig n;
        n.calibration = resolve(base_dir, require<std::string>(noise, "calibration", "noise"));
        const json channels = noise.value("channels", json::object());
        check_keys(channels, "noise.channels", {"cnot_depolarizing", "readout", "dephasing"});
        n.channels.cnot_depolarizing = get<bool>(channels, "cnot_depolarizing", "noise.channels", true);
        n.channels.readout = get<bool>(channels, "readout", "noise.channels", true);
        n.channels.dephasing = get<bool>(channels, "dephasing", "noise.channels", true);
        c.noise = n;
    }

    if (doc.contains("layout")) {
        const json &layout = doc.at("layout");
        if (layout.is_string()) {
            if (layout.get<std::string>() != "auto") {
                throw ConfigError("layout: expected \"auto\" or a list of qubits");
            }
        } else {
            c.layout = get<std::vector<int>>(doc, "layout", "config", {});
        }
    }
    if (doc.contains("selection")) {
        c.selection = parse_selection(doc.at("selection"), "selection");
    }
    if (doc.contains("observables")) {
        c.observables = get<std::vector<std::string>>(doc, "observables", "config", {});
    }
    if (doc.contains("sources")) {
        c.sources.clear();
        for (const auto &s : get<std::vector<std::string>>(doc, "sources", "config", {})) {
            if (s == "ed") {
                c.sources.push_back(Source::Exact);
            } else if (s == "trotter") {
                c.sources.push_back(Source::Trotter);
            } else if (s == "shots") {
                c.sources.push_back(Source::Shots);
            } else {
                throw ConfigError("sources: unknown source `" + s + "` (expected ed, trotter or shots)");
            }
        }
    }
    if (doc.contains("output")) {
        c.output = resolve(base_dir, get<std::string>(doc, "output", "config", ""));
    }
    c.validate();
    return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path &path) {
    return parse_experiment_config(read_json(path), path.parent_path());
}

SelectQubitsConfig parse_select_config(const json &doc, const std::filesystem::path &base_dir) {
    check_schema(doc);
    check_keys(doc, "config", {"schema_version", "calibration", "selection", "brute_force_check"});
    SelectQubitsConfig c;
    c.calibration = resolve(base_dir, require<std::string>(doc, "calibration", "config"));
    if (doc.contains("selection")) {
        c.selection = parse_selection(doc.at("selection"), "selection");
    }
    c.brute_force_check = get<bool>(doc, "brute_force_check", "config", false);
    c.selection.validate();
    return c;
}

SelectQubitsConfig load_select_config(const std::filesystem::path &path) {
    return parse_select_config(read_json(path), path.parent_path());
}

std::vector<int> resolve_layout(const ExperimentConfig &config, const Calibration &calibration, int n_qubits) {
    if (!config.layout.empty()) {
        if (static_cast<int>(config.layout.size()) < n_qubits) {
            throw ConfigError("layout: needs at least " + std::to_string(n_qubits) + " qubits");
        }
        return std::vector<int>(config.layout.begin(), config.layout.begin() + n_qubits);
    }
    SelectionConfig selection = config.selection;
    selection.chain_length = n_qubits;
    return best_chain(calibration, selection).chain;
}

RunResult run_quench(const ExperimentConfig &config, int threads) {
    config.validate();
    const int n = config.model.n_sites;
    const std::vector<ModelParams> models = realizations(config);
    const std::vector<TrotterPlan> grid = time_grid(config.scheme, config.dt, config.max_steps, config.substeps);
    const std::optional<NoiseSetup> noise = make_noise(config, n);
    const SynthOptions options{config.two_cnot};
    const int target_sz = config.initial_state.total_sz();
    const StateVector initial = initial_statevector(config.initial_state, n);

    std::vector<ExactPropagator> propagators;
    if (has_source(config, Source::Exact)) {
        for (const auto &m : models) {
            propagators.emplace_back(m);
        }
    }
    // Row names for undefined rows come from the initial state, which always has every observable.
    const std::vector<std::string> names = names_of(observe(config, Distribution::from_state(initial), &initial));

    std::vector<std::vector<ObservableRecord>> rows(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        const TrotterPlan &plan = grid[i];
        const double t = plan.time();
        Accumulator ed, trotter, raw, mitigated;
        for (std::size_t r = 0; r < models.size(); ++r) {
            if (has_source(config, Source::Exact)) {
                StateVector state = propagators[r].evolve(initial, t);
                ed.add(observe(config, Distribution::from_state(state), &state), 1.0);
            }
            if (!has_source(config, Source::Trotter) && !has_source(config, Source::Shots)) {
                continue;
            }
            const Circuit circuit = quench_circuit(models[r], plan, config.initial_state, options);
            if (has_source(config, Source::Trotter)) {
                StateVector state = apply_circuit(StateVector(n), circuit);
                trotter.add(observe(config, Distribution::from_state(state), &state), 1.0);
            }
            if (has_source(config, Source::Shots)) {
                const std::uint64_t seed = derive_seed(derive_seed(config.seed, i), r);
                Counts counts = run_shots(circuit, noise, config.shots, seed);
                raw.add(observe(config, Distribution::from_counts(counts), nullptr), 1.0);
                if (config.mitigation) {
                    PostselectionReport report = postselect(counts, target_sz);
                    if (report.empty()) {
                        mitigated.undefined = true;
                        mitigated.retained += 0.0;
                        ++mitigated.count;
                    } else {
                        mitigated.add(observe(config, Distribution::from_counts(report.kept), nullptr),
                                      report.retained_fraction);
                    }
                }
            }
        }
        auto &out = rows[i];
        std::vector<std::string> shot_names;
        for (const auto &name : names) {
            if (name != "S_vN") {
                shot_names.push_back(name);
            }
        }
        if (has_source(config, Source::Exact)) {
            ed.emit(out, t, "ed", false, names);
        }
        if (has_source(config, Source::Trotter)) {
            trotter.emit(out, t, "trotter", false, names);
        }
        if (has_source(config, Source::Shots)) {
            raw.emit(out, t, "shots_raw", false, shot_names);
            if (config.mitigation) {
                mitigated.emit(out, t, "shots_mitigated", true, shot_names);
            }
        }
    });

    RunResult result;
    for (auto &block : rows) {
        result.records.insert(result.records.end(), block.begin(), block.end());
    }
    result.metadata = base_metadata(config, "run", noise);
    json sources = json::array();
    for (Source s : config.sources) {
        sources.push_back(source_name(s));
    }
    result.metadata["sources"] = sources;
    result.metadata["observables"] = config.observables;
    return result;
}

RunResult run_ghz_mermin(const ExperimentConfig &config, int threads) {
    config.validate();
    const std::optional<NoiseSetup> noise = make_noise(config, 3);
    const std::array<std::string, 4> axes{"XXX", "XYY", "YXY", "YYX"};
    std::vector<Circuit> circuits;
    for (const auto &a : axes) {
        circuits.push_back(mermin_circuit(a));
    }

    std::vector<Distribution> exact, shots, noisy;
    std::vector<Counts> shot_counts(4, Counts(3)), noisy_counts_(4, Counts(3));
    parallel_for(4, threads, [&](std::size_t a) {
        StateVector state = apply_circuit(StateVector(3), circuits[a]);
        shot_counts[a] = sample_counts(state, config.shots, derive_seed(config.seed, a));
        if (noise) {
            noisy_counts_[a] = noisy_counts(circuits[a], noise->layout, noise->model, config.shots,
                                            derive_seed(config.seed, a));
        }
    });
    for (std::size_t a = 0; a < 4; ++a) {
        exact.push_back(Distribution::from_state(apply_circuit(StateVector(3), circuits[a])));
        shots.push_back(Distribution::from_counts(shot_counts[a]));
        if (noise) {
            noisy.push_back(Distribution::from_counts(noisy_counts_[a]));
        }
    }

    RunResult result;
    auto add = [&](const std::vector<Distribution> &d, const std::string &source) {
        Estimate m = mermin(d[0], d[1], d[2], d[3]);
        result.records.push_back({0.0, "M_GHZ", m.value, m.std_error, std::nullopt, source});
        result.records.push_back({0.0, "quantum", m.value > 2.0 ? 1.0 : 0.0, 0.0, std::nullopt, source});
    };
    add(exact, "exact");
    add(shots, "shots");
    if (noise) {
        add(noisy, "noisy");
    }
    result.metadata = base_metadata(config, "ghz-mermin", noise);
    result.metadata["classical_bound"] = 2.0;
    return result;
}

RunResult run_echo(const ExperimentConfig &config, int threads) {
    config.validate();
    const int n = config.model.n_sites;
    const std::vector<ModelParams> models = realizations(config);
    const ModelParams &params = models.front();
    const std::vector<TrotterPlan> grid = time_grid(config.scheme, config.dt, config.max_steps, config.substeps);
    const std::optional<NoiseSetup> noise = make_noise(config, n);
    const SynthOptions options{config.two_cnot};
    const int target_sz = config.initial_state.total_sz();
    const std::string shot_source = noise ? "noisy" : "shots";

    std::vector<std::vector<ObservableRecord>> rows(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        const TrotterPlan &plan = grid[i];
        const double t = plan.time();
        const std::uint64_t seed = derive_seed(config.seed, i);
        auto &out = rows[i];
        Estimate exact = loschmidt_echo(params, plan, config.initial_state, std::nullopt, 0, seed);
        out.push_back({t, "echo", exact.value, exact.std_error, std::nullopt, "exact"});
        Estimate sampled = loschmidt_echo(params, plan, config.initial_state, noise, config.shots, seed);
        out.push_back({t, "echo", sampled.value, sampled.std_error, std::nullopt, shot_source});
        const Circuit forward = quench_circuit(params, plan, config.initial_state, options);
        Counts counts = run_shots(forward, noise, config.shots, derive_seed(seed, 1));
        Estimate fraction = physical_fraction(counts, target_sz);
        out.push_back({t, "physical_fraction", fraction.value, fraction.std_error, std::nullopt, shot_source});
    });

    RunResult result;
    for (auto &block : rows) {
        result.records.insert(result.records.end(), block.begin(), block.end());
    }
    result.metadata = base_metadata(config, "echo", noise);
    result.metadata["echo"] = "probability of the initial bitstring after the evolution circuit and its inverse";
    return result;
}

std::string format_double(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

std::string format_csv(const std::vector<ObservableRecord> &records) {
    std::string out = "t,name,value,stderr,retained_fraction,source\n";
    for (const auto &r : records) {
        out += format_double(r.time);
        out += ',';
        out += r.name;
        out += ',';
        out += r.value ? format_double(*r.value) : "undefined";
        out += ',';
        out += r.value ? format_double(r.std_error) : "undefined";
        out += ',';
        out += r.retained_fraction ? format_double(*r.retained_fraction) : "";
        out += ',';
        out += r.source;
        out += '\n';
    }
    return out;
}

}  // namespace quenchsim
