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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quenchsim/device_select.h"
#include "quenchsim/errors.h"
#include "quenchsim/experiment.h"
#include "quenchsim/mitigation.h"
#include "quenchsim/sim.h"
#include "quenchsim/synth.h"

namespace py = pybind11;
namespace qs = quenchsim;

namespace {

py::array_t<std::complex<double>> to_numpy(const qs::StateVector &state) {
    auto amps = state.amplitudes();
    py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(amps.size()));
    std::copy(amps.begin(), amps.end(), out.mutable_data());
    return out;
}

qs::StateVector from_numpy(py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> amps) {
    std::vector<qs::Complex> data(amps.data(), amps.data() + amps.size());
    return qs::StateVector::from_amplitudes(std::move(data));
}

qs::InitialState initial_state(const std::string &kind, int n_sites) {
    if (kind == "domain_wall") {
        return qs::make_initial_state(qs::InitialKind::DomainWall, n_sites);
    }
    if (kind == "neel") {
        return qs::make_initial_state(qs::InitialKind::Neel, n_sites);
    }
    return qs::initial_state_from_bitstring(kind);
}

qs::TrotterPlan plan(const std::string &scheme, double dt, int n_steps, std::optional<double> sub_dt) {
    qs::TrotterPlan p{qs::parse_scheme(scheme), dt, n_steps, sub_dt.value_or(dt), 1};
    p.validate();
    return p;
}


}  // namespace

PYBIND11_MODULE(_quenchsim, m) {
    m.doc() = "Spin-chain quench simulation on emulated digital quantum hardware";

    py::register_exception<qs::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<qs::InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
    py::register_exception<qs::EmptyCountsError>(m, "EmptyCountsError", PyExc_ValueError);

    py::class_<qs::ModelParams>(m, "ModelParams")
        .def(py::init([](int n_sites, double J, double U, std::vector<double> fields) {
                 if (fields.empty()) {
                     fields.assign(static_cast<std::size_t>(n_sites), 0.0);
                 }
                 qs::ModelParams p{n_sites, J, U, std::move(fields)};
                 p.validate();
                 return p;
             }),
             py::arg("n_sites"), py::arg("J") = 1.0, py::arg("U") = 0.0, py::arg("fields") = std::vector<double>{})
        .def_readonly("n_sites", &qs::ModelParams::n_sites)
        .def_readonly("J", &qs::ModelParams::hopping)
        .def_readonly("U", &qs::ModelParams::interaction)
        .def_readonly("fields", &qs::ModelParams::fields)
        .def("hamiltonian", &qs::hamiltonian_matrix);

    m.def(
        "build_case",
        [](const std::string &c, int n, double J, double U, double h, std::uint64_t seed) {
            return qs::build_case(qs::parse_model_case(c), n, J, U, h, seed);
        },
        py::arg("case"), py::arg("n_sites"), py::arg("J") = 1.0, py::arg("U") = 0.0, py::arg("h") = 0.0,
        py::arg("seed") = 0, "Model case \"I\"..\"IV\".");

    py::class_<qs::Gate>(m, "Gate")
        .def_property_readonly("name", [](const qs::Gate &g) { return std::string(qs::gate_name(g.kind)); })
        .def_property_readonly("qubits",
                               [](const qs::Gate &g) {
                                   return g.is_two_qubit() ? std::vector<int>{g.qubits[0], g.qubits[1]}
                                                           : std::vector<int>{g.qubits[0]};
                               })
        .def_property_readonly("angles", [](const qs::Gate &g) {
            return std::vector<double>(g.angles.begin(), g.angles.begin() + qs::angle_count(g.kind));
        });

    py::class_<qs::Circuit>(m, "Circuit")
        .def_property_readonly("n_qubits", &qs::Circuit::n_qubits)
        .def_property_readonly("gates", &qs::Circuit::gates)
        .def("__len__", &qs::Circuit::size)
        .def("cnot_count", &qs::Circuit::cnot_count)
        .def("unitary", &qs::unitary_of)
        .def("inverse", &qs::inverse)
        .def("serialize", &qs::serialize_circuit)
        .def_static("parse", &qs::parse_circuit);

    m.def(
        "synth_general", [](double a, double b, double g) { return qs::synth_general({a, b, g}); }, py::arg("alpha"),
        py::arg("beta"), py::arg("gamma"), "Three-CNOT circuit for exp(i(a XX + b YY + g ZZ)).");
    m.def("synth_xz", &qs::synth_xz, py::arg("alpha"), py::arg("gamma"));
    m.def(
        "synth_block",
        [](double J, double U, double dt, bool two_cnot) { return qs::synth_block(J, U, dt, {two_cnot}); },
        py::arg("J"), py::arg("U"), py::arg("dt"), py::arg("two_cnot") = true);

    m.def(
        "evolution_circuit",
        [](const qs::ModelParams &params, const std::string &scheme, double dt, int n_steps,
           std::optional<double> sub_dt) { return qs::evolution_circuit(params, plan(scheme, dt, n_steps, sub_dt)); },
        py::arg("params"), py::arg("scheme") = "symmetric", py::arg("dt") = 0.25, py::arg("n_steps") = 0,
        py::arg("sub_dt") = py::none(), "Evolution to t = n_steps * dt + sub_dt (sub_dt defaults to dt).");
    m.def(
        "quench_circuit",
        [](const qs::ModelParams &params, const std::string &init, const std::string &scheme, double dt, int n_steps,
           std::optional<double> sub_dt) {
            return qs::quench_circuit(params, plan(scheme, dt, n_steps, sub_dt), initial_state(init, params.n_sites));
        },
        py::arg("params"), py::arg("initial_state") = "domain_wall", py::arg("scheme") = "symmetric",
        py::arg("dt") = 0.25, py::arg("n_steps") = 0, py::arg("sub_dt") = py::none());

    m.def(
        "initial_state",
        [](const std::string &kind, int n_sites) {
            return to_numpy(qs::initial_statevector(initial_state(kind, n_sites), n_sites));
        },
        py::arg("kind"), py::arg("n_sites"));
    m.def(
        "run_circuit",
        [](const qs::Circuit &c, std::optional<py::array_t<std::complex<double>>> state) {
            qs::StateVector psi = state ? from_numpy(*state) : qs::StateVector(c.n_qubits());
            return to_numpy(qs::apply_circuit(std::move(psi), c));
        },
        py::arg("circuit"), py::arg("state") = py::none(), "State vector after the circuit (default input |0...0>).");
    m.def(
        "exact_evolve",
        [](const qs::ModelParams &params, py::array_t<std::complex<double>> state, double t) {
            return to_numpy(qs::exact_evolve(params, from_numpy(state), t));
        },
        py::arg("params"), py::arg("state"), py::arg("t"));
    m.def(
        "entanglement_entropy",
        [](py::array_t<std::complex<double>> state, int cut) {
            return qs::entanglement_entropy(from_numpy(state), cut);
        },
        py::arg("state"), py::arg("cut"));

    py::class_<qs::Counts>(m, "Counts")
        .def_property_readonly("n_qubits", &qs::Counts::n_qubits)
        .def_property_readonly("shots", &qs::Counts::shots)
        .def("to_dict",
             [](const qs::Counts &c) {
                 std::map<std::string, std::uint64_t> out;
                 for (auto [o, n] : c.table()) {
                     out[qs::to_bitstring(o, c.n_qubits())] = n;
                 }
                 return out;
             })
        .def("serialize", &qs::Counts::serialize)
        .def_static("parse", &qs::Counts::parse);

    m.def(
        "sample_counts",
        [](py::array_t<std::complex<double>> state, std::uint64_t shots, std::uint64_t seed, int threads) {
            return qs::sample_counts(from_numpy(state), shots, seed, threads);
        },
        py::arg("state"), py::arg("shots"), py::arg("seed") = 0, py::arg("threads") = 1);

    py::class_<qs::Estimate>(m, "Estimate")
        .def_readonly("value", &qs::Estimate::value)
        .def_readonly("stderr", &qs::Estimate::std_error)
        .def("__repr__", [](const qs::Estimate &e) {
            return "Estimate(" + qs::format_double(e.value) + " +- " + qs::format_double(e.std_error) + ")";
        });

    m.def(
        "magnetization", [](const qs::Counts &c, int site) { return qs::magnetization(c, site); }, py::arg("counts"),
        py::arg("site"));
    m.def(
        "n_half", [](const qs::Counts &c) { return qs::n_half(c); }, py::arg("counts"));
    m.def(
        "connected_correlator", [](const qs::Counts &c, int j, int k) { return qs::connected_correlator(c, j, k); },
        py::arg("counts"), py::arg("j"), py::arg("k"));
    m.def(
        "qfi",
        [](const qs::Counts &c, std::optional<std::vector<int>> signs) {
            std::vector<int> s = signs ? *signs : qs::half_chain_signs(c.n_qubits());
            return qs::qfi(c, s);
        },
        py::arg("counts"), py::arg("signs") = py::none());
    m.def(
        "physical_fraction", [](const qs::Counts &c, int sz) { return qs::physical_fraction(c, sz); },
        py::arg("counts"), py::arg("target_sz"));
    m.def(
        "postselect",
        [](const qs::Counts &c, int sz) {
            auto report = qs::postselect(c, sz);
            return py::make_tuple(report.kept, report.retained_fraction);
        },
        py::arg("counts"), py::arg("target_sz"), "Returns (kept counts, retained fraction).");
    m.attr("ENTROPY_QFI_SCALE") = qs::kEntropyQfiScale;

    py::class_<qs::Calibration>(m, "Calibration")
        .def_property_readonly("n_qubits", [](const qs::Calibration &c) { return c.qubits.size(); })
        .def_property_readonly("n_edges", [](const qs::Calibration &c) { return c.edges.size(); })
        .def("format", &qs::format_calibration);
    m.def("load_calibration", &qs::load_calibration, py::arg("text"));
    m.def("uniform_chain_calibration", &qs::uniform_chain_calibration, py::arg("n_qubits"), py::arg("readout_error"),
          py::arg("cnot_error"), py::arg("t2_us"), py::arg("t1_us") = 100.0);
    m.def(
        "noisy_counts",
        [](const qs::Circuit &c, const std::vector<int> &layout, const qs::Calibration &cal, std::uint64_t shots,
           std::uint64_t seed, bool cnot, bool readout, bool dephasing, int threads) {
            qs::NoiseModel model{cal, {cnot, readout, dephasing}};
            return qs::noisy_counts(c, layout, model, shots, seed, threads);
        },
        py::arg("circuit"), py::arg("layout"), py::arg("calibration"), py::arg("shots"), py::arg("seed") = 0,
        py::arg("cnot_depolarizing") = true, py::arg("readout") = true, py::arg("dephasing") = true,
        py::arg("threads") = 1);

    m.def(
        "best_chain",
        [](const qs::Calibration &cal, int n, double meas, double t2) {
            return qs::best_chain(cal, {n, meas, t2, 1.25}).chain;
        },
        py::arg("calibration"), py::arg("chain_length") = 6, py::arg("meas_threshold") = 0.05,
        py::arg("t2_threshold") = 50.0);
    m.def(
        "brute_force_chain",
        [](const qs::Calibration &cal, int n, double meas, double t2) {
            return qs::brute_force_chain(cal, {n, meas, t2, 1.25}).chain;
        },
        py::arg("calibration"), py::arg("chain_length") = 6, py::arg("meas_threshold") = 0.05,
        py::arg("t2_threshold") = 50.0);

    auto runner = [](qs::RunResult (*run)(const qs::ExperimentConfig &, int)) {
        return [run](const std::string &config_json, const std::string &base_dir, int threads) {
            auto config = qs::parse_experiment_config(nlohmann::json::parse(config_json), base_dir);
            qs::RunResult result = run(config, threads);
            return py::make_tuple(qs::format_csv(result.records), result.metadata.dump());
        };
    };
    m.def("run_quench", runner(&qs::run_quench), py::arg("config_json"), py::arg("base_dir") = "",
          py::arg("threads") = 1, "Returns (csv text, metadata json text).");
    m.def("run_ghz_mermin", runner(&qs::run_ghz_mermin), py::arg("config_json"), py::arg("base_dir") = "",
          py::arg("threads") = 1);
    m.def("run_echo", runner(&qs::run_echo), py::arg("config_json"), py::arg("base_dir") = "",
          py::arg("threads") = 1);
}
