// Copyright 2026 The qkdsim Authors
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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qkdsim/errors.hpp"
#include "qkdsim/harness.hpp"
#include "qkdsim/information.hpp"
#include "qkdsim/mor.hpp"
#include "qkdsim/protocol.hpp"
#include "qkdsim/quantum.hpp"
#include "qkdsim/round.hpp"

namespace py = pybind11;
using namespace qkdsim;

namespace {

// Reports cross the boundary as JSON text; the package decodes them.
std::string simulate_json(std::uint64_t rounds, std::uint64_t seed, const std::string &attack, const std::string &ensemble,
                          std::optional<double> alpha, std::optional<double> beta, unsigned threads) {
  SimulationConfig c;
  c.rounds = rounds;
  c.seed = seed;
  c.attack_name = attack;
  c.threads = threads;
  if (ensemble == "nonmax") {
    if (!alpha || !beta) throw InvalidInput("the nonmax ensemble needs both alpha and beta");
    c.ensemble = {EnsembleKind::NonMax, *alpha, *beta};
  } else if (ensemble != "cabello") {
    throw InvalidInput("unknown ensemble '" + ensemble + "' (expected cabello or nonmax)");
  } else if (alpha || beta) {
    throw InvalidInput("alpha and beta only apply to the nonmax ensemble");
  }
  return render_json(to_json(simulate(c), false));
}

py::dict mor_report_dict(const MorReport &r) {
  py::dict w;
  w["tr_rho1_product"] = r.witnesses.tr_rho1_product;
  w["rho1_distance"] = r.witnesses.rho1_distance;
  w["tr_rho2_product"] = r.witnesses.tr_rho2_product;
  py::dict d;
  d["rho1_orthogonal"] = r.rho1_orthogonal;
  d["rho1_identical"] = r.rho1_identical;
  d["rho2_orthogonal"] = r.rho2_orthogonal;
  d["criterion_satisfied"] = r.criterion_satisfied;
  d["witnesses"] = w;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orthogonal-state QKD simulator core.";

  py::register_exception<PhaseViolation>(m, "PhaseViolation", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::enum_<QubitId>(m, "QubitId")
      .value("Qubit1", QubitId::Qubit1)
      .value("Qubit2", QubitId::Qubit2)
      .value("EveAncilla", QubitId::EveAncilla)
      .value("Aux", QubitId::Aux);

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<std::vector<QubitId>, std::vector<Amplitude>>(), py::arg("qubit_order"), py::arg("amplitudes"))
      .def_static("basis", &StateVector::basis, py::arg("qubit_order"), py::arg("index"))
      .def_property_readonly("qubit_order", &StateVector::qubit_order)
      .def_property_readonly("amplitudes",
                             [](const StateVector &s) {
                               const auto a = s.amplitudes();
                               return std::vector<Amplitude>(a.begin(), a.end());
                             })
      .def("__len__", &StateVector::dim)
      .def("__getitem__", [](const StateVector &s, std::size_t i) {
        if (i >= s.dim()) throw py::index_error();
        return s[i];
      })
      .def("__repr__", [](const StateVector &s) { return to_ket_string(s); });

  py::class_<StateEnsemble>(m, "StateEnsemble")
      .def_static("cabello", &StateEnsemble::cabello)
      .def_static("nonmax", &StateEnsemble::nonmax, py::arg("alpha"), py::arg("beta"))
      .def_property_readonly("name", [](const StateEnsemble &e) { return std::string(e.name()); })
      .def_property_readonly("states", &StateEnsemble::states)
      .def_property_readonly("bits_per_symbol", &StateEnsemble::bits_per_symbol)
      .def("__len__", &StateEnsemble::size);

  m.def("encode", [](const StateEnsemble &e, int symbol) { return encode(e, KeySymbol(symbol)); }, py::arg("ensemble"),
        py::arg("symbol"));
  m.def("inner_product", &inner_product);
  m.def("tensor_product", &tensor_product);
  m.def("apply_cnot", &apply_cnot, py::arg("state"), py::arg("control"), py::arg("target"));
  m.def("measure_qubit", [](const StateVector &s, QubitId q, std::uint64_t seed) {
    SeededStream rng(seed);
    const auto out = measure_qubit(s, q, rng);
    return py::make_tuple(out.result, out.probability, out.post_state);
  }, py::arg("state"), py::arg("qubit"), py::arg("seed"));
  m.def("reduced_density",
        [](const StateVector &s, const std::vector<QubitId> &keep) { return reduced_density(s, keep).entries(); },
        py::arg("state"), py::arg("keep"));
  m.def("efficiency", &efficiency, py::arg("secret_bits"), py::arg("qubits"), py::arg("classical_bits"));

  m.def("make_nonmax_pair", [](double a, double b) {
    auto [psi, phi] = make_nonmax_pair(a, b);
    return py::make_tuple(psi, phi);
  }, py::arg("alpha"), py::arg("beta"));
  m.def("mor_check", [](const StateVector &a, const StateVector &b) { return mor_report_dict(mor_check(a, b)); });

  m.def("eve_mutual_information", [](const StateEnsemble &e, const std::string &attack) {
    return eve_mutual_information(e, *make_attack(attack));
  }, py::arg("ensemble"), py::arg("attack"));
  m.def("attack_names", [] {
    std::vector<std::string> out;
    for (auto n : attack_names()) out.emplace_back(n);
    return out;
  });

  m.def("_simulate_json", &simulate_json, py::arg("rounds"), py::arg("seed"), py::arg("attack"), py::arg("ensemble"),
        py::arg("alpha"), py::arg("beta"), py::arg("threads"), py::call_guard<py::gil_scoped_release>());
  m.def("_mor_check_json", [](double a, double b) { return render_json(to_json(mor_check_cmd(a, b))); });
  m.def("_attack_demo_json", [](int symbol, const std::string &attack, std::uint64_t seed) {
    return render_json(to_json(attack_demo(KeySymbol(symbol), attack, seed)));
  });
}
