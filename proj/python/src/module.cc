// Copyright 2026 The lusym Authors.
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

// Python bindings. Structured results cross the boundary as JSON text and are
// decoded with the json module, so Python sees the same contract as the CLI.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lusym/analysis.h"
#include "lusym/errors.h"
#include "lusym/fixtures.h"
#include "lusym/serialize.h"

namespace py = pybind11;
using namespace lusym;

namespace {

py::object to_python(const Json &j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

PureState state_from_python(const py::dict &amplitudes) {
    std::vector<std::pair<std::string, PureState::Amplitude>> terms;
    size_t n = 0;
    for (const auto &[key, value] : amplitudes) {
        auto label = key.cast<std::string>();
        n = label.size();
        terms.emplace_back(label, value.cast<std::complex<double>>());
    }
    if (terms.empty()) {
        throw InputError("state has no amplitudes");
    }
    return PureState::from_labels(n, terms);
}

Support support_from_python(const py::object &support) {
    if (py::isinstance<py::str>(support)) {
        return Support::parse(support.cast<std::string>());
    }
    std::string joined;
    for (const auto &label : support) {
        joined += (joined.empty() ? "" : ",") + label.cast<std::string>();
    }
    return Support::parse(joined);
}

IntMatrix matrix_from_python(const std::vector<std::vector<long>> &rows) {
    if (rows.empty() || rows[0].empty()) {
        throw InputError("matrix must be nonempty");
    }
    IntMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != m.cols()) {
            throw InputError("ragged matrix rows");
        }
        for (size_t j = 0; j < m.cols(); j++) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

py::list matrix_to_python(const IntMatrix &m) {
    py::list rows;
    for (size_t i = 0; i < m.rows(); i++) {
        py::list row;
        for (size_t j = 0; j < m.cols(); j++) {
            row.append(py::int_(py::str(m(i, j).get_str())));
        }
        rows.append(row);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Locally diagonal symmetry groups and entanglement invariants of sparse qubit states.";
    m.attr("__version__") = std::string(kToolVersion);

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    m.def(
        "analyze",
        [](const py::dict &amplitudes, double tolerance, uint64_t seed, size_t samples) {
            return to_python(report_to_json(analyze(state_from_python(amplitudes), {tolerance, seed, samples})));
        },
        py::arg("amplitudes"), py::arg("tolerance") = kDefaultTolerance, py::arg("seed") = kDefaultSeed,
        py::arg("samples") = 16,
        "Full analysis of a state given as {bit string: complex amplitude}. Returns the report as a dict.");

    m.def(
        "analyze_json", [](const std::string &state_json) { return dump(report_to_json(analyze(parse_state(state_json)))); },
        py::arg("state_json"), "Analysis report for a state in the JSON state format, as JSON text.");

    m.def(
        "circuits", [](const py::object &support) { return to_python(catalog_to_json(enumerate_circuits(support_from_python(support)))); },
        py::arg("support"), "Balanced circuits of a support given as 'a,b,c' or a list of bit strings.");

    m.def(
        "symmetry_group",
        [](const py::object &support) { return to_python(group_to_json(solve_symmetry_group(support_from_python(support)))); },
        py::arg("support"), "Diagonal symmetry group of a support.");

    m.def(
        "normalizer",
        [](const py::object &support) { return to_python(normalizer_to_json(compute_normalizer(support_from_python(support)))); },
        py::arg("support"), "Torus and spin-flip group preserving the symmetry group.");

    m.def(
        "compare",
        [](const py::object &a, const py::object &b) {
            return std::string(to_string(compare_strata(support_from_python(a), support_from_python(b))));
        },
        py::arg("support_a"), py::arg("support_b"), "Closure order of two strata.");

    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<long>> &rows) {
            auto s = smith_normal_form(matrix_from_python(rows));
            py::dict out;
            out["U"] = matrix_to_python(s.U);
            out["V"] = matrix_to_python(s.V);
            out["D"] = matrix_to_python(s.D);
            out["rank"] = s.rank;
            return out;
        },
        py::arg("matrix"), "Smith normal form U A V = D of an integer matrix.");

    m.def(
        "evaluate_circuit_monomials",
        [](const py::dict &amplitudes) {
            PureState psi = state_from_python(amplitudes);
            std::vector<std::complex<double>> values;
            for (const auto &c : enumerate_circuits(psi.support()).circuits) {
                values.push_back(evaluate(monomial_from_circuit(c), psi));
            }
            return values;
        },
        py::arg("amplitudes"), "Values of the circuit monomials of the state's support, in circuit order.");

    m.def("fixture_names", &fixture_names);
    m.def(
        "fixture", [](const std::string &name) { return to_python(state_to_json(fixture(name))); }, py::arg("name"),
        "A named reference state in the JSON state format.");
}
