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

#include "lusym/serialize.h"

#include <openssl/evp.h>

#include <cstdio>

#include "lusym/errors.h"

namespace lusym {

namespace {

[[noreturn]] void field_error(std::string_view field, const std::string &what) {
    throw InputError("field '" + std::string(field) + "': " + what);
}

Json parse_json_text(std::string_view text, std::string_view what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        size_t line = 1;
        size_t col = 1;
        for (size_t k = 0; k < e.byte && k < text.size(); k++) {
            if (text[k] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
        throw InputError("malformed " + std::string(what) + " JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what());
    }
}

size_t qubit_count_from_json(const Json &j) {
    if (!j.is_object()) {
        throw InputError("expected a JSON object at top level");
    }
    if (!j.contains("n")) {
        field_error("n", "missing");
    }
    const Json &n = j.at("n");
    if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > long(kMaxQubits)) {
        field_error("n", "expected an integer in 1.." + std::to_string(kMaxQubits));
    }
    return n.get<size_t>();
}

}  // namespace

Json integer_to_json(const Integer &x) {
    if (x.fits_slong_p()) {
        return x.get_si();
    }
    return x.get_str();
}

Integer integer_from_json(const Json &j, std::string_view field) {
    if (j.is_number_integer()) {
        return Integer(j.get<long>());
    }
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0) {
            field_error(field, "not a decimal integer");
        }
        return x;
    }
    field_error(field, "expected an integer");
}

Json angle_to_json(const Angle &a) { return {{"num", integer_to_json(a.num())}, {"den", integer_to_json(a.den())}}; }

Angle angle_from_json(const Json &j, std::string_view field) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        field_error(field, "expected {\"num\": int, \"den\": int}");
    }
    Integer num = integer_from_json(j.at("num"), std::string(field) + ".num");
    Integer den = integer_from_json(j.at("den"), std::string(field) + ".den");
    if (den <= 0) {
        field_error(field, "denominator must be positive");
    }
    Rational r(num, den);
    r.canonicalize();
    return Angle(r);
}

Json phase_vector_to_json(const PhaseVector &g) {
    Json phis = Json::array();
    for (const auto &a : g.phis) {
        phis.push_back(angle_to_json(a));
    }
    return {{"phis", phis}, {"theta", angle_to_json(g.theta)}};
}

PhaseVector phase_vector_from_json(const Json &j, size_t n, std::string_view field) {
    std::string f(field);
    if (!j.is_object() || !j.contains("phis") || !j.contains("theta") || !j.at("phis").is_array()) {
        field_error(f, "expected {\"phis\": [...], \"theta\": {...}}");
    }
    if (j.at("phis").size() != n) {
        field_error(f + ".phis", "expected " + std::to_string(n) + " angles");
    }
    PhaseVector g;
    for (size_t k = 0; k < n; k++) {
        g.phis.push_back(angle_from_json(j.at("phis")[k], f + ".phis[" + std::to_string(k) + "]"));
    }
    g.theta = angle_from_json(j.at("theta"), f + ".theta");
    return g;
}

Json state_to_json(const PureState &psi) {
    Json amps = Json::object();
    for (const auto &[bits, c] : psi.amplitudes()) {
        amps[label_string(psi.num_qubits(), bits)] = Json::array({c.real(), c.imag()});
    }
    return {{"n", psi.num_qubits()}, {"amplitudes", amps}};
}

PureState state_from_json(const Json &j) {
    size_t n = qubit_count_from_json(j);
    if (!j.contains("amplitudes") || !j.at("amplitudes").is_object()) {
        field_error("amplitudes", "expected an object mapping bit strings to [real, imag]");
    }
    std::vector<std::pair<std::string, PureState::Amplitude>> terms;
    for (const auto &[key, value] : j.at("amplitudes").items()) {
        std::string field = "amplitudes." + key;
        if (key.size() != n) {
            field_error(field, "label length " + std::to_string(key.size()) + " does not match n = " +
                                   std::to_string(n));
        }
        if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
            field_error(field, "expected [real, imag]");
        }
        terms.emplace_back(key, PureState::Amplitude(value[0].get<double>(), value[1].get<double>()));
    }
    return PureState::from_labels(n, terms);
}

PureState parse_state(std::string_view text) { return state_from_json(parse_json_text(text, "state")); }

std::string serialize_state(const PureState &psi) { return dump(state_to_json(psi)); }

Json group_to_json(const DiagonalSymmetryGroup &g) {
    Json torus = Json::array();
    for (const auto &v : g.torus_basis) {
        Json row = Json::array();
        for (const auto &x : v) {
            row.push_back(integer_to_json(x));
        }
        torus.push_back(row);
    }
    Json finite = Json::array();
    for (const auto &f : g.finite) {
        finite.push_back({{"order", integer_to_json(f.order)}, {"generator", phase_vector_to_json(f.generator)}});
    }
    return {{"n", g.n},
            {"torus_basis", torus},
            {"torus_rank", g.torus_rank()},
            {"theta_continuous", g.theta_continuous()},
            {"finite", finite}};
}

DiagonalSymmetryGroup group_from_json(const Json &j) {
    DiagonalSymmetryGroup g;
    g.n = qubit_count_from_json(j);
    if (j.contains("torus_basis")) {
        const Json &tb = j.at("torus_basis");
        if (!tb.is_array()) {
            field_error("torus_basis", "expected an array of integer vectors");
        }
        for (size_t r = 0; r < tb.size(); r++) {
            std::string field = "torus_basis[" + std::to_string(r) + "]";
            if (!tb[r].is_array() || tb[r].size() != g.n + 1) {
                field_error(field, "expected " + std::to_string(g.n + 1) + " integers");
            }
            IntVector v;
            for (const auto &x : tb[r]) {
                v.push_back(integer_from_json(x, field));
            }
            g.torus_basis.push_back(std::move(v));
        }
    }
    if (j.contains("finite")) {
        const Json &fin = j.at("finite");
        if (!fin.is_array()) {
            field_error("finite", "expected an array");
        }
        for (size_t k = 0; k < fin.size(); k++) {
            std::string field = "finite[" + std::to_string(k) + "]";
            if (!fin[k].is_object() || !fin[k].contains("order") || !fin[k].contains("generator")) {
                field_error(field, "expected {\"order\", \"generator\"}");
            }
            Integer order = integer_from_json(fin[k].at("order"), field + ".order");
            if (order < 1) {
                field_error(field + ".order", "must be positive");
            }
            g.finite.push_back({order, phase_vector_from_json(fin[k].at("generator"), g.n, field + ".generator")});
        }
    }
    return g;
}

DiagonalSymmetryGroup parse_group(std::string_view text) { return group_from_json(parse_json_text(text, "group")); }

Json support_to_json(const Support &s) {
    Json out = Json::array();
    for (uint64_t label : s.labels()) {
        out.push_back(label_string(s.num_qubits(), label));
    }
    return out;
}

Json monomial_to_json(const InvariantMonomial &m) {
    Json terms = Json::array();
    for (const auto &t : m.terms()) {
        terms.push_back({{"label", label_string(m.num_qubits(), t.label)},
                         {"plain", t.plain_exponent},
                         {"conjugate", t.conjugate_exponent}});
    }
    return {{"expression", m.str()},
            {"terms", terms},
            {"bidegree", Json::array({m.bidegree().a, m.bidegree().b})},
            {"sl_type", is_sl_type(m)}};
}

Json circuit_to_json(const BalancedCircuit &c) {
    Json members = Json::array();
    Json relation = Json::array();
    for (size_t j = 0; j < c.size(); j++) {
        members.push_back(label_string(c.n, c.member_labels[j]));
        relation.push_back(integer_to_json(c.relation[j]));
    }
    return {{"members", members},
            {"relation", relation},
            {"positive", c.positive},
            {"d_order", integer_to_json(c.d_order)},
            {"theta_continuous", c.d_order == 0},
            {"hull", std::string(to_string(polytope_classification(c)))}};
}

Json catalog_to_json(const CircuitCatalog &c) {
    Json circuits = Json::array();
    for (const auto &circuit : c.circuits) {
        circuits.push_back(circuit_to_json(circuit));
    }
    return {{"n", c.support.num_qubits()},
            {"support", support_to_json(c.support)},
            {"circuits", circuits},
            {"semistable", c.semistable}};
}

Json profile_to_json(const QubitActionProfile &p, size_t n) {
    Json trivial = Json::array();
    Json witness = Json::array();
    for (size_t k = 0; k < p.trivial.size(); k++) {
        trivial.push_back(bool(p.trivial[k]));
        if (p.witness[k]) {
            witness.push_back(
                Json::array({label_string(n, p.witness[k]->first), label_string(n, p.witness[k]->second)}));
        } else {
            witness.push_back(nullptr);
        }
    }
    return {{"trivial", trivial}, {"witness", witness}};
}

Json flip_group_to_json(const FlipGroup &g) {
    Json gens = Json::array();
    for (uint64_t m : g.generators) {
        gens.push_back(label_string(g.n, m));
    }
    Json out = {{"generators", gens}, {"order_log2", g.order_log2()}};
    if (g.elements) {
        Json elems = Json::array();
        for (uint64_t m : *g.elements) {
            elems.push_back(label_string(g.n, m));
        }
        out["elements"] = elems;
    } else {
        out["elements"] = nullptr;
    }
    return out;
}

Json normalizer_to_json(const NormalizerDescription &d) {
    return {{"torus", group_to_json(d.torus)},
            {"flips", flip_group_to_json(d.flips)},
            {"qubit_profile", profile_to_json(d.qubit_profile, d.torus.n)},
            {"assumption_ok", d.assumption_ok},
            {"advisory", !d.assumption_ok}};
}

Json verification_to_json(const SymmetryVerification &v) {
    return {{"max_deviation", v.max_deviation},
            {"finite_max_deviation", v.finite_max_deviation},
            {"elements_checked", v.elements_checked},
            {"samples", v.samples},
            {"seed", v.seed},
            {"tolerance", v.tolerance},
            {"passed", v.passed}};
}

Json single_generator_to_json(const SingleGeneratorReport &r) {
    Json bd = nullptr;
    if (r.generator_bidegree) {
        bd = Json::array({r.generator_bidegree->a, r.generator_bidegree->b});
    }
    return {{"circuit_count", r.circuit_count},
            {"hypothesis_holds", r.hypothesis_holds},
            {"generator_bidegree", bd},
            {"detail", r.detail}};
}

Json complex_to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw InvariantViolation("SHA-256 digest failed");
    }
    std::string hex;
    char buf[3];
    for (unsigned int k = 0; k < len; k++) {
        std::snprintf(buf, sizeof(buf), "%02x", digest[k]);
        hex += buf;
    }
    return hex;
}

Json provenance(std::string_view canonical_input) {
    return {{"tool", std::string(kToolName)},
            {"version", std::string(kToolVersion)},
            {"input_sha256", sha256_hex(canonical_input)}};
}

Json report_to_json(const AnalysisReport &r) {
    size_t n = r.support.num_qubits();
    Json monomials = Json::array();
    for (const auto &mv : r.monomials) {
        Json m = monomial_to_json(mv.monomial);
        m["circuit"] = circuit_to_json(mv.circuit);
        m["value"] = complex_to_json(mv.value);
        monomials.push_back(m);
    }
    Json symmetrized = Json::array();
    for (const auto &sv : r.symmetrized) {
        Json s = {{"seed_monomial", sv.seed_monomial.str()}, {"admitted", sv.admitted}};
        if (sv.admitted) {
            Json terms = Json::array();
            for (const auto &m : sv.sum.monomials) {
                terms.push_back(m.str());
            }
            s["monomials"] = terms;
            s["value"] = complex_to_json(sv.value);
            s["rejection"] = nullptr;
        } else {
            s["monomials"] = Json::array();
            s["value"] = nullptr;
            s["rejection"] = sv.rejection;
        }
        symmetrized.push_back(s);
    }
    Json abs_squares = Json::array();
    for (const auto &m : r.abs_squares) {
        Json mj = monomial_to_json(m);
        mj["value"] = complex_to_json(evaluate(m, r.state));
        abs_squares.push_back(mj);
    }
    return {{"provenance", provenance(serialize_state(r.state))},
            {"n", n},
            {"state", state_to_json(r.state)},
            {"support", support_to_json(r.support)},
            {"group", group_to_json(r.group)},
            {"qubit_profile", profile_to_json(r.qubit_profile, n)},
            {"catalog", catalog_to_json(r.catalog)},
            {"monomials", monomials},
            {"symmetrized", symmetrized},
            {"abs_square_generators", abs_squares},
            {"normalizer", normalizer_to_json(r.normalizer)},
            {"defects", r.defects},
            {"single_sl_generator", single_generator_to_json(r.single_generator)},
            {"verification", verification_to_json(r.verification)},
            {"semistable", r.semistable},
            {"generic", r.generic},
            {"theta_continuous", r.theta_continuous},
            {"notes", r.notes}};
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

}  // namespace lusym
