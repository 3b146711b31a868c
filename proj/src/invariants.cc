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

#include "lusym/invariants.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "lusym/errors.h"

namespace lusym {

InvariantMonomial::InvariantMonomial(size_t n, std::vector<MonomialTerm> terms) : n_(n), terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(),
              [](const MonomialTerm &x, const MonomialTerm &y) { return x.label < y.label; });
    for (size_t k = 0; k < terms_.size(); k++) {
        const auto &t = terms_[k];
        if (t.plain_exponent == 0 && t.conjugate_exponent == 0) {
            throw InputError("monomial term with both exponents zero");
        }
        if (t.label >> n) {
            throw InputError("monomial label exceeds qubit count");
        }
        if (k > 0 && terms_[k - 1].label == t.label) {
            throw InputError("monomial repeats a label");
        }
        bidegree_.a += t.plain_exponent;
        bidegree_.b += t.conjugate_exponent;
    }
}

std::string InvariantMonomial::str() const {
    std::string s;
    for (const auto &t : terms_) {
        std::string label = label_string(n_, t.label);
        auto factor = [&](const std::string &base, unsigned e) {
            if (e == 0) {
                return;
            }
            if (!s.empty()) {
                s += " ";
            }
            s += base;
            if (e > 1) {
                s += "^" + std::to_string(e);
            }
        };
        factor("c[" + label + "]", t.plain_exponent);
        factor("c*[" + label + "]", t.conjugate_exponent);
    }
    return s.empty() ? "1" : s;
}

InvariantMonomial monomial_from_circuit(const BalancedCircuit &circuit) {
    std::vector<MonomialTerm> terms;
    for (size_t j = 0; j < circuit.size(); j++) {
        const Integer &z = circuit.relation[j];
        Integer mag = abs(z);
        if (!mag.fits_uint_p()) {
            throw InputError("circuit relation entry too large for a monomial exponent");
        }
        auto e = static_cast<unsigned>(mag.get_ui());
        terms.push_back({circuit.member_labels[j], z > 0 ? e : 0u, z < 0 ? e : 0u});
    }
    return InvariantMonomial(circuit.n, std::move(terms));
}

std::vector<InvariantMonomial> abs_square_generators(const Support &support) {
    std::vector<InvariantMonomial> out;
    for (uint64_t label : support.labels()) {
        out.emplace_back(support.num_qubits(), std::vector<MonomialTerm>{{label, 1, 1}});
    }
    return out;
}

bool is_sl_type(const InvariantMonomial &m) { return m.bidegree().a == 0 || m.bidegree().b == 0; }

InvariantMonomial flip_monomial(const InvariantMonomial &m, uint64_t mask) {
    if (mask >> m.num_qubits()) {
        throw InputError("flip mask exceeds qubit count");
    }
    std::vector<MonomialTerm> terms = m.terms();
    for (auto &t : terms) {
        t.label ^= mask;
    }
    return InvariantMonomial(m.num_qubits(), std::move(terms));
}

std::variant<InvariantSum, FlipRejection> symmetrize_over_flips(const InvariantMonomial &m,
                                                                const std::vector<uint64_t> &flip_group) {
    std::set<uint64_t> group(flip_group.begin(), flip_group.end());
    if (!group.contains(0)) {
        throw InputError("flip group must contain the zero mask");
    }
    for (uint64_t x : group) {
        for (uint64_t y : group) {
            if (!group.contains(x ^ y)) {
                throw InputError("flip group is not closed under XOR");
            }
        }
    }
    Bidegree bd = m.bidegree();
    long diff = long(bd.a) - long(bd.b);
    for (uint64_t mask : group) {
        if (std::popcount(mask) % 2 == 1 && diff % 4 != 0) {
            return FlipRejection{mask, bd,
                                 "flip " + label_string(m.num_qubits(), mask) + " acts on an odd number of qubits and a-b = " +
                                     std::to_string(diff) + " is not divisible by 4"};
        }
    }
    InvariantSum sum;
    sum.flip_group.assign(group.begin(), group.end());
    for (uint64_t mask : group) {
        InvariantMonomial image = flip_monomial(m, mask);
        if (std::find(sum.monomials.begin(), sum.monomials.end(), image) == sum.monomials.end()) {
            sum.monomials.push_back(std::move(image));
        }
    }
    return sum;
}

namespace {

std::complex<double> ipow(std::complex<double> x, unsigned e) {
    std::complex<double> r = 1;
    while (e) {
        if (e & 1) {
            r *= x;
        }
        x *= x;
        e >>= 1;
    }
    return r;
}

void check_compatible(size_t n, const PureState &psi) {
    if (n != psi.num_qubits()) {
        throw InputError("invariant has " + std::to_string(n) + " qubits, state has " +
                         std::to_string(psi.num_qubits()));
    }
}

}  // namespace

std::complex<double> evaluate(const InvariantMonomial &m, const PureState &psi) {
    check_compatible(m.num_qubits(), psi);
    std::complex<double> value = 1;
    for (const auto &t : m.terms()) {
        auto c = psi.amplitude(t.label);
        if (c == 0.0) {
            return 0;
        }
        value *= ipow(c, t.plain_exponent) * ipow(std::conj(c), t.conjugate_exponent);
    }
    return value;
}

std::complex<double> evaluate(const InvariantSum &s, const PureState &psi) {
    std::complex<double> total = 0;
    for (const auto &m : s.monomials) {
        total += evaluate(m, psi);
    }
    return total;
}

std::complex<double> evaluate(const InvariantPolynomial &p, const PureState &psi) {
    std::complex<double> total = 0;
    for (const auto &t : p.terms) {
        total += double(t.coefficient) * evaluate(t.monomial, psi);
    }
    return total;
}

GaussianRational evaluate_exact(const InvariantMonomial &m, const std::map<uint64_t, GaussianRational> &amplitudes) {
    GaussianRational value{1, 0};
    for (const auto &t : m.terms()) {
        auto it = amplitudes.find(t.label);
        if (it == amplitudes.end()) {
            return {0, 0};
        }
        for (unsigned k = 0; k < t.plain_exponent; k++) {
            value = value * it->second;
        }
        for (unsigned k = 0; k < t.conjugate_exponent; k++) {
            value = value * it->second.conj();
        }
    }
    return value;
}

bool bidegree_scaling_check(const InvariantMonomial &m, const PureState &psi, std::complex<double> lambda,
                            double rel_tol) {
    auto base = evaluate(m, psi);
    auto scaled = evaluate(m, psi.scaled(lambda));
    auto expected = ipow(lambda, m.bidegree().a) * ipow(std::conj(lambda), m.bidegree().b) * base;
    double scale = std::max(std::abs(expected), std::abs(scaled));
    if (scale == 0) {
        return true;
    }
    return std::abs(scaled - expected) <= rel_tol * scale;
}

bool bidegrees_consistent_with_theta(bool theta_continuous, const CircuitCatalog &catalog) {
    if (!theta_continuous) {
        return true;
    }
    return std::all_of(catalog.circuits.begin(), catalog.circuits.end(), [](const BalancedCircuit &c) {
        Bidegree bd = monomial_from_circuit(c).bidegree();
        return c.d_order == 0 && bd.a == bd.b;
    });
}

SingleGeneratorReport single_sl_generator_check(const CircuitCatalog &catalog) {
    SingleGeneratorReport r;
    r.circuit_count = catalog.circuits.size();
    if (r.circuit_count != 1) {
        r.detail = "support has " + std::to_string(r.circuit_count) + " circuits, need exactly one";
        return r;
    }
    const auto &c = catalog.circuits.front();
    if (!c.positive) {
        r.detail = "the only circuit has a mixed-sign relation";
        return r;
    }
    InvariantMonomial m = monomial_from_circuit(c);
    if (!is_sl_type(m)) {
        r.detail = "the circuit monomial is not SL-type";
        return r;
    }
    r.hypothesis_holds = true;
    r.generator_bidegree = m.bidegree();
    r.detail = "single positive circuit; SL-type bidegrees on the stratum are multiples of (" +
               std::to_string(m.bidegree().a) + ",0)";
    return r;
}

}  // namespace lusym
