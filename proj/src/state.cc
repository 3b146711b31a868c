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

#include "lusym/state.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lusym/errors.h"

namespace lusym {

namespace {

void check_qubit_count(size_t n) {
    if (n == 0 || n > kMaxQubits) {
        throw InputError("qubit count must be in 1.." + std::to_string(kMaxQubits) + ", got " + std::to_string(n));
    }
}

std::complex<double> unit_phase(double turns) {
    double angle = 2 * std::numbers::pi * turns;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

BasisLabel::BasisLabel(size_t n, uint64_t bits) : n_(n), bits_(bits) {
    check_qubit_count(n);
    if (bits >> n) {
        throw InputError("label bits exceed qubit count");
    }
}

BasisLabel BasisLabel::parse(std::string_view s) {
    if (s.empty()) {
        throw InputError("empty basis label");
    }
    if (s.size() > kMaxQubits) {
        throw InputError("basis label '" + std::string(s) + "' is too long");
    }
    uint64_t bits = 0;
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw InputError("basis label '" + std::string(s) + "' must contain only 0 and 1");
        }
        bits = (bits << 1) | uint64_t(c == '1');
    }
    return BasisLabel(s.size(), bits);
}

std::string BasisLabel::str() const { return label_string(n_, bits_); }

std::string label_string(size_t n, uint64_t bits) {
    std::string s(n, '0');
    for (size_t k = 0; k < n; k++) {
        if ((bits >> (n - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

std::vector<int> weight_vector(const BasisLabel &label) {
    std::vector<int> w(label.num_qubits());
    for (size_t k = 0; k < w.size(); k++) {
        w[k] = label.bit(k) ? -1 : 1;
    }
    return w;
}

Support::Support(size_t n, std::vector<uint64_t> labels) : n_(n), labels_(std::move(labels)) {
    check_qubit_count(n);
    if (labels_.empty()) {
        throw InputError("support must be nonempty");
    }
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw InputError("support contains a repeated label");
    }
    if (labels_.back() >> n) {
        throw InputError("support label exceeds qubit count");
    }
}

Support Support::parse(std::string_view text) {
    std::vector<uint64_t> labels;
    size_t n = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view token = text.substr(start, end - start);
        while (!token.empty() && token.front() == ' ') {
            token.remove_prefix(1);
        }
        while (!token.empty() && token.back() == ' ') {
            token.remove_suffix(1);
        }
        BasisLabel label = BasisLabel::parse(token);
        if (labels.empty()) {
            n = label.num_qubits();
        } else if (label.num_qubits() != n) {
            throw InputError("label '" + std::string(token) + "' has length " + std::to_string(label.num_qubits()) +
                             ", expected " + std::to_string(n));
        }
        labels.push_back(label.bits());
        start = end + 1;
    }
    return Support(n, std::move(labels));
}

Support Support::full(size_t n) {
    check_qubit_count(n);
    if (n > 20) {
        throw InputError("full support is limited to 20 qubits");
    }
    std::vector<uint64_t> labels(uint64_t{1} << n);
    for (uint64_t k = 0; k < labels.size(); k++) {
        labels[k] = k;
    }
    return Support(n, std::move(labels));
}

bool Support::contains(uint64_t bits) const { return std::binary_search(labels_.begin(), labels_.end(), bits); }

Support Support::subset(std::span<const size_t> indices) const {
    std::vector<uint64_t> out;
    out.reserve(indices.size());
    for (size_t j : indices) {
        out.push_back(labels_.at(j));
    }
    return Support(n_, std::move(out));
}

std::string Support::str() const {
    std::string s;
    for (size_t j = 0; j < labels_.size(); j++) {
        if (j) {
            s += ',';
        }
        s += label_string(n_, labels_[j]);
    }
    return s;
}

PureState::PureState(size_t n, std::map<uint64_t, Amplitude> amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(n);
    if (amplitudes_.empty()) {
        throw InputError("state has no amplitudes");
    }
    for (const auto &[bits, c] : amplitudes_) {
        if (bits >> n) {
            throw InputError("amplitude label exceeds qubit count");
        }
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InputError("amplitude of " + label_string(n, bits) + " is not finite");
        }
        if (std::abs(c) < kAmplitudeZeroThreshold) {
            throw InputError("amplitude of " + label_string(n, bits) +
                             " is below the zero threshold; omit the label instead");
        }
    }
}

PureState PureState::from_labels(size_t n, const std::vector<std::pair<std::string, Amplitude>> &terms) {
    std::map<uint64_t, Amplitude> amps;
    for (const auto &[s, c] : terms) {
        BasisLabel label = BasisLabel::parse(s);
        if (label.num_qubits() != n) {
            throw InputError("label '" + s + "' does not have " + std::to_string(n) + " qubits");
        }
        if (!amps.emplace(label.bits(), c).second) {
            throw InputError("label '" + s + "' given twice");
        }
    }
    return PureState(n, std::move(amps));
}

PureState::Amplitude PureState::amplitude(uint64_t bits) const {
    auto it = amplitudes_.find(bits);
    return it == amplitudes_.end() ? Amplitude{} : it->second;
}

Support PureState::support() const {
    std::vector<uint64_t> labels;
    labels.reserve(amplitudes_.size());
    for (const auto &kv : amplitudes_) {
        labels.push_back(kv.first);
    }
    return Support(n_, std::move(labels));
}

double PureState::norm_squared() const {
    double total = 0;
    for (const auto &kv : amplitudes_) {
        total += std::norm(kv.second);
    }
    return total;
}

bool PureState::is_normalized(double tol) const { return std::abs(std::sqrt(norm_squared()) - 1) <= tol; }

PureState PureState::permuted_by_mask(uint64_t mask) const {
    if (mask >> n_) {
        throw InputError("flip mask exceeds qubit count");
    }
    std::map<uint64_t, Amplitude> out;
    for (const auto &[bits, c] : amplitudes_) {
        out.emplace(bits ^ mask, c);
    }
    return PureState(n_, std::move(out));
}

PureState PureState::scaled(Amplitude factor) const {
    std::map<uint64_t, Amplitude> out;
    for (const auto &[bits, c] : amplitudes_) {
        out.emplace(bits, c * factor);
    }
    return PureState(n_, std::move(out));
}

Angle::Angle(const Rational &turns) {
    // floor division keeps the representative in [0, 1).
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), turns.get_num_mpz_t(), turns.get_den_mpz_t());
    turns_ = turns - Rational(q);
    turns_.canonicalize();
}

double Angle::radians() const { return 2 * std::numbers::pi * turns_.get_d(); }

RationalVector PhaseVector::as_turns() const {
    RationalVector out;
    out.reserve(phis.size() + 1);
    for (const auto &phi : phis) {
        out.push_back(phi.turns());
    }
    out.push_back(theta.turns());
    return out;
}

PhaseVector PhaseVector::from_turns(const RationalVector &turns) {
    if (turns.empty()) {
        throw InputError("phase vector needs at least theta");
    }
    PhaseVector g;
    for (size_t k = 0; k + 1 < turns.size(); k++) {
        g.phis.emplace_back(turns[k]);
    }
    g.theta = Angle(turns.back());
    return g;
}

Rational phase_turns(const PhaseVector &g, uint64_t label_bits) {
    size_t n = g.phis.size();
    Rational total = g.theta.turns();
    for (size_t k = 0; k < n; k++) {
        if ((label_bits >> (n - 1 - k)) & 1) {
            total -= g.phis[k].turns();
        } else {
            total += g.phis[k].turns();
        }
    }
    return total;
}

PureState apply_phase_element(const PhaseVector &g, const PureState &psi) {
    if (g.num_qubits() != psi.num_qubits()) {
        throw InputError("phase element has " + std::to_string(g.num_qubits()) + " qubits, state has " +
                         std::to_string(psi.num_qubits()));
    }
    std::map<uint64_t, PureState::Amplitude> out;
    for (const auto &[bits, c] : psi.amplitudes()) {
        Rational turns = Angle(phase_turns(g, bits)).turns();
        out.emplace(bits, turns == 0 ? c : c * unit_phase(turns.get_d()));
    }
    return PureState(psi.num_qubits(), std::move(out));
}

PureState apply_phase_turns(std::span<const double> turns, const PureState &psi) {
    size_t n = psi.num_qubits();
    if (turns.size() != n + 1) {
        throw InputError("torus point has " + std::to_string(turns.size()) + " entries, expected " +
                         std::to_string(n + 1));
    }
    std::map<uint64_t, PureState::Amplitude> out;
    for (const auto &[bits, c] : psi.amplitudes()) {
        double total = turns[n];
        for (size_t k = 0; k < n; k++) {
            total += ((bits >> (n - 1 - k)) & 1) ? -turns[k] : turns[k];
        }
        out.emplace(bits, c * unit_phase(total - std::floor(total)));
    }
    return PureState(n, std::move(out));
}

Matrix2 reduced_density_matrix(const PureState &psi, size_t k, double norm_tol) {
    size_t n = psi.num_qubits();
    if (k >= n) {
        throw InputError("qubit index " + std::to_string(k) + " out of range for " + std::to_string(n) + " qubits");
    }
    if (!psi.is_normalized(norm_tol)) {
        throw InputError("state is not normalized (norm^2 = " + std::to_string(psi.norm_squared()) + ")");
    }
    uint64_t bit = qubit_mask(n, k);
    Matrix2 rho{};
    for (const auto &[bits, c] : psi.amplitudes()) {
        if (bits & bit) {
            rho[3] += std::norm(c);
        } else {
            rho[0] += std::norm(c);
            auto partner = psi.amplitude(bits | bit);
            rho[1] += c * std::conj(partner);
        }
    }
    rho[2] = std::conj(rho[1]);
    return rho;
}

}  // namespace lusym
