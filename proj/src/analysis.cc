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

#include "lusym/analysis.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "lusym/errors.h"

namespace lusym {

namespace {

double max_deviation(const PureState &a, const PureState &b) {
    double worst = 0;
    for (const auto &[bits, c] : a.amplitudes()) {
        worst = std::max(worst, std::abs(c - b.amplitude(bits)));
    }
    return worst;
}

}  // namespace

SymmetryVerification verify_symmetry(const PureState &psi, const DiagonalSymmetryGroup &group, size_t samples,
                                     double tol, uint64_t seed) {
    if (group.n != psi.num_qubits()) {
        throw InputError("group acts on " + std::to_string(group.n) + " qubits, state has " +
                         std::to_string(psi.num_qubits()));
    }
    if (samples == 0) {
        throw InputError("verify_symmetry needs at least one sample");
    }
    SymmetryVerification r;
    r.samples = samples;
    r.seed = seed;
    r.tolerance = tol;

    for (const auto &f : group.finite) {
        double dev = max_deviation(psi, apply_phase_element(f.generator, psi));
        r.finite_max_deviation = std::max(r.finite_max_deviation, dev);
        r.elements_checked++;
    }
    r.max_deviation = r.finite_max_deviation;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    size_t dim = group.n + 1;
    for (size_t s = 0; s < samples; s++) {
        std::vector<double> point(dim, 0.0);
        for (const auto &direction : group.torus_basis) {
            double t = unit(rng);
            for (size_t k = 0; k < dim; k++) {
                point[k] += t * direction[k].get_d();
            }
        }
        for (const auto &f : group.finite) {
            std::uniform_int_distribution<unsigned long> pick(0, f.order.fits_ulong_p() ? f.order.get_ui() - 1 : 1000);
            auto m = static_cast<double>(pick(rng));
            RationalVector g = f.generator.as_turns();
            for (size_t k = 0; k < dim; k++) {
                point[k] += m * g[k].get_d();
            }
        }
        for (auto &x : point) {
            x -= std::floor(x);
        }
        r.max_deviation = std::max(r.max_deviation, max_deviation(psi, apply_phase_turns(point, psi)));
        r.elements_checked++;
    }
    r.passed = r.max_deviation <= tol;
    return r;
}

AnalysisReport analyze(const PureState &psi, const AnalysisOptions &options) {
    if (!psi.is_normalized(options.tolerance)) {
        throw InputError("state is not normalized (norm^2 = " + std::to_string(psi.norm_squared()) + ")");
    }
    Support support = psi.support();
    size_t n = support.num_qubits();
    DiagonalSymmetryGroup group = solve_symmetry_group(support);
    CircuitCatalog catalog = enumerate_circuits(support);
    NormalizerDescription normalizer = compute_normalizer(support);

    AnalysisReport r{.state = psi,
                     .support = support,
                     .group = group,
                     .qubit_profile = normalizer.qubit_profile,
                     .catalog = catalog,
                     .monomials = {},
                     .symmetrized = {},
                     .abs_squares = abs_square_generators(support),
                     .normalizer = normalizer,
                     .defects = {},
                     .single_generator = single_sl_generator_check(catalog),
                     .verification = verify_symmetry(psi, group, options.samples, options.tolerance, options.seed),
                     .semistable = catalog.semistable,
                     .generic = false,
                     .theta_continuous = group.theta_continuous(),
                     .notes = {}};

    std::vector<uint64_t> flips = normalizer.flips.elements.value_or(std::vector<uint64_t>{0});
    for (const auto &c : catalog.circuits) {
        InvariantMonomial m = monomial_from_circuit(c);
        r.monomials.push_back({c, m, is_sl_type(m), polytope_classification(c), evaluate(m, psi)});

        SymmetrizedValue sv{m, false, {}, "", {}};
        auto sym = symmetrize_over_flips(m, flips);
        if (auto *sum = std::get_if<InvariantSum>(&sym)) {
            sv.admitted = true;
            sv.value = evaluate(*sum, psi);
            sv.sum = std::move(*sum);
        } else {
            sv.rejection = std::get<FlipRejection>(sym).reason;
        }
        r.symmetrized.push_back(std::move(sv));
    }

    if (!bidegrees_consistent_with_theta(r.theta_continuous, catalog)) {
        throw InvariantViolation("continuous theta but a circuit monomial has a != b");
    }

    bool amplitudes_generic = std::all_of(psi.amplitudes().begin(), psi.amplitudes().end(),
                                          [](const auto &kv) { return std::abs(kv.second) >= kGenericThreshold; });
    bool defects_generic = true;
    auto defect_polys = balance_defect_polynomials(support);
    for (size_t k = 0; k < n; k++) {
        double d = evaluate(defect_polys[k], psi).real();
        r.defects.push_back(d);
        if (std::abs(d) < kGenericThreshold) {
            defects_generic = false;
            r.notes.push_back("qubit " + std::to_string(k + 1) +
                              ": balance defect vanishes (maximally mixed); a larger non-diagonalizable symmetry is "
                              "possible");
        }
    }
    r.generic = amplitudes_generic && defects_generic;

    if (!normalizer.assumption_ok) {
        for (size_t k = 0; k < n; k++) {
            if (r.qubit_profile.trivial[k]) {
                r.notes.push_back("qubit " + std::to_string(k + 1) +
                                  ": symmetry group acts trivially; normalizer description is advisory");
            }
        }
    }
    if (r.theta_continuous) {
        r.notes.push_back("theta is continuous: all invariants on this stratum have bidegree (a,a)");
    }
    if (!r.verification.passed) {
        r.notes.push_back("numeric symmetry verification exceeded the tolerance");
    }
    return r;
}

std::string_view to_string(StrataOrder order) {
    switch (order) {
        case StrataOrder::Equal:
            return "equal";
        case StrataOrder::AClosureContainsB:
            return "A_closure_contains_B";
        case StrataOrder::BClosureContainsA:
            return "B_closure_contains_A";
        case StrataOrder::Incomparable:
            return "incomparable";
    }
    return "?";
}

StrataOrder compare_strata(const Support &a, const Support &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw InputError("supports have " + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
    }
    DiagonalSymmetryGroup ga = solve_symmetry_group(a);
    DiagonalSymmetryGroup gb = solve_symmetry_group(b);
    bool a_in_b = group_contains(gb, ga);
    bool b_in_a = group_contains(ga, gb);
    if (a_in_b && b_in_a) {
        return StrataOrder::Equal;
    }
    if (a_in_b) {
        return StrataOrder::AClosureContainsB;
    }
    if (b_in_a) {
        return StrataOrder::BClosureContainsA;
    }
    return StrataOrder::Incomparable;
}

}  // namespace lusym
