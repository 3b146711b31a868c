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

#include "lusym/symmetry.h"

#include <algorithm>

#include "lusym/errors.h"

namespace lusym {

WeightMatrix build_weight_matrix(const Support &support) {
    size_t n = support.num_qubits();
    IntMatrix m(support.size(), n + 1);
    for (size_t j = 0; j < support.size(); j++) {
        auto w = weight_vector(support.label(j));
        for (size_t k = 0; k < n; k++) {
            m(j, k) = w[k];
        }
        m(j, n) = 1;
    }
    return {support, std::move(m)};
}

bool DiagonalSymmetryGroup::theta_continuous() const {
    return std::any_of(torus_basis.begin(), torus_basis.end(), [](const IntVector &v) { return v.back() != 0; });
}

std::optional<Integer> DiagonalSymmetryGroup::order() const {
    if (torus_rank() != 0) {
        return std::nullopt;
    }
    Integer total = 1;
    for (const auto &f : finite) {
        total *= f.order;
    }
    return total;
}

IntVector DiagonalSymmetryGroup::finite_factors() const {
    IntVector out;
    for (const auto &f : finite) {
        out.push_back(f.order);
    }
    return out;
}

DiagonalSymmetryGroup solve_symmetry_group(const Support &support) {
    WeightMatrix w = build_weight_matrix(support);
    size_t n = support.num_qubits();
    DiagonalSymmetryGroup group;
    group.n = n;
    group.torus_basis = rational_kernel(w.matrix);

    // M x in Z^L  <=>  D y in Z^L with x = V y. Coordinate y_k (k < rank)
    // ranges over (1/d_k) Z; the remaining coordinates span the torus.
    SmithDecomposition s = smith_normal_form(w.matrix);
    for (size_t k = 0; k < s.rank; k++) {
        const Integer &d = s.D(k, k);
        if (d == 1) {
            continue;
        }
        RationalVector x(n + 1);
        for (size_t r = 0; r <= n; r++) {
            x[r] = Rational(s.V(r, k), d);
            x[r].canonicalize();
        }
        group.finite.push_back({d, PhaseVector::from_turns(x)});
    }
    if (group.torus_rank() + s.rank != n + 1) {
        throw InvariantViolation("torus rank and weight-matrix rank disagree");
    }
    return group;
}

namespace {

// Integer functionals whose common kernel is exactly the real span of the
// torus basis. They are rows of a unimodular matrix, so they also map the
// integer lattice onto the integer lattice of the quotient.
IntMatrix torus_quotient(const DiagonalSymmetryGroup &group) {
    size_t dim = group.n + 1;
    if (group.torus_basis.empty()) {
        return IntMatrix::identity(dim);
    }
    IntMatrix k = IntMatrix::from_columns(dim, group.torus_basis);
    SmithDecomposition s = smith_normal_form(k);
    IntMatrix p(dim - s.rank, dim);
    for (size_t r = s.rank; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            p(r - s.rank, c) = s.U(r, c);
        }
    }
    return p;
}

void check_point_size(const DiagonalSymmetryGroup &group, size_t size) {
    if (size != group.n + 1) {
        throw InputError("point has " + std::to_string(size) + " coordinates, group needs " +
                         std::to_string(group.n + 1));
    }
}

bool member_with_quotient(const DiagonalSymmetryGroup &group, const IntMatrix &p, const RationalVector &point) {
    size_t m = p.rows();
    if (m == 0) {
        return true;
    }
    RationalVector target = p * point;
    std::vector<RationalVector> gens;
    for (const auto &f : group.finite) {
        gens.push_back(p * f.generator.as_turns());
    }
    Integer scale = 1;
    auto absorb = [&](const RationalVector &v) {
        for (const auto &x : v) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
        }
    };
    absorb(target);
    for (const auto &g : gens) {
        absorb(g);
    }
    // Lattice generated by the projected finite generators and Z^m, scaled
    // so that every generator is integral.
    IntMatrix basis(m, gens.size() + m);
    for (size_t c = 0; c < gens.size(); c++) {
        for (size_t r = 0; r < m; r++) {
            Rational v = gens[c][r] * scale;
            basis(r, c) = v.get_num();
        }
    }
    for (size_t r = 0; r < m; r++) {
        basis(r, gens.size() + r) = scale;
    }
    for (auto &x : target) {
        x *= scale;
    }
    return lattice_member(basis, target);
}

}  // namespace

bool group_member(const DiagonalSymmetryGroup &group, const RationalVector &point) {
    check_point_size(group, point.size());
    return member_with_quotient(group, torus_quotient(group), point);
}

bool torus_contains_direction(const DiagonalSymmetryGroup &group, const IntVector &direction) {
    check_point_size(group, direction.size());
    IntVector image = torus_quotient(group) * direction;
    return std::all_of(image.begin(), image.end(), [](const Integer &x) { return x == 0; });
}

bool group_contains(const DiagonalSymmetryGroup &h1, const DiagonalSymmetryGroup &h2) {
    if (h1.n != h2.n) {
        throw InputError("cannot compare groups on " + std::to_string(h1.n) + " and " + std::to_string(h2.n) +
                         " qubits");
    }
    IntMatrix p = torus_quotient(h1);
    for (const auto &d : h2.torus_basis) {
        IntVector image = p * d;
        if (!std::all_of(image.begin(), image.end(), [](const Integer &x) { return x == 0; })) {
            return false;
        }
    }
    for (const auto &f : h2.finite) {
        if (!member_with_quotient(h1, p, f.generator.as_turns())) {
            return false;
        }
    }
    return true;
}

bool groups_equal(const DiagonalSymmetryGroup &a, const DiagonalSymmetryGroup &b) {
    return group_contains(a, b) && group_contains(b, a);
}

bool QubitActionProfile::all_nontrivial() const {
    return std::none_of(trivial.begin(), trivial.end(), [](bool t) { return t; });
}

QubitActionProfile qubit_action_profile(const Support &support, const DiagonalSymmetryGroup &group) {
    size_t n = support.num_qubits();
    if (group.n != n) {
        throw InputError("group and support have different qubit counts");
    }
    const Rational half(1, 2);
    QubitActionProfile profile;
    profile.trivial.assign(n, true);
    profile.witness.assign(n, std::nullopt);
    for (size_t k = 0; k < n; k++) {
        for (const auto &d : group.torus_basis) {
            if (d[k] != 0) {
                profile.trivial[k] = false;
            }
        }
        for (const auto &f : group.finite) {
            const Rational &phi = f.generator.phis[k].turns();
            if (phi != 0 && phi != half) {
                profile.trivial[k] = false;
            }
        }
        uint64_t bit = qubit_mask(n, k);
        for (uint64_t label : support.labels()) {
            if (!(label & bit) && support.contains(label | bit)) {
                profile.witness[k] = std::make_pair(label, label | bit);
                break;
            }
        }
        if (profile.witness[k] && !profile.trivial[k]) {
            throw InvariantViolation("labels differing only at qubit " + std::to_string(k) +
                                     " but the group acts non-trivially there");
        }
    }
    return profile;
}

bool is_maximal_diagonal_group(const Support &support, const DiagonalSymmetryGroup &group) {
    return groups_equal(solve_symmetry_group(support), group);
}

}  // namespace lusym
