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

#ifndef LUSYM_SYMMETRY_H
#define LUSYM_SYMMETRY_H

#include <optional>
#include <utility>
#include <vector>

#include "lusym/exact_linalg.h"
#include "lusym/state.h"

namespace lusym {

/// Row j is ((-1)^{s_j1}, ..., (-1)^{s_jn}, 1), rows in support order.
struct WeightMatrix {
    Support support;
    IntMatrix matrix;
};

WeightMatrix build_weight_matrix(const Support &support);

struct FiniteFactor {
    Integer order;
    PhaseVector generator;
};

/// Closed subgroup of the (n+1)-torus of diagonal phases (phi_1..phi_n, theta),
/// written as identity component plus finitely many rational points:
///
///   H = span_R(torus_basis) + Z<finite generators> + Z^{n+1}   (in turns)
///
/// When the group comes from solve_symmetry_group the finite orders are the
/// invariant factors (> 1) of the weight matrix and the component group is
/// their direct product.
struct DiagonalSymmetryGroup {
    size_t n = 0;
    std::vector<IntVector> torus_basis;
    std::vector<FiniteFactor> finite;

    size_t torus_rank() const { return torus_basis.size(); }
    /// True iff theta varies along the identity component.
    bool theta_continuous() const;
    /// Product of the finite orders; only meaningful when torus_rank() == 0.
    std::optional<Integer> order() const;
    IntVector finite_factors() const;
};

/// Every diagonal element fixing each basis vector of the support.
DiagonalSymmetryGroup solve_symmetry_group(const Support &support);

/// Exact test of a point (phi_1..phi_n, theta), in turns, against the group.
bool group_member(const DiagonalSymmetryGroup &group, const RationalVector &point);

/// True iff the identity component contains the direction (any real multiple).
bool torus_contains_direction(const DiagonalSymmetryGroup &group, const IntVector &direction);

/// True iff h2 is a subgroup of h1. Both must be diagonal in the same basis.
bool group_contains(const DiagonalSymmetryGroup &h1, const DiagonalSymmetryGroup &h2);
bool groups_equal(const DiagonalSymmetryGroup &a, const DiagonalSymmetryGroup &b);

struct QubitActionProfile {
    /// trivial[k]: every element acts on qubit k as +-1.
    std::vector<bool> trivial;
    /// A pair of support labels differing only at qubit k, when one exists.
    std::vector<std::optional<std::pair<uint64_t, uint64_t>>> witness;

    bool all_nontrivial() const;
};

QubitActionProfile qubit_action_profile(const Support &support, const DiagonalSymmetryGroup &group);

/// Re-solves the support and checks the given group is the full solution group.
bool is_maximal_diagonal_group(const Support &support, const DiagonalSymmetryGroup &group);

}  // namespace lusym

#endif
