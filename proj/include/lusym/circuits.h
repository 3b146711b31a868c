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

#ifndef LUSYM_CIRCUITS_H
#define LUSYM_CIRCUITS_H

#include <string_view>
#include <utility>
#include <vector>

#include "lusym/exact_linalg.h"
#include "lusym/state.h"
#include "lusym/symmetry.h"

namespace lusym {

/// Minimal dependent subset of the weight vectors of a support, with its
/// relation sum_j z_j v_j = 0 (gcd 1, first entry positive).
struct BalancedCircuit {
    size_t n = 0;
    std::vector<size_t> member_indices;  // indices into the parent support
    std::vector<uint64_t> member_labels;
    IntVector relation;
    /// All z_j share one sign, so the origin is in the convex hull.
    bool positive = false;
    /// sum_j z_j under the normalization above. Zero means theta is not pinned.
    Integer d_order;

    size_t size() const { return member_labels.size(); }
    Support members() const { return Support(n, member_labels); }
};

struct CircuitCatalog {
    Support support;
    std::vector<BalancedCircuit> circuits;
    /// Some circuit has a positive relation.
    bool semistable = false;
};

/// Every circuit of the weight-vector configuration, ordered lexicographically
/// by member index set.
CircuitCatalog enumerate_circuits(const Support &support);

/// Builds the circuit record for a dependent index set whose kernel is spanned
/// by `relation`; exposed for oracles and deserialization.
BalancedCircuit make_circuit(const Support &support, std::vector<size_t> indices, IntVector relation);

enum class HullClass { OriginInConvexHull, OriginInAffineHullOnly };

std::string_view to_string(HullClass c);

HullClass polytope_classification(const BalancedCircuit &circuit);

struct CircuitGroup {
    BalancedCircuit circuit;
    DiagonalSymmetryGroup group;
};

/// For each circuit with nonzero d_order, the group solved from its members alone.
std::vector<CircuitGroup> circuits_defining_group(const Support &support);

}  // namespace lusym

#endif
