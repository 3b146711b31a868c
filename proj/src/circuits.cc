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

#include "lusym/circuits.h"

#include <algorithm>

#include "lusym/errors.h"

namespace lusym {

namespace {

IntMatrix weight_columns(const Support &support, std::span<const size_t> indices) {
    size_t n = support.num_qubits();
    IntMatrix m(n, indices.size());
    for (size_t c = 0; c < indices.size(); c++) {
        auto w = weight_vector(support.label(indices[c]));
        for (size_t r = 0; r < n; r++) {
            m(r, c) = w[r];
        }
    }
    return m;
}

}  // namespace

BalancedCircuit make_circuit(const Support &support, std::vector<size_t> indices, IntVector relation) {
    if (indices.size() != relation.size()) {
        throw InputError("circuit relation length does not match member count");
    }
    BalancedCircuit c;
    c.n = support.num_qubits();
    c.member_indices = std::move(indices);
    for (size_t j : c.member_indices) {
        c.member_labels.push_back(support.labels()[j]);
    }
    c.relation = std::move(relation);
    bool all_pos = std::all_of(c.relation.begin(), c.relation.end(), [](const Integer &z) { return z > 0; });
    bool all_neg = std::all_of(c.relation.begin(), c.relation.end(), [](const Integer &z) { return z < 0; });
    c.positive = all_pos || all_neg;
    c.d_order = 0;
    for (const auto &z : c.relation) {
        c.d_order += z;
    }
    return c;
}

CircuitCatalog enumerate_circuits(const Support &support) {
    size_t n = support.num_qubits();
    size_t count = support.size();
    CircuitCatalog catalog{support, {}, false};

    // Grow independent sets by appending larger indices. Appending j to an
    // independent set I either keeps it independent or creates exactly one
    // circuit, which contains j. That circuit is reported only when it uses
    // all of I + {j}; otherwise it is found again from its own members.
    std::vector<std::vector<size_t>> level;
    for (size_t j = 0; j < count; j++) {
        level.push_back({j});
    }
    while (!level.empty()) {
        std::vector<std::vector<size_t>> next;
        for (const auto &base : level) {
            if (base.size() > n) {
                continue;
            }
            for (size_t j = base.back() + 1; j < count; j++) {
                std::vector<size_t> candidate = base;
                candidate.push_back(j);
                auto kernel = rational_kernel(weight_columns(support, candidate));
                if (kernel.empty()) {
                    next.push_back(std::move(candidate));
                    continue;
                }
                if (kernel.size() != 1) {
                    throw InvariantViolation("extension of an independent set has a multi-dimensional kernel");
                }
                const IntVector &z = kernel.front();
                if (std::all_of(z.begin(), z.end(), [](const Integer &x) { return x != 0; })) {
                    catalog.circuits.push_back(make_circuit(support, std::move(candidate), z));
                }
            }
        }
        level = std::move(next);
    }

    std::sort(catalog.circuits.begin(), catalog.circuits.end(),
              [](const BalancedCircuit &a, const BalancedCircuit &b) { return a.member_indices < b.member_indices; });
    catalog.semistable = std::any_of(catalog.circuits.begin(), catalog.circuits.end(),
                                     [](const BalancedCircuit &c) { return c.positive; });
    return catalog;
}

std::string_view to_string(HullClass c) {
    switch (c) {
        case HullClass::OriginInConvexHull:
            return "origin_in_convex_hull";
        case HullClass::OriginInAffineHullOnly:
            return "origin_in_affine_hull_only";
    }
    return "?";
}

HullClass polytope_classification(const BalancedCircuit &circuit) {
    // The relation spans the whole dependency space of a circuit, so a convex
    // combination hitting the origin exists iff the relation has one sign.
    return circuit.positive ? HullClass::OriginInConvexHull : HullClass::OriginInAffineHullOnly;
}

std::vector<CircuitGroup> circuits_defining_group(const Support &support) {
    std::vector<CircuitGroup> out;
    for (auto &c : enumerate_circuits(support).circuits) {
        if (c.d_order == 0) {
            continue;
        }
        DiagonalSymmetryGroup g = solve_symmetry_group(c.members());
        out.push_back({std::move(c), std::move(g)});
    }
    return out;
}

}  // namespace lusym
