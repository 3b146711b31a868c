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

#include "lusym/normalizer.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "lusym/errors.h"

namespace lusym {

namespace {

// Reduces mask against a basis kept in echelon form (distinct leading bits,
// sorted descending).
uint64_t reduce(const std::vector<uint64_t> &basis, uint64_t mask) {
    for (uint64_t b : basis) {
        uint64_t lead = std::bit_floor(b);
        if (mask & lead) {
            mask ^= b;
        }
    }
    return mask;
}

}  // namespace

bool FlipGroup::contains(uint64_t mask) const { return reduce(generators, mask) == 0; }

FlipGroup FlipGroup::span(size_t n, const std::vector<uint64_t> &masks) {
    FlipGroup g;
    g.n = n;
    for (uint64_t m : masks) {
        uint64_t r = reduce(g.generators, m);
        if (r == 0) {
            continue;
        }
        // Clear the new leading bit from existing rows to stay fully reduced.
        uint64_t lead = std::bit_floor(r);
        for (auto &b : g.generators) {
            if (b & lead) {
                b ^= r;
            }
        }
        g.generators.push_back(r);
        std::sort(g.generators.begin(), g.generators.end(), std::greater<>());
    }
    if ((size_t{1} << g.generators.size()) <= kMaxEnumeratedFlips) {
        std::vector<uint64_t> elems{0};
        for (uint64_t b : g.generators) {
            size_t existing = elems.size();
            for (size_t k = 0; k < existing; k++) {
                elems.push_back(elems[k] ^ b);
            }
        }
        std::sort(elems.begin(), elems.end());
        g.elements = std::move(elems);
    }
    return g;
}

FlipGroup support_stabilizer_masks(const Support &support) {
    // Any stabilizing mask sends the first label to some label of the support,
    // so the candidates are first ^ s for s in S.
    auto labels = support.labels();
    uint64_t first = labels.front();
    std::vector<uint64_t> stabilizing;
    for (uint64_t s : labels) {
        uint64_t t = first ^ s;
        bool ok = std::all_of(labels.begin(), labels.end(), [&](uint64_t v) { return support.contains(v ^ t); });
        if (ok) {
            stabilizing.push_back(t);
        }
    }
    return FlipGroup::span(support.num_qubits(), stabilizing);
}

RationalVector conjugate_by_flip(const RationalVector &point, uint64_t mask) {
    size_t n = point.size() - 1;
    RationalVector out = point;
    for (size_t k = 0; k < n; k++) {
        if (mask & qubit_mask(n, k)) {
            out[k] = -out[k];
        }
    }
    return out;
}

IntVector conjugate_by_flip(const IntVector &direction, uint64_t mask) {
    size_t n = direction.size() - 1;
    IntVector out = direction;
    for (size_t k = 0; k < n; k++) {
        if (mask & qubit_mask(n, k)) {
            out[k] = -out[k];
        }
    }
    return out;
}

bool flip_preserves_group(const DiagonalSymmetryGroup &group, uint64_t mask) {
    for (const auto &d : group.torus_basis) {
        if (!torus_contains_direction(group, conjugate_by_flip(d, mask))) {
            return false;
        }
    }
    for (const auto &f : group.finite) {
        if (!group_member(group, conjugate_by_flip(f.generator.as_turns(), mask))) {
            return false;
        }
    }
    return true;
}

FlipGroup phase_condition_filter(const Support &support, const DiagonalSymmetryGroup &group,
                                 const FlipGroup &candidates) {
    if (support.num_qubits() != group.n || candidates.n != group.n) {
        throw InputError("support, group and flip candidates must share the qubit count");
    }
    if (!candidates.elements) {
        throw std::length_error("flip candidate group too large to filter element by element");
    }
    std::vector<uint64_t> kept;
    for (uint64_t mask : *candidates.elements) {
        if (flip_preserves_group(group, mask)) {
            kept.push_back(mask);
        }
    }
    FlipGroup out = FlipGroup::span(group.n, kept);
    // The preserving flips form a subgroup, so the span adds nothing new.
    if (out.elements && out.elements->size() != kept.size()) {
        throw InvariantViolation("group-preserving flips are not XOR-closed");
    }
    return out;
}

NormalizerDescription compute_normalizer(const Support &support) {
    size_t n = support.num_qubits();
    DiagonalSymmetryGroup h = solve_symmetry_group(support);
    NormalizerDescription out;
    out.qubit_profile = qubit_action_profile(support, h);
    out.assumption_ok = out.qubit_profile.all_nontrivial();
    out.torus.n = n;
    for (size_t k = 0; k <= n; k++) {
        IntVector e(n + 1);
        e[k] = 1;
        out.torus.torus_basis.push_back(std::move(e));
    }
    out.flips = phase_condition_filter(support, h, support_stabilizer_masks(support));
    return out;
}

std::vector<InvariantPolynomial> balance_defect_polynomials(const Support &support) {
    size_t n = support.num_qubits();
    std::vector<InvariantPolynomial> out(n);
    for (size_t k = 0; k < n; k++) {
        uint64_t bit = qubit_mask(n, k);
        for (uint64_t label : support.labels()) {
            out[k].terms.push_back(
                {(label & bit) ? -1L : 1L, InvariantMonomial(n, std::vector<MonomialTerm>{{label, 1, 1}})});
        }
    }
    return out;
}

}  // namespace lusym
