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

#ifndef LUSYM_NORMALIZER_H
#define LUSYM_NORMALIZER_H

#include <optional>
#include <vector>

#include "lusym/invariants.h"
#include "lusym/state.h"
#include "lusym/symmetry.h"

namespace lusym {

/// Element enumeration is kept up to this many masks.
inline constexpr size_t kMaxEnumeratedFlips = size_t{1} << 12;

/// XOR-closed set of spin-flip masks, stored as a GF(2) basis plus (when small
/// enough) the sorted list of all elements.
struct FlipGroup {
    size_t n = 0;
    std::vector<uint64_t> generators;
    std::optional<std::vector<uint64_t>> elements;

    size_t order_log2() const { return generators.size(); }
    bool contains(uint64_t mask) const;
    /// Builds the group spanned by the given masks.
    static FlipGroup span(size_t n, const std::vector<uint64_t> &masks);
};

struct NormalizerDescription {
    /// The maximal diagonal torus: every phi_k and theta free.
    DiagonalSymmetryGroup torus;
    FlipGroup flips;
    QubitActionProfile qubit_profile;
    /// The symmetry group acts non-trivially on every qubit. When false the
    /// description is advisory only.
    bool assumption_ok = false;
};

/// Masks t with {s XOR t : s in S} == S.
FlipGroup support_stabilizer_masks(const Support &support);

/// Negates phi_k for every qubit k in the mask; theta is unchanged.
RationalVector conjugate_by_flip(const RationalVector &point, uint64_t mask);
IntVector conjugate_by_flip(const IntVector &direction, uint64_t mask);

/// True iff conjugation by the flip maps the group into (hence onto) itself.
bool flip_preserves_group(const DiagonalSymmetryGroup &group, uint64_t mask);

/// Keeps the candidate masks whose conjugation preserves the group.
FlipGroup phase_condition_filter(const Support &support, const DiagonalSymmetryGroup &group,
                                 const FlipGroup &candidates);

NormalizerDescription compute_normalizer(const Support &support);

/// Per qubit k: sum of |c_j|^2 over labels with s_k = 0 minus the same over s_k = 1.
std::vector<InvariantPolynomial> balance_defect_polynomials(const Support &support);

}  // namespace lusym

#endif
