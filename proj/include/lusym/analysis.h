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

#ifndef LUSYM_ANALYSIS_H
#define LUSYM_ANALYSIS_H

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lusym/circuits.h"
#include "lusym/invariants.h"
#include "lusym/normalizer.h"
#include "lusym/state.h"
#include "lusym/symmetry.h"

namespace lusym {

inline constexpr uint64_t kDefaultSeed = 20140731;
inline constexpr double kDefaultTolerance = 1e-9;
/// Amplitudes and balance defects at least this large count as nonzero for
/// the genericity flag.
inline constexpr double kGenericThreshold = 1e-9;

struct SymmetryVerification {
    double max_deviation = 0;
    /// Deviation of the worst finite generator alone.
    double finite_max_deviation = 0;
    size_t elements_checked = 0;
    size_t samples = 0;
    uint64_t seed = 0;
    double tolerance = 0;
    bool passed = false;
};

/// Applies each finite generator and `samples` random torus points (each
/// combined with a random element of the finite part) and reports the largest
/// amplitude change.
SymmetryVerification verify_symmetry(const PureState &psi, const DiagonalSymmetryGroup &group, size_t samples,
                                     double tol, uint64_t seed = kDefaultSeed);

struct AnalysisOptions {
    double tolerance = kDefaultTolerance;
    uint64_t seed = kDefaultSeed;
    size_t samples = 16;
};

struct MonomialValue {
    BalancedCircuit circuit;
    InvariantMonomial monomial;
    bool sl_type = false;
    HullClass hull = HullClass::OriginInConvexHull;
    std::complex<double> value;
};

struct SymmetrizedValue {
    InvariantMonomial seed_monomial;
    bool admitted = false;
    InvariantSum sum;  // empty unless admitted
    std::string rejection;
    std::complex<double> value;
};

struct AnalysisReport {
    PureState state;
    Support support;
    DiagonalSymmetryGroup group;
    QubitActionProfile qubit_profile;
    CircuitCatalog catalog;
    std::vector<MonomialValue> monomials;
    std::vector<SymmetrizedValue> symmetrized;
    std::vector<InvariantMonomial> abs_squares;
    NormalizerDescription normalizer;
    std::vector<double> defects;
    SingleGeneratorReport single_generator;
    SymmetryVerification verification;
    bool semistable = false;
    bool generic = false;
    bool theta_continuous = false;
    std::vector<std::string> notes;
};

/// Full analysis of a normalized state. Throws InputError when unnormalized.
AnalysisReport analyze(const PureState &psi, const AnalysisOptions &options = {});

enum class StrataOrder { Equal, AClosureContainsB, BClosureContainsA, Incomparable };

std::string_view to_string(StrataOrder order);

/// A smaller group has the larger stratum: if group(A) is a proper subgroup
/// of group(B), the stratum of B lies in the closure of the stratum of A.
StrataOrder compare_strata(const Support &a, const Support &b);

}  // namespace lusym

#endif
