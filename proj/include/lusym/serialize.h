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

#ifndef LUSYM_SERIALIZE_H
#define LUSYM_SERIALIZE_H

#include <string>
#include <string_view>

#include "json.hpp"
#include "lusym/analysis.h"
#include "lusym/circuits.h"
#include "lusym/invariants.h"
#include "lusym/normalizer.h"
#include "lusym/state.h"
#include "lusym/symmetry.h"

namespace lusym {

using Json = nlohmann::json;

inline constexpr std::string_view kToolName = "lusym";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer &x);
Integer integer_from_json(const Json &j, std::string_view field);

Json angle_to_json(const Angle &a);
Angle angle_from_json(const Json &j, std::string_view field);
Json phase_vector_to_json(const PhaseVector &g);
PhaseVector phase_vector_from_json(const Json &j, size_t n, std::string_view field);

/// {"n": 2, "amplitudes": {"00": [re, im], ...}}
Json state_to_json(const PureState &psi);
PureState state_from_json(const Json &j);
/// Parses state JSON text; errors carry line/column or field names.
PureState parse_state(std::string_view text);
std::string serialize_state(const PureState &psi);

/// {"n", "torus_basis", "finite": [{"order", "generator": {"phis", "theta"}}],
/// plus derived "torus_rank" and "theta_continuous" on output.
Json group_to_json(const DiagonalSymmetryGroup &g);
DiagonalSymmetryGroup group_from_json(const Json &j);
DiagonalSymmetryGroup parse_group(std::string_view text);

Json support_to_json(const Support &s);
Json monomial_to_json(const InvariantMonomial &m);
Json circuit_to_json(const BalancedCircuit &c);
Json catalog_to_json(const CircuitCatalog &c);
Json profile_to_json(const QubitActionProfile &p, size_t n);
Json flip_group_to_json(const FlipGroup &g);
Json normalizer_to_json(const NormalizerDescription &d);
Json verification_to_json(const SymmetryVerification &v);
Json single_generator_to_json(const SingleGeneratorReport &r);
Json complex_to_json(std::complex<double> z);

/// Tool name and version plus the SHA-256 of the canonical input text.
Json provenance(std::string_view canonical_input);
std::string sha256_hex(std::string_view data);

Json report_to_json(const AnalysisReport &r);

/// Stable pretty-printed output (2-space indent, trailing newline).
std::string dump(const Json &j);

}  // namespace lusym

#endif
