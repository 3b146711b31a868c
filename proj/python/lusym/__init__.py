# Copyright 2026 The lusym Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Locally diagonal symmetry groups and entanglement invariants of sparse qubit states."""

from lusym._core import (
    InputError,
    InvariantViolation,
    __version__,
    analyze,
    analyze_json,
    circuits,
    compare,
    evaluate_circuit_monomials,
    fixture,
    fixture_names,
    normalizer,
    smith_normal_form,
    symmetry_group,
)

__all__ = [
    "InputError",
    "InvariantViolation",
    "__version__",
    "analyze",
    "analyze_json",
    "circuits",
    "compare",
    "evaluate_circuit_monomials",
    "fixture",
    "fixture_names",
    "normalizer",
    "smith_normal_form",
    "symmetry_group",
]
