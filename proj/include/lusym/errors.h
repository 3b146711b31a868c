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

#ifndef LUSYM_ERRORS_H
#define LUSYM_ERRORS_H

#include <stdexcept>
#include <string>

namespace lusym {

/// Raised for caller mistakes: mismatched qubit counts, malformed labels,
/// unnormalized states, bad files. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
   public:
    explicit InputError(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when an internal consistency check fails. Maps to exit code 3.
class InvariantViolation : public std::logic_error {
   public:
    explicit InvariantViolation(const std::string &what) : std::logic_error(what) {}
};

}  // namespace lusym

#endif
