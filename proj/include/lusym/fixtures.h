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

#ifndef LUSYM_FIXTURES_H
#define LUSYM_FIXTURES_H

#include <string>
#include <string_view>
#include <vector>

#include "lusym/state.h"

namespace lusym {

/// Named reference states:
///   bell              (|00> + |11>)/sqrt2
///   ghz2 .. ghz6      (|0..0> + |1..1>)/sqrt2
///   w3 .. w6          equal superposition of the weight-one labels
///   cluster           (|0000> + |0011> + |1100> - |1111>)/2
///   cluster_a         (|1111> + |1100> + |0010> + |0001>)/2
///   cluster_b         (|1111> + |1010> + |0100> + |0001>)/2
///   xstate            (sqrt2 |1111> + |1000> + |0100> + |0010> + |0001>)/sqrt6
std::vector<std::string> fixture_names();

/// Throws InputError for unknown names.
PureState fixture(std::string_view name);

}  // namespace lusym

#endif
