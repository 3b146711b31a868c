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

#include "lusym/fixtures.h"

#include <cmath>

#include "lusym/errors.h"

namespace lusym {

namespace {

PureState ghz(size_t n) {
    double a = 1 / std::sqrt(2.0);
    uint64_t ones = (uint64_t{1} << n) - 1;
    return PureState(n, {{0, a}, {ones, a}});
}

PureState w(size_t n) {
    double a = 1 / std::sqrt(double(n));
    std::map<uint64_t, PureState::Amplitude> amps;
    for (size_t k = 0; k < n; k++) {
        amps.emplace(qubit_mask(n, k), a);
    }
    return PureState(n, std::move(amps));
}

PureState quarter(const std::vector<std::pair<std::string, double>> &terms) {
    std::vector<std::pair<std::string, PureState::Amplitude>> t;
    for (const auto &[label, sign] : terms) {
        t.emplace_back(label, 0.5 * sign);
    }
    return PureState::from_labels(4, t);
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names{"bell"};
    for (int n = 2; n <= 6; n++) {
        names.push_back("ghz" + std::to_string(n));
    }
    for (int n = 3; n <= 6; n++) {
        names.push_back("w" + std::to_string(n));
    }
    names.insert(names.end(), {"cluster", "cluster_a", "cluster_b", "xstate"});
    return names;
}

PureState fixture(std::string_view name) {
    if (name == "bell") {
        return ghz(2);
    }
    if (name.size() == 4 && name.starts_with("ghz") && name[3] >= '2' && name[3] <= '6') {
        return ghz(size_t(name[3] - '0'));
    }
    if (name.size() == 2 && name[0] == 'w' && name[1] >= '3' && name[1] <= '6') {
        return w(size_t(name[1] - '0'));
    }
    if (name == "cluster") {
        return quarter({{"0000", 1}, {"0011", 1}, {"1100", 1}, {"1111", -1}});
    }
    if (name == "cluster_a") {
        return quarter({{"1111", 1}, {"1100", 1}, {"0010", 1}, {"0001", 1}});
    }
    if (name == "cluster_b") {
        return quarter({{"1111", 1}, {"1010", 1}, {"0100", 1}, {"0001", 1}});
    }
    if (name == "xstate") {
        double s6 = std::sqrt(6.0);
        return PureState::from_labels(4, {{"1111", std::sqrt(2.0) / s6},
                                          {"1000", 1 / s6},
                                          {"0100", 1 / s6},
                                          {"0010", 1 / s6},
                                          {"0001", 1 / s6}});
    }
    throw InputError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace lusym
