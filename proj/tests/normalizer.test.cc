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

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "oracles.h"

using namespace lusym;

static std::vector<uint64_t> brute_force_stabilizer(const Support &s) {
    std::vector<uint64_t> out;
    for (uint64_t t = 0; t < (uint64_t{1} << s.num_qubits()); t++) {
        bool ok = true;
        for (uint64_t l : s.labels()) {
            ok &= s.contains(l ^ t);
        }
        if (ok) {
            out.push_back(t);
        }
    }
    return out;
}

static uint64_t ones(size_t n) {
    return (uint64_t{1} << n) - 1;
}

TEST(support_stabilizer_masks, examples) {
    for (size_t n = 2; n <= 6; n++) {
        Support ghz(n, {0, ones(n)});
        auto g = support_stabilizer_masks(ghz);
        ASSERT_EQ(*g.elements, (std::vector<uint64_t>{0, ones(n)}));
    }
    ASSERT_EQ(*support_stabilizer_masks(Support::parse("100,010,001")).elements, (std::vector<uint64_t>{0}));
    auto full = support_stabilizer_masks(Support::full(4));
    ASSERT_EQ(full.elements->size(), 16u);
    ASSERT_EQ(full.order_log2(), 4u);
}

TEST(support_stabilizer_masks, exhaustive_small) {
    for (size_t n = 1; n <= 3; n++) {
        for (uint64_t mask = 1; mask < (uint64_t{1} << (1 << n)); mask++) {
            std::vector<uint64_t> labels;
            for (uint64_t s = 0; s < (uint64_t{1} << n); s++) {
                if ((mask >> s) & 1) {
                    labels.push_back(s);
                }
            }
            Support s(n, labels);
            auto g = support_stabilizer_masks(s);
            ASSERT_EQ(*g.elements, brute_force_stabilizer(s)) << s.str();
            std::set<uint64_t> set(g.elements->begin(), g.elements->end());
            ASSERT_TRUE(set.count(0));
            for (uint64_t a : set) {
                for (uint64_t b : set) {
                    ASSERT_TRUE(set.count(a ^ b));
                }
            }
        }
    }
}

TEST(flip_group, span_and_contains) {
    auto g = FlipGroup::span(4, {0b1100, 0b0110, 0b1010});
    ASSERT_EQ(g.order_log2(), 2u);
    ASSERT_EQ(*g.elements, (std::vector<uint64_t>{0, 0b0110, 0b1010, 0b1100}));
    ASSERT_TRUE(g.contains(0b1010));
    ASSERT_FALSE(g.contains(0b0001));
}

TEST(phase_condition_filter, examples) {
    for (size_t n = 2; n <= 6; n++) {
        Support ghz(n, {0, ones(n)});
        auto g = solve_symmetry_group(ghz);
        ASSERT_TRUE(flip_preserves_group(g, ones(n)));
        auto kept = phase_condition_filter(ghz, g, support_stabilizer_masks(ghz));
        ASSERT_TRUE(kept.contains(ones(n)));
    }
    Support bell = Support::parse("00,11");
    ASSERT_TRUE(flip_preserves_group(solve_symmetry_group(bell), 0b11));
    Support w = Support::parse("100,010,001");
    auto kept = phase_condition_filter(w, solve_symmetry_group(w), support_stabilizer_masks(w));
    ASSERT_EQ(*kept.elements, (std::vector<uint64_t>{0}));
}

TEST(phase_condition_filter, rejects_when_group_not_preserved) {
    // The group of {01, 10} rotates phi_1 and phi_2 together; flipping only
    // qubit 1 maps the direction (1, 1, 0) to (-1, 1, 0), outside the group.
    auto g = solve_symmetry_group(Support::parse("01,10"));
    ASSERT_FALSE(flip_preserves_group(g, 0b10));
    ASSERT_TRUE(flip_preserves_group(g, 0b11));
}

TEST(phase_condition_filter, keeps_every_stabilizer_mask) {
    // Conjugating an element fixing S by a flip t gives one fixing S xor t.
    // When t stabilizes S that is S again, so nothing may be filtered.
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 200; trial++) {
        Support s = oracle::random_support(rng, 5, 16);
        auto g = solve_symmetry_group(s);
        auto candidates = support_stabilizer_masks(s);
        auto kept = phase_condition_filter(s, g, candidates);
        ASSERT_EQ(*kept.elements, *candidates.elements) << s.str();
    }
}

TEST(compute_normalizer, examples) {
    auto ghz4 = compute_normalizer(Support::parse("0000,1111"));
    ASSERT_EQ(*ghz4.flips.elements, (std::vector<uint64_t>{0, 0b1111}));
    ASSERT_TRUE(ghz4.assumption_ok);
    ASSERT_EQ(ghz4.torus.torus_rank(), 5u);

    auto x = compute_normalizer(Support::parse("1111,1000,0100,0010,0001"));
    ASSERT_EQ(*x.flips.elements, (std::vector<uint64_t>{0}));

    auto trivial = compute_normalizer(Support::parse("000,110,100,010"));
    ASSERT_FALSE(trivial.assumption_ok);
    ASSERT_TRUE(trivial.qubit_profile.trivial[0]);
    ASSERT_TRUE(trivial.qubit_profile.trivial[1]);
}

TEST(compute_normalizer, assumption_matches_profile) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 200; trial++) {
        Support s = oracle::random_support(rng, 5, 12);
        auto d = compute_normalizer(s);
        auto profile = qubit_action_profile(s, solve_symmetry_group(s));
        ASSERT_EQ(d.assumption_ok, profile.all_nontrivial());
        ASSERT_EQ(d.qubit_profile.trivial, profile.trivial);
    }
}

TEST(compute_normalizer, kept_masks_preserve_group_of_moved_state) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 100; trial++) {
        Support s = oracle::random_support(rng, 5, 16);
        auto d = compute_normalizer(s);
        auto g = solve_symmetry_group(s);
        PureState psi = oracle::random_state(rng, s);
        for (uint64_t m : *d.flips.elements) {
            auto moved = psi.permuted_by_mask(m);
            ASSERT_TRUE(groups_equal(solve_symmetry_group(moved.support()), g));
            ASSERT_TRUE(flip_preserves_group(g, m));
        }
    }
}

TEST(balance_defect_polynomials, examples) {
    double a = 1 / std::sqrt(2.0);
    auto bell = PureState::from_labels(2, {{"00", a}, {"11", a}});
    auto pb = balance_defect_polynomials(bell.support());
    ASSERT_EQ(pb.size(), 2u);
    for (const auto &p : pb) {
        ASSERT_NEAR(std::abs(evaluate(p, bell)), 0, 1e-15);
    }

    double t = 1 / std::sqrt(3.0);
    auto w = PureState::from_labels(3, {{"100", t}, {"010", t}, {"001", t}});
    auto pw = balance_defect_polynomials(w.support());
    ASSERT_NEAR(evaluate(pw[0], w).real(), 1.0 / 3, 1e-12);

    for (size_t n = 2; n <= 6; n++) {
        PureState ghz(n, {{0, a}, {ones(n), a}});
        for (const auto &p : balance_defect_polynomials(ghz.support())) {
            ASSERT_NEAR(std::abs(evaluate(p, ghz)), 0, 1e-15);
            for (const auto &term : p.terms) {
                ASSERT_EQ(term.monomial.bidegree(), (Bidegree{1, 1}));
            }
        }
    }
}

TEST(balance_defect_polynomials, vanish_iff_marginal_balanced) {
    std::mt19937_64 rng(53);
    int balanced = 0;
    for (int trial = 0; trial < 200; trial++) {
        Support s = oracle::random_support(rng, 6, 16);
        size_t n = s.num_qubits();
        size_t k = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
        uint64_t bit = qubit_mask(n, k);
        bool both = false;
        bool zero = false;
        bool one = false;
        for (uint64_t l : s.labels()) {
            (l & bit ? one : zero) = true;
        }
        both = zero && one;
        PureState psi = (both && trial % 2) ? oracle::random_balanced_state(rng, s, k) : oracle::random_state(rng, s);
        auto defects = balance_defect_polynomials(s);
        for (size_t q = 0; q < n; q++) {
            double d = evaluate(defects[q], psi).real();
            auto rho = oracle::dense_rdm(psi, q);
            bool rdm_balanced =
                std::abs(rho[0].real() - 0.5) <= 1e-10 && std::abs(rho[3].real() - 0.5) <= 1e-10;
            ASSERT_EQ(std::abs(d) <= 1e-10, rdm_balanced) << s.str() << " qubit " << q;
            balanced += rdm_balanced;
        }
    }
    ASSERT_GT(balanced, 50);
}
