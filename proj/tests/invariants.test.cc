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

#include "lusym/invariants.h"

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "lusym/errors.h"
#include "lusym/normalizer.h"
#include "oracles.h"

using namespace lusym;

static InvariantMonomial only_monomial(const char *support) {
    auto c = enumerate_circuits(Support::parse(support));
    EXPECT_EQ(c.circuits.size(), 1u);
    return monomial_from_circuit(c.circuits.at(0));
}

static uint64_t bits(const char *s) {
    return BasisLabel::parse(s).bits();
}

// Applies i X on every qubit in the mask: the SU(2) element that realizes a
// spin flip. Each flipped qubit contributes a factor i.
static PureState su2_flip(const PureState &psi, uint64_t mask) {
    std::complex<double> phase = std::pow(std::complex<double>(0, 1), __builtin_popcountll(mask));
    return psi.permuted_by_mask(mask).scaled(phase);
}

TEST(monomial_from_circuit, examples) {
    auto bell = only_monomial("00,11");
    ASSERT_EQ(bell.str(), "c[00] c[11]");
    ASSERT_EQ(bell.bidegree(), (Bidegree{2, 0}));

    auto x = only_monomial("1111,1000,0100,0010,0001");
    ASSERT_EQ(x.bidegree(), (Bidegree{6, 0}));
    for (const auto &t : x.terms()) {
        ASSERT_EQ(t.plain_exponent, t.label == bits("1111") ? 2u : 1u);
        ASSERT_EQ(t.conjugate_exponent, 0u);
    }

    auto mixed = only_monomial("000,110,100,010");
    ASSERT_EQ(mixed.bidegree(), (Bidegree{2, 2}));
    ASSERT_EQ(mixed.str(), "c[000] c*[010] c*[100] c[110]");
}

TEST(invariant_monomial, validation) {
    ASSERT_THROW(InvariantMonomial(2, {{0, 0, 0}}), InputError);
    ASSERT_THROW(InvariantMonomial(2, {{0, 1, 0}, {0, 1, 0}}), InputError);
}

TEST(abs_square_generators, examples) {
    auto g = abs_square_generators(Support::parse("00,11"));
    ASSERT_EQ(g.size(), 2u);
    for (const auto &m : g) {
        ASSERT_EQ(m.bidegree(), (Bidegree{1, 1}));
    }
    ASSERT_EQ(abs_square_generators(Support::parse("101")).size(), 1u);
    ASSERT_EQ(abs_square_generators(Support::parse("100,010,001")).size(), 3u);
}

TEST(is_sl_type, examples) {
    ASSERT_TRUE(is_sl_type(InvariantMonomial(1, {{0, 6, 0}})));
    ASSERT_FALSE(is_sl_type(InvariantMonomial(1, {{0, 2, 2}})));
    ASSERT_TRUE(is_sl_type(InvariantMonomial(1, {{0, 0, 2}})));
}

TEST(flip_monomial, examples) {
    auto bell = only_monomial("00,11");
    ASSERT_EQ(flip_monomial(bell, 0), bell);
    ASSERT_EQ(flip_monomial(bell, 0b11), bell);
    auto ghz3 = only_monomial("000,111");
    auto f = flip_monomial(ghz3, bits("110"));
    ASSERT_EQ(f.str(), "c[001] c[110]");
    ASSERT_EQ(f.bidegree(), ghz3.bidegree());
}

TEST(symmetrize_over_flips, examples) {
    auto bell = only_monomial("00,11");
    auto one = symmetrize_over_flips(bell, {0});
    ASSERT_EQ(std::get<InvariantSum>(one).monomials.size(), 1u);

    // The orbit of the GHZ_4 monomial under {0000, 1111} has one distinct
    // monomial, since the flip maps the monomial to itself.
    auto ghz4 = only_monomial("0000,1111");
    auto two = symmetrize_over_flips(ghz4, {0, 0b1111});
    ASSERT_TRUE(std::holds_alternative<InvariantSum>(two));
    ASSERT_EQ(std::get<InvariantSum>(two).monomials.size(), 1u);

    auto rejected = symmetrize_over_flips(bell, {0, 0b01});
    ASSERT_TRUE(std::holds_alternative<FlipRejection>(rejected));
    ASSERT_EQ(std::get<FlipRejection>(rejected).mask, 0b01u);

    auto ghz3 = only_monomial("000,111");
    auto orbit = symmetrize_over_flips(ghz3, {0, bits("110")});
    ASSERT_EQ(std::get<InvariantSum>(orbit).monomials.size(), 2u);

    ASSERT_THROW(symmetrize_over_flips(bell, {0b01}), InputError);
    ASSERT_THROW(symmetrize_over_flips(bell, {0, 0b01, 0b10}), InputError);
}

TEST(symmetrize_over_flips, admissibility_matches_su2_action) {
    std::mt19937_64 rng(40);
    Support full1 = Support::full(1);
    // Bidegree (2,0) with an odd flip: the honest SU(2) flip negates it.
    InvariantMonomial m20(1, {{0, 1, 0}, {1, 1, 0}});
    ASSERT_TRUE(std::holds_alternative<FlipRejection>(symmetrize_over_flips(m20, {0, 1})));
    // Bidegree (4,0): admitted, and invariant under the SU(2) flip.
    InvariantMonomial m40(1, {{0, 2, 0}, {1, 2, 0}});
    auto sum40 = std::get<InvariantSum>(symmetrize_over_flips(m40, {0, 1}));
    // Bidegree (1,1) orbit: admitted.
    InvariantMonomial m11(1, {{0, 1, 1}});
    auto sum11 = std::get<InvariantSum>(symmetrize_over_flips(m11, {0, 1}));
    ASSERT_EQ(sum11.monomials.size(), 2u);
    for (int trial = 0; trial < 20; trial++) {
        PureState psi = oracle::random_state(rng, full1);
        PureState flipped = su2_flip(psi, 1);
        ASSERT_LE(oracle::rel_err(evaluate(m20, flipped), -evaluate(m20, psi)), 1e-12);
        ASSERT_LE(oracle::rel_err(evaluate(sum40, flipped), evaluate(sum40, psi)), 1e-12);
        ASSERT_LE(oracle::rel_err(evaluate(sum11, flipped), evaluate(sum11, psi)), 1e-12);
    }
}

TEST(evaluate, examples) {
    double a = 1 / std::sqrt(2.0);
    auto bell = PureState::from_labels(2, {{"00", a}, {"11", a}});
    auto m = only_monomial("00,11");
    ASSERT_NEAR(std::abs(evaluate(m, bell) - 0.5), 0, 1e-15);

    auto partial = PureState::from_labels(2, {{"00", 1.0}});
    ASSERT_EQ(evaluate(m, partial), std::complex<double>(0));

    double s6 = std::sqrt(6.0);
    auto x = PureState::from_labels(4, {{"1111", std::sqrt(2.0) / s6},
                                        {"1000", 1 / s6},
                                        {"0100", 1 / s6},
                                        {"0010", 1 / s6},
                                        {"0001", 1 / s6}});
    auto mx = only_monomial("1111,1000,0100,0010,0001");
    ASSERT_NEAR(evaluate(mx, x).real(), 2.0 / 216, 1e-15);
    ASSERT_NEAR(evaluate(mx, x).imag(), 0, 1e-15);
}

TEST(evaluate_exact, agrees_with_floating_point) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> num(-9, 9);
    for (int trial = 0; trial < 100; trial++) {
        Support s = oracle::random_support(rng, 4, 8);
        auto catalog = enumerate_circuits(s);
        std::map<uint64_t, GaussianRational> exact;
        std::map<uint64_t, std::complex<double>> approx;
        for (uint64_t l : s.labels()) {
            GaussianRational c{Rational(num(rng), 7), Rational(num(rng) | 1, 5)};
            c.re.canonicalize();
            c.im.canonicalize();
            exact[l] = c;
            approx[l] = {c.re.get_d(), c.im.get_d()};
        }
        PureState psi(s.num_qubits(), approx);
        for (const auto &c : catalog.circuits) {
            auto m = monomial_from_circuit(c);
            auto e = evaluate_exact(m, exact);
            std::complex<double> ed(e.re.get_d(), e.im.get_d());
            ASSERT_LE(oracle::rel_err(evaluate(m, psi), ed), 1e-12);
        }
    }
}

TEST(bidegree_scaling_check, examples) {
    double a = 1 / std::sqrt(2.0);
    auto bell = PureState::from_labels(2, {{"00", a}, {"11", a}});
    auto m = only_monomial("00,11");
    ASSERT_TRUE(bidegree_scaling_check(m, bell, 1.0));
    ASSERT_TRUE(bidegree_scaling_check(m, bell, 2.0));
    ASSERT_LE(oracle::rel_err(evaluate(m, bell.scaled(2.0)), 4.0 * evaluate(m, bell)), 1e-15);

    auto mixed = only_monomial("000,110,100,010");
    auto psi = PureState::from_labels(3, {{"000", 0.5}, {"110", 0.5}, {"100", 0.5}, {"010", 0.5}});
    std::complex<double> i(0, 1);
    ASSERT_TRUE(bidegree_scaling_check(mixed, psi, i));
    ASSERT_LE(oracle::rel_err(evaluate(mixed, psi.scaled(i)), evaluate(mixed, psi)), 1e-15);
}

TEST(bidegree_scaling_check, random) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; trial++) {
        Support s = oracle::random_support(rng, 6, 12);
        PureState psi = oracle::random_state(rng, s);
        std::complex<double> lambda = oracle::random_complex(rng) * 2.0;
        for (const auto &c : enumerate_circuits(s).circuits) {
            ASSERT_TRUE(bidegree_scaling_check(monomial_from_circuit(c), psi, lambda));
        }
        for (const auto &m : abs_square_generators(s)) {
            ASSERT_TRUE(bidegree_scaling_check(m, psi, lambda));
        }
    }
}

TEST(single_sl_generator_check, examples) {
    auto ghz4 = single_sl_generator_check(enumerate_circuits(Support::parse("0000,1111")));
    ASSERT_TRUE(ghz4.hypothesis_holds);
    ASSERT_EQ(*ghz4.generator_bidegree, (Bidegree{2, 0}));

    auto x = single_sl_generator_check(enumerate_circuits(Support::parse("1111,1000,0100,0010,0001")));
    ASSERT_TRUE(x.hypothesis_holds);
    ASSERT_EQ(*x.generator_bidegree, (Bidegree{6, 0}));

    auto many = single_sl_generator_check(enumerate_circuits(Support::parse("0000,1111,0011,1100")));
    ASSERT_FALSE(many.hypothesis_holds);
    ASSERT_GE(many.circuit_count, 2u);
    ASSERT_FALSE(many.generator_bidegree.has_value());

    auto mixed = single_sl_generator_check(enumerate_circuits(Support::parse("000,110,100,010")));
    ASSERT_FALSE(mixed.hypothesis_holds);
}

TEST(invariance, circuit_monomials_under_group) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; trial++) {
        Support s = oracle::random_support(rng, 5, 10);
        auto g = solve_symmetry_group(s);
        auto circuits = enumerate_circuits(s).circuits;
        for (int k = 0; k < 50; k++) {
            PureState psi = oracle::random_state(rng, s);
            for (const auto &c : circuits) {
                auto m = monomial_from_circuit(c);
                auto v = evaluate(m, psi);
                for (const auto &f : g.finite) {
                    ASSERT_LE(oracle::rel_err(evaluate(m, apply_phase_element(f.generator, psi)), v), 1e-10);
                }
                std::vector<double> point(s.num_qubits() + 1, 0);
                for (const auto &d : g.torus_basis) {
                    double t = std::uniform_real_distribution<double>(0, 1)(rng);
                    for (size_t i = 0; i < point.size(); i++) {
                        point[i] += t * d[i].get_d();
                    }
                }
                ASSERT_LE(oracle::rel_err(evaluate(m, apply_phase_turns(point, psi)), v), 1e-10);
            }
        }
    }
}

TEST(invariance, symmetrized_sums_under_flips) {
    std::mt19937_64 rng(44);
    int admitted = 0;
    for (int trial = 0; trial < 200; trial++) {
        // Close a random seed set under a random flip group so the stabilizer
        // is nontrivial.
        size_t n = std::uniform_int_distribution<size_t>(2, 5)(rng);
        auto seeds = oracle::random_labels(rng, n, 3);
        std::vector<uint64_t> masks{0};
        for (int g = 0; g < 2; g++) {
            uint64_t m = rng() & ((uint64_t{1} << n) - 1);
            size_t old = masks.size();
            for (size_t i = 0; i < old; i++) {
                masks.push_back(masks[i] ^ m);
            }
        }
        std::set<uint64_t> labels;
        for (uint64_t s : seeds) {
            for (uint64_t m : masks) {
                labels.insert(s ^ m);
            }
        }
        Support s(n, {labels.begin(), labels.end()});
        auto flips = support_stabilizer_masks(s);
        ASSERT_TRUE(flips.elements.has_value());
        PureState psi = oracle::random_state(rng, s);
        for (const auto &c : enumerate_circuits(s).circuits) {
            auto sym = symmetrize_over_flips(monomial_from_circuit(c), *flips.elements);
            if (auto *sum = std::get_if<InvariantSum>(&sym)) {
                admitted++;
                auto v = evaluate(*sum, psi);
                for (uint64_t m : *flips.elements) {
                    ASSERT_LE(oracle::rel_err(evaluate(*sum, psi.permuted_by_mask(m)), v), 1e-10);
                    ASSERT_LE(oracle::rel_err(evaluate(*sum, su2_flip(psi, m)), v), 1e-10);
                }
            }
        }
    }
    ASSERT_GT(admitted, 50);
}

TEST(genericity, circuit_monomials_nonzero) {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 200; trial++) {
        Support s = oracle::random_support(rng, 6, 12);
        PureState psi = oracle::random_state(rng, s);
        for (const auto &c : enumerate_circuits(s).circuits) {
            ASSERT_GT(std::abs(evaluate(monomial_from_circuit(c), psi)), 0);
        }
    }
}

TEST(bidegrees_consistent_with_theta, holds_for_solved_groups) {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 200; trial++) {
        Support s = oracle::random_support(rng, 6, 12);
        auto g = solve_symmetry_group(s);
        auto catalog = enumerate_circuits(s);
        ASSERT_TRUE(bidegrees_consistent_with_theta(g.theta_continuous(), catalog)) << s.str();
        if (g.theta_continuous()) {
            for (const auto &c : catalog.circuits) {
                auto b = monomial_from_circuit(c).bidegree();
                ASSERT_EQ(b.a, b.b);
            }
        }
    }
    auto w = enumerate_circuits(Support::parse("00,11"));
    ASSERT_FALSE(bidegrees_consistent_with_theta(true, w));
}
