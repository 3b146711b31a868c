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

#ifndef LUSYM_INVARIANTS_H
#define LUSYM_INVARIANTS_H

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lusym/circuits.h"
#include "lusym/exact_linalg.h"
#include "lusym/state.h"

namespace lusym {

struct MonomialTerm {
    uint64_t label = 0;
    unsigned plain_exponent = 0;
    unsigned conjugate_exponent = 0;

    bool operator==(const MonomialTerm &) const = default;
};

/// prod_j c_j^{plain_j} (c_j^*)^{conj_j}, kept factored. Terms are sorted by
/// label and never have both exponents zero.
class InvariantMonomial {
   public:
    InvariantMonomial(size_t n, std::vector<MonomialTerm> terms);

    size_t num_qubits() const { return n_; }
    const std::vector<MonomialTerm> &terms() const { return terms_; }
    Bidegree bidegree() const { return bidegree_; }
    std::string str() const;

    bool operator==(const InvariantMonomial &) const = default;

   private:
    size_t n_;
    std::vector<MonomialTerm> terms_;
    Bidegree bidegree_;
};

/// Sum of the distinct spin-flip images of one monomial.
struct InvariantSum {
    std::vector<InvariantMonomial> monomials;
    std::vector<uint64_t> flip_group;

    Bidegree bidegree() const { return monomials.front().bidegree(); }
};

/// Returned instead of an InvariantSum when an odd-weight flip meets a
/// bidegree with a - b not divisible by four.
struct FlipRejection {
    uint64_t mask = 0;
    Bidegree bidegree;
    std::string reason;
};

/// Integer combination of monomials (used for the balance defects).
struct InvariantPolynomial {
    struct Term {
        long coefficient;
        InvariantMonomial monomial;
    };
    std::vector<Term> terms;
};

InvariantMonomial monomial_from_circuit(const BalancedCircuit &circuit);

/// |c_j|^2 for every label of the support.
std::vector<InvariantMonomial> abs_square_generators(const Support &support);

/// Bidegree (a, b) with a == 0 or b == 0.
bool is_sl_type(const InvariantMonomial &m);

InvariantMonomial flip_monomial(const InvariantMonomial &m, uint64_t mask);

std::variant<InvariantSum, FlipRejection> symmetrize_over_flips(const InvariantMonomial &m,
                                                                const std::vector<uint64_t> &flip_group);

std::complex<double> evaluate(const InvariantMonomial &m, const PureState &psi);
std::complex<double> evaluate(const InvariantSum &s, const PureState &psi);
std::complex<double> evaluate(const InvariantPolynomial &p, const PureState &psi);

/// Exact amplitude x + i y with rational parts.
struct GaussianRational {
    Rational re = 0;
    Rational im = 0;

    GaussianRational conj() const { return {re, -im}; }
    GaussianRational operator*(const GaussianRational &o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianRational &) const = default;
};

/// Exact evaluation for amplitudes given as Gaussian rationals. Labels not in
/// the map have amplitude zero.
GaussianRational evaluate_exact(const InvariantMonomial &m, const std::map<uint64_t, GaussianRational> &amplitudes);

/// evaluate(m, lambda psi) == lambda^a conj(lambda)^b evaluate(m, psi) within
/// a relative tolerance.
bool bidegree_scaling_check(const InvariantMonomial &m, const PureState &psi, std::complex<double> lambda,
                            double rel_tol = 1e-10);

struct SingleGeneratorReport {
    size_t circuit_count = 0;
    bool hypothesis_holds = false;
    /// (d, 0) when the hypothesis holds; SL-type bidegrees on the stratum are (r d, 0).
    std::optional<Bidegree> generator_bidegree;
    std::string detail;
};

/// With continuous theta every invariant has bidegree (a, a), so every circuit
/// must have d_order == 0. Returns false when that fails.
bool bidegrees_consistent_with_theta(bool theta_continuous, const CircuitCatalog &catalog);

/// Checks for exactly one circuit, positive, with an SL-type monomial.
SingleGeneratorReport single_sl_generator_check(const CircuitCatalog &catalog);

}  // namespace lusym

#endif
