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

#ifndef LUSYM_STATE_H
#define LUSYM_STATE_H

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lusym/exact_linalg.h"

namespace lusym {

/// Qubit counts above this do not fit a label in one 64-bit word.
inline constexpr size_t kMaxQubits = 62;

/// Amplitudes with smaller modulus are rejected on construction.
inline constexpr double kAmplitudeZeroThreshold = 1e-12;

/// Computational basis label |s_1 ... s_n>.
///
/// Qubit 0 is the leftmost written bit, which is stored as the most
/// significant of the n low bits. Sorting labels as unsigned integers
/// therefore matches sorting their bit strings.
class BasisLabel {
   public:
    BasisLabel(size_t n, uint64_t bits);
    static BasisLabel parse(std::string_view bits);

    size_t num_qubits() const { return n_; }
    uint64_t bits() const { return bits_; }
    /// s_k for qubit k (0-based from the left).
    bool bit(size_t k) const { return (bits_ >> (n_ - 1 - k)) & 1; }
    std::string str() const;

    auto operator<=>(const BasisLabel &) const = default;

   private:
    size_t n_;
    uint64_t bits_;
};

/// Mask with only qubit k set, in the BasisLabel bit layout.
inline uint64_t qubit_mask(size_t n, size_t k) { return uint64_t{1} << (n - 1 - k); }

std::string label_string(size_t n, uint64_t bits);

/// Entry k is (-1)^{s_k}.
std::vector<int> weight_vector(const BasisLabel &label);

/// Nonempty set of distinct labels, stored in ascending order. The position of
/// a label in this order is its index j.
class Support {
   public:
    Support(size_t n, std::vector<uint64_t> labels);
    static Support parse(std::string_view comma_separated);
    static Support full(size_t n);

    size_t num_qubits() const { return n_; }
    size_t size() const { return labels_.size(); }
    std::span<const uint64_t> labels() const { return labels_; }
    BasisLabel label(size_t j) const { return BasisLabel(n_, labels_[j]); }
    bool contains(uint64_t bits) const;
    Support subset(std::span<const size_t> indices) const;
    std::string str() const;

    bool operator==(const Support &) const = default;

   private:
    size_t n_;
    std::vector<uint64_t> labels_;
};

/// Sparse pure state. Only nonzero amplitudes are stored.
class PureState {
   public:
    using Amplitude = std::complex<double>;

    PureState(size_t n, std::map<uint64_t, Amplitude> amplitudes);
    static PureState from_labels(size_t n, const std::vector<std::pair<std::string, Amplitude>> &terms);

    size_t num_qubits() const { return n_; }
    const std::map<uint64_t, Amplitude> &amplitudes() const { return amplitudes_; }
    /// Amplitude of a label, zero when the label is not in the support.
    Amplitude amplitude(uint64_t bits) const;
    Support support() const;
    double norm_squared() const;
    bool is_normalized(double tol) const;

    /// Amplitudes relabeled by XOR with mask (an X flip on every masked qubit).
    PureState permuted_by_mask(uint64_t mask) const;
    PureState scaled(Amplitude factor) const;

   private:
    size_t n_;
    std::map<uint64_t, Amplitude> amplitudes_;
};

/// Group angle stored as an exact fraction of a full turn, reduced into [0, 1).
class Angle {
   public:
    Angle() = default;
    explicit Angle(const Rational &turns);
    Angle(long num, long den) : Angle(Rational(num, den)) {}

    const Rational &turns() const { return turns_; }
    Integer num() const { return turns_.get_num(); }
    Integer den() const { return turns_.get_den(); }
    double radians() const;

    bool operator==(const Angle &other) const { return turns_ == other.turns_; }

   private:
    Rational turns_ = 0;
};

/// One diagonal group element e^{i phi_1 Z} x ... x e^{i phi_n Z} x e^{i theta}.
struct PhaseVector {
    std::vector<Angle> phis;
    Angle theta;

    size_t num_qubits() const { return phis.size(); }
    /// (phi_1, ..., phi_n, theta) in turns.
    RationalVector as_turns() const;
    static PhaseVector from_turns(const RationalVector &turns);
    bool operator==(const PhaseVector &) const = default;
};

/// Exact phase acquired by a basis label, sum_k phi_k (-1)^{s_k} + theta, in turns.
Rational phase_turns(const PhaseVector &g, uint64_t label_bits);

struct Bidegree {
    unsigned a = 0;
    unsigned b = 0;

    Bidegree operator+(const Bidegree &o) const { return {a + o.a, b + o.b}; }
    auto operator<=>(const Bidegree &) const = default;
};

/// Multiplies every amplitude c_j by exp(i (sum_k phi_k (-1)^{s_jk} + theta)).
/// The exponent is reduced modulo one turn exactly before conversion.
PureState apply_phase_element(const PhaseVector &g, const PureState &psi);

/// Same, for a real torus point (phi_1..phi_n, theta) given in turns.
PureState apply_phase_turns(std::span<const double> turns, const PureState &psi);

/// 2x2 reduced density matrix of qubit k in row-major order.
using Matrix2 = std::array<std::complex<double>, 4>;

/// Partial trace over every qubit but k. Throws InputError when psi is not
/// normalized within `norm_tol`.
Matrix2 reduced_density_matrix(const PureState &psi, size_t k, double norm_tol = 1e-9);

}  // namespace lusym

#endif
