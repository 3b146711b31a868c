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

#ifndef LUSYM_EXACT_LINALG_H
#define LUSYM_EXACT_LINALG_H

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lusym {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(size_t rows, std::span<const IntVector> columns);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Integer &operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Integer> entries() const { return data_; }
    IntVector row(size_t r) const;
    IntVector column(size_t c) const;
    IntMatrix transposed() const;

    void swap_rows(size_t a, size_t b);
    void swap_cols(size_t a, size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(size_t dst, size_t src, const Integer &factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(size_t dst, size_t src, const Integer &factor);
    void negate_row(size_t r);

    bool operator==(const IntMatrix &other) const = default;
    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
IntVector operator*(const IntMatrix &a, const IntVector &v);
RationalVector operator*(const IntMatrix &a, const RationalVector &v);

/// U * A * V == D with U, V unimodular and D diagonal. The nonzero diagonal
/// entries d_1 | d_2 | ... | d_rank are non-negative and come first.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix V;
    IntMatrix D;
    size_t rank = 0;

    /// The nonzero diagonal entries of D, in order.
    IntVector invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix &a);

/// Basis of {x : A x = 0} over the rationals. Each vector is scaled to
/// coprime integer entries with its first nonzero entry positive; vectors are
/// ordered by the free column they are attached to in reduced row echelon form.
std::vector<IntVector> rational_kernel(const IntMatrix &a);

/// Rank over the rationals via Gaussian elimination.
size_t rational_rank(const IntMatrix &a);

/// Bareiss fraction-free determinant. Requires a square matrix.
Integer determinant(const IntMatrix &a);

/// True iff v is an integer combination of the columns of b.
/// Throws InputError when v.size() != b.rows().
bool lattice_member(const IntMatrix &b, const RationalVector &v);

/// Scale a rational vector to coprime integers with the first nonzero
/// entry positive. The zero vector maps to the zero vector.
IntVector primitive_integer_vector(const RationalVector &v);

RationalVector to_rational(const IntVector &v);

}  // namespace lusym

#endif
