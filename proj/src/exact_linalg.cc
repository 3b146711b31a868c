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

#include "lusym/exact_linalg.h"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "lusym/errors.h"

namespace lusym {

IntMatrix::IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw InputError("ragged matrix literal");
        }
        for (long x : r) {
            data_.emplace_back(x);
        }
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

IntMatrix IntMatrix::from_columns(size_t rows, std::span<const IntVector> columns) {
    IntMatrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); c++) {
        if (columns[c].size() != rows) {
            throw InputError("column length mismatch");
        }
        for (size_t r = 0; r < rows; r++) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

IntVector IntMatrix::row(size_t r) const {
    return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(size_t c) const {
    IntVector out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

void IntMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t c = 0; c < cols_; c++) {
        std::swap((*this)(a, c), (*this)(b, c));
    }
}

void IntMatrix::swap_cols(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t r = 0; r < rows_; r++) {
        std::swap((*this)(r, a), (*this)(r, b));
    }
}

void IntMatrix::add_row_multiple(size_t dst, size_t src, const Integer &factor) {
    if (factor == 0) {
        return;
    }
    for (size_t c = 0; c < cols_; c++) {
        (*this)(dst, c) += factor * (*this)(src, c);
    }
}

void IntMatrix::add_col_multiple(size_t dst, size_t src, const Integer &factor) {
    if (factor == 0) {
        return;
    }
    for (size_t r = 0; r < rows_; r++) {
        (*this)(r, dst) += factor * (*this)(r, src);
    }
}

void IntMatrix::negate_row(size_t r) {
    for (size_t c = 0; c < cols_; c++) {
        (*this)(r, c) = -(*this)(r, c);
    }
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t r = 0; r < rows_; r++) {
        out << (r ? ", [" : "[");
        for (size_t c = 0; c < cols_; c++) {
            out << (c ? ", " : "") << (*this)(r, c).get_str();
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols() != b.rows()) {
        throw InputError("matrix product dimension mismatch");
    }
    IntMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            const Integer &x = a(r, k);
            if (x == 0) {
                continue;
            }
            for (size_t c = 0; c < b.cols(); c++) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

IntVector operator*(const IntMatrix &a, const IntVector &v) {
    if (a.cols() != v.size()) {
        throw InputError("matrix-vector dimension mismatch");
    }
    IntVector out(a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

RationalVector operator*(const IntMatrix &a, const RationalVector &v) {
    if (a.cols() != v.size()) {
        throw InputError("matrix-vector dimension mismatch");
    }
    RationalVector out(a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            if (a(r, c) != 0) {
                out[r] += Rational(a(r, c)) * v[c];
            }
        }
    }
    return out;
}

IntVector SmithDecomposition::invariant_factors() const {
    IntVector out;
    for (size_t k = 0; k < rank; k++) {
        out.push_back(D(k, k));
    }
    return out;
}

namespace {

// Position of the nonzero entry with the smallest absolute value in the
// trailing submatrix starting at (t, t). Ties go to the first in row-major order.
std::optional<std::pair<size_t, size_t>> smallest_pivot(const IntMatrix &d, size_t t) {
    std::optional<std::pair<size_t, size_t>> best;
    Integer best_abs;
    for (size_t r = t; r < d.rows(); r++) {
        for (size_t c = t; c < d.cols(); c++) {
            if (d(r, c) == 0) {
                continue;
            }
            Integer a = abs(d(r, c));
            if (!best || a < best_abs) {
                best = {r, c};
                best_abs = a;
                if (best_abs == 1) {
                    return best;
                }
            }
        }
    }
    return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix &a) {
    if (a.empty()) {
        throw InputError("smith_normal_form requires a nonempty matrix");
    }
    SmithDecomposition s{IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), a, 0};
    IntMatrix &d = s.D;
    size_t limit = std::min(a.rows(), a.cols());

    for (size_t t = 0; t < limit; t++) {
        while (true) {
            auto pivot = smallest_pivot(d, t);
            if (!pivot) {
                return s;
            }
            d.swap_rows(t, pivot->first);
            s.U.swap_rows(t, pivot->first);
            d.swap_cols(t, pivot->second);
            s.V.swap_cols(t, pivot->second);

            bool cleared = true;
            Integer q;
            for (size_t r = t + 1; r < d.rows(); r++) {
                if (d(r, t) == 0) {
                    continue;
                }
                mpz_tdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
                d.add_row_multiple(r, t, -q);
                s.U.add_row_multiple(r, t, -q);
                cleared &= d(r, t) == 0;
            }
            for (size_t c = t + 1; c < d.cols(); c++) {
                if (d(t, c) == 0) {
                    continue;
                }
                mpz_tdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
                d.add_col_multiple(c, t, -q);
                s.V.add_col_multiple(c, t, -q);
                cleared &= d(t, c) == 0;
            }
            if (!cleared) {
                continue;
            }

            // Divisibility chain: the pivot must divide the whole trailing block.
            std::optional<size_t> offending_row;
            for (size_t r = t + 1; r < d.rows() && !offending_row; r++) {
                for (size_t c = t + 1; c < d.cols(); c++) {
                    if (mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
                        offending_row = r;
                        break;
                    }
                }
            }
            if (offending_row) {
                d.add_row_multiple(t, *offending_row, 1);
                s.U.add_row_multiple(t, *offending_row, 1);
                continue;
            }

            if (d(t, t) < 0) {
                d.negate_row(t);
                s.U.negate_row(t);
            }
            s.rank = t + 1;
            break;
        }
    }
    return s;
}

namespace {

struct EchelonForm {
    std::vector<RationalVector> rows;  // reduced rows, one per pivot
    std::vector<size_t> pivot_cols;
};

EchelonForm reduced_row_echelon(const IntMatrix &a) {
    std::vector<RationalVector> m(a.rows(), RationalVector(a.cols()));
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            m[r][c] = a(r, c);
        }
    }
    EchelonForm out;
    size_t next = 0;
    for (size_t c = 0; c < a.cols() && next < m.size(); c++) {
        size_t p = next;
        while (p < m.size() && m[p][c] == 0) {
            p++;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[next], m[p]);
        Rational inv = 1 / m[next][c];
        for (auto &x : m[next]) {
            x *= inv;
        }
        for (size_t r = 0; r < m.size(); r++) {
            if (r == next || m[r][c] == 0) {
                continue;
            }
            Rational f = m[r][c];
            for (size_t k = c; k < a.cols(); k++) {
                m[r][k] -= f * m[next][k];
            }
        }
        out.pivot_cols.push_back(c);
        next++;
    }
    m.resize(next);
    out.rows = std::move(m);
    return out;
}

}  // namespace

IntVector primitive_integer_vector(const RationalVector &v) {
    Integer lcm_den = 1;
    for (const auto &x : v) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    }
    IntVector out(v.size());
    Integer g = 0;
    for (size_t k = 0; k < v.size(); k++) {
        Rational scaled = v[k] * lcm_den;
        out[k] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[k].get_mpz_t());
    }
    if (g == 0) {
        return out;
    }
    auto first = std::find_if(out.begin(), out.end(), [](const Integer &x) { return x != 0; });
    if (*first < 0) {
        g = -g;
    }
    for (auto &x : out) {
        x /= g;
    }
    return out;
}

RationalVector to_rational(const IntVector &v) {
    return RationalVector(v.begin(), v.end());
}

std::vector<IntVector> rational_kernel(const IntMatrix &a) {
    if (a.empty()) {
        throw InputError("rational_kernel requires a nonempty matrix");
    }
    EchelonForm e = reduced_row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : e.pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<IntVector> basis;
    for (size_t free = 0; free < a.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        RationalVector x(a.cols());
        x[free] = 1;
        for (size_t r = 0; r < e.rows.size(); r++) {
            x[e.pivot_cols[r]] = -e.rows[r][free];
        }
        basis.push_back(primitive_integer_vector(x));
    }
    return basis;
}

size_t rational_rank(const IntMatrix &a) {
    if (a.empty()) {
        return 0;
    }
    return reduced_row_echelon(a).pivot_cols.size();
}

Integer determinant(const IntMatrix &a) {
    if (a.rows() != a.cols()) {
        throw InputError("determinant requires a square matrix");
    }
    size_t n = a.rows();
    if (n == 0) {
        return 1;
    }
    IntMatrix m = a;
    Integer sign = 1;
    Integer prev = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (m(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m(p, k) == 0) {
                p++;
            }
            if (p == n) {
                return 0;
            }
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++) {
            for (size_t j = k + 1; j < n; j++) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool lattice_member(const IntMatrix &b, const RationalVector &v) {
    if (v.size() != b.rows()) {
        throw InputError("lattice_member: vector length " + std::to_string(v.size()) + " does not match " +
                         std::to_string(b.rows()) + " rows");
    }
    bool zero_lattice = b.empty();
    if (!zero_lattice) {
        zero_lattice = std::all_of(b.entries().begin(), b.entries().end(), [](const Integer &x) { return x == 0; });
    }
    if (zero_lattice) {
        return std::all_of(v.begin(), v.end(), [](const Rational &x) { return x == 0; });
    }
    // B x = v  <=>  D y = U v with x = V y.
    SmithDecomposition s = smith_normal_form(b);
    RationalVector w = s.U * v;
    for (size_t k = 0; k < w.size(); k++) {
        if (k < s.rank) {
            Rational q = w[k] / Rational(s.D(k, k));
            if (q.get_den() != 1) {
                return false;
            }
        } else if (w[k] != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace lusym
