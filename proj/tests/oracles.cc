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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace lusym::oracle {

namespace {

using Q = mpq_class;
using QMatrix = std::vector<std::vector<Q>>;

QMatrix to_q(const std::vector<std::vector<long>> &rows) {
    QMatrix m;
    for (const auto &r : rows) {
        m.emplace_back(r.begin(), r.end());
    }
    return m;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(QMatrix &m) {
    std::vector<size_t> pivots;
    if (m.empty()) {
        return pivots;
    }
    size_t rows = m.size();
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) {
            p++;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        Q inv = 1 / m[r][c];
        for (auto &x : m[r]) {
            x *= inv;
        }
        for (size_t i = 0; i < rows; i++) {
            if (i != r && m[i][c] != 0) {
                Q f = m[i][c];
                for (size_t j = 0; j < cols; j++) {
                    m[i][j] -= f * m[r][j];
                }
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

// Kernel vector of the matrix whose columns are the given vectors, assuming
// the kernel is one-dimensional.
std::vector<long> one_dim_kernel(const std::vector<std::vector<long>> &vectors) {
    size_t k = vectors.size();
    size_t n = vectors[0].size();
    QMatrix m(n, std::vector<Q>(k));
    for (size_t j = 0; j < k; j++) {
        for (size_t i = 0; i < n; i++) {
            m[i][j] = vectors[j][i];
        }
    }
    auto pivots = rref(m);
    size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) {
        free_col++;
    }
    std::vector<Q> x(k, 0);
    x[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); r++) {
        x[pivots[r]] = -m[r][free_col];
    }
    mpz_class l = 1;
    for (const auto &q : x) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
    std::vector<long> z;
    for (const auto &q : x) {
        mpz_class v = q.get_num() * (l / q.get_den());
        z.push_back(v.get_si());
    }
    long g = 0;
    for (long v : z) {
        g = std::gcd(g, std::abs(v));
    }
    long sign = 1;
    for (long v : z) {
        if (v != 0) {
            sign = v > 0 ? 1 : -1;
            break;
        }
    }
    for (long &v : z) {
        v = v / g * sign;
    }
    return z;
}

}  // namespace

size_t rank(const std::vector<std::vector<long>> &rows) {
    if (rows.empty()) {
        return 0;
    }
    QMatrix m = to_q(rows);
    return rref(m).size();
}

std::vector<std::vector<long>> weight_rows(size_t n, const std::vector<uint64_t> &labels) {
    std::vector<std::vector<long>> out;
    for (uint64_t s : labels) {
        std::vector<long> v;
        for (size_t k = 0; k < n; k++) {
            v.push_back(((s >> (n - 1 - k)) & 1) ? -1 : 1);
        }
        out.push_back(v);
    }
    return out;
}

std::vector<Circuit> brute_force_circuits(const Support &support) {
    size_t n = support.num_qubits();
    size_t L = support.size();
    std::vector<uint64_t> labels(support.labels().begin(), support.labels().end());
    auto vecs = weight_rows(n, labels);
    std::vector<Circuit> out;
    for (uint64_t subset = 1; subset < (uint64_t{1} << L); subset++) {
        std::vector<size_t> idx;
        std::vector<std::vector<long>> rows;
        for (size_t j = 0; j < L; j++) {
            if ((subset >> j) & 1) {
                idx.push_back(j);
                rows.push_back(vecs[j]);
            }
        }
        if (rank(rows) == rows.size()) {
            continue;
        }
        bool minimal = true;
        for (size_t drop = 0; drop < rows.size() && minimal; drop++) {
            auto sub = rows;
            sub.erase(sub.begin() + drop);
            minimal = rank(sub) == sub.size();
        }
        if (minimal) {
            out.push_back({idx, one_dim_kernel(rows)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Circuit &a, const Circuit &b) { return a.indices < b.indices; });
    return out;
}

bool fixes_support(const RationalVector &turns, const Support &support) {
    size_t n = support.num_qubits();
    for (uint64_t s : support.labels()) {
        Q phase = turns[n];
        for (size_t k = 0; k < n; k++) {
            if ((s >> (n - 1 - k)) & 1) {
                phase -= turns[k];
            } else {
                phase += turns[k];
            }
        }
        phase.canonicalize();
        if (phase.get_den() != 1) {
            return false;
        }
    }
    return true;
}

std::vector<std::complex<double>> dense(const PureState &psi) {
    std::vector<std::complex<double>> v(size_t{1} << psi.num_qubits());
    for (const auto &[s, c] : psi.amplitudes()) {
        v[s] = c;
    }
    return v;
}

Matrix2 dense_rdm(const PureState &psi, size_t k) {
    size_t n = psi.num_qubits();
    auto v = dense(psi);
    uint64_t bit = uint64_t{1} << (n - 1 - k);
    Matrix2 rho{};
    for (uint64_t s = 0; s < v.size(); s++) {
        if (s & bit) {
            continue;
        }
        std::complex<double> c0 = v[s];
        std::complex<double> c1 = v[s | bit];
        rho[0] += c0 * std::conj(c0);
        rho[1] += c0 * std::conj(c1);
        rho[2] += c1 * std::conj(c0);
        rho[3] += c1 * std::conj(c1);
    }
    return rho;
}

std::vector<uint64_t> random_labels(std::mt19937_64 &rng, size_t n, size_t count) {
    uint64_t dim = uint64_t{1} << n;
    count = std::min<uint64_t>(count, dim);
    std::set<uint64_t> chosen;
    std::uniform_int_distribution<uint64_t> pick(0, dim - 1);
    while (chosen.size() < count) {
        chosen.insert(pick(rng));
    }
    return {chosen.begin(), chosen.end()};
}

Support random_support(std::mt19937_64 &rng, size_t max_n, size_t max_size) {
    size_t n = std::uniform_int_distribution<size_t>(1, max_n)(rng);
    size_t cap = std::min<uint64_t>(max_size, uint64_t{1} << n);
    size_t count = std::uniform_int_distribution<size_t>(1, cap)(rng);
    return Support(n, random_labels(rng, n, count));
}

std::complex<double> random_complex(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    return {u(rng), u(rng)};
}

PureState random_state(std::mt19937_64 &rng, const Support &support) {
    std::uniform_real_distribution<double> mag(0.2, 1.0);
    std::uniform_real_distribution<double> ang(0, 2 * M_PI);
    std::map<uint64_t, std::complex<double>> amps;
    double norm = 0;
    for (uint64_t s : support.labels()) {
        auto c = std::polar(mag(rng), ang(rng));
        amps[s] = c;
        norm += std::norm(c);
    }
    for (auto &[s, c] : amps) {
        c /= std::sqrt(norm);
    }
    return PureState(support.num_qubits(), amps);
}

PureState random_balanced_state(std::mt19937_64 &rng, const Support &support, size_t k) {
    size_t n = support.num_qubits();
    uint64_t bit = uint64_t{1} << (n - 1 - k);
    PureState base = random_state(rng, support);
    double w0 = 0;
    double w1 = 0;
    for (const auto &[s, c] : base.amplitudes()) {
        (s & bit ? w1 : w0) += std::norm(c);
    }
    std::map<uint64_t, std::complex<double>> amps;
    for (const auto &[s, c] : base.amplitudes()) {
        amps[s] = c * std::sqrt(0.5 / (s & bit ? w1 : w0));
    }
    return PureState(n, amps);
}

IntMatrix random_matrix(std::mt19937_64 &rng, size_t max_dim, long bound) {
    std::uniform_int_distribution<size_t> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-bound, bound);
    size_t r = dim(rng);
    size_t c = dim(rng);
    IntMatrix m(r, c);
    // Mix in sparse and low-rank shapes so zero rows and repeated factors occur.
    int shape = std::uniform_int_distribution<int>(0, 3)(rng);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < c; j++) {
            long x = entry(rng);
            if (shape == 1 && (i + j) % 2 == 0) {
                x = 0;
            }
            m(i, j) = x;
        }
    }
    if (shape == 2 && r > 1) {
        for (size_t j = 0; j < c; j++) {
            m(r - 1, j) = m(0, j) * 3;
        }
    }
    if (shape == 3) {
        for (size_t i = 0; i < r; i++) {
            for (size_t j = 0; j < c; j++) {
                m(i, j) *= 6;
            }
        }
    }
    return m;
}

double rel_err(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-14});
}

}  // namespace lusym::oracle
