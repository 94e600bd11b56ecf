// Copyright 2026 The frustgraph Authors
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

#include "frustgraph/gf.h"

#include <sstream>
#include <utility>

#include "frustgraph/error.h"

namespace frustgraph {

bool is_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

void require_prime(uint32_t d) {
    if (!is_prime(d)) {
        throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(d) + " is not prime");
    }
}

uint32_t inverse_mod(uint32_t a, uint32_t d) {
    a %= d;
    if (a == 0) {
        throw Error(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(d));
    }
    int64_t r0 = d, r1 = a;
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    return mod_reduce(t0, d);
}

GFScalar::GFScalar(int64_t value, uint32_t modulus) : value_(0), modulus_(modulus) {
    require_prime(modulus);
    value_ = mod_reduce(value, modulus);
}

GFScalar field_inverse(GFScalar a) {
    return GFScalar(inverse_mod(a.value(), a.modulus()), a.modulus());
}

GFMatrix::GFMatrix(size_t rows, size_t cols, uint32_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(rows * cols, 0) {
    require_prime(modulus);
}

GFMatrix::GFMatrix(uint32_t modulus, std::initializer_list<std::initializer_list<int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), modulus_(modulus) {
    require_prime(modulus);
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        }
        for (int64_t v : row) {
            entries_.push_back(mod_reduce(v, modulus));
        }
    }
}

GFMatrix GFMatrix::identity(size_t n, uint32_t modulus) {
    GFMatrix m(n, n, modulus);
    for (size_t i = 0; i < n; i++) {
        m.entries_[i * n + i] = 1 % modulus;
    }
    return m;
}

GFMatrix GFMatrix::from_rows(uint32_t modulus, const std::vector<std::vector<int64_t>> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    GFMatrix m(rows.size(), cols, modulus);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        }
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

GFMatrix GFMatrix::from_columns(size_t rows, uint32_t modulus, const std::vector<ZdVector> &columns) {
    GFMatrix m(rows, columns.size(), modulus);
    for (size_t c = 0; c < columns.size(); c++) {
        if (columns[c].size() != rows) {
            throw Error(ErrorCode::DimensionMismatch, "column length does not match row count");
        }
        for (size_t r = 0; r < rows; r++) {
            m.set(r, c, columns[c][r]);
        }
    }
    return m;
}

ZdVector GFMatrix::column(size_t c) const {
    ZdVector out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

GFMatrix GFMatrix::transpose() const {
    GFMatrix t(cols_, rows_, modulus_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.entries_[c * rows_ + r] = (*this)(r, c);
        }
    }
    return t;
}

GFMatrix GFMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw Error(ErrorCode::DimensionMismatch, "block exceeds matrix bounds");
    }
    GFMatrix b(nr, nc, modulus_);
    for (size_t r = 0; r < nr; r++) {
        for (size_t c = 0; c < nc; c++) {
            b.entries_[r * nc + c] = (*this)(r0 + r, c0 + c);
        }
    }
    return b;
}

bool GFMatrix::is_zero() const {
    for (uint32_t v : entries_) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

bool GFMatrix::is_antisymmetric() const {
    if (!is_square()) {
        return false;
    }
    for (size_t i = 0; i < rows_; i++) {
        if ((*this)(i, i) != 0) {
            return false;
        }
        for (size_t j = i + 1; j < cols_; j++) {
            if (((*this)(i, j) + (*this)(j, i)) % modulus_ != 0) {
                return false;
            }
        }
    }
    return true;
}

std::string GFMatrix::str() const {
    std::stringstream out;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (c) {
                out << ' ';
            }
            out << (*this)(r, c);
        }
        out << '\n';
    }
    return out.str();
}

GFMatrix operator*(const GFMatrix &a, const GFMatrix &b) {
    if (a.modulus() != b.modulus() || a.cols() != b.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "incompatible matrix product");
    }
    uint64_t d = a.modulus();
    GFMatrix out(a.rows(), b.cols(), a.modulus());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < b.cols(); c++) {
            uint64_t acc = 0;
            for (size_t i = 0; i < a.cols(); i++) {
                acc = (acc + (uint64_t)a(r, i) * b(i, c)) % d;
            }
            out.set(r, c, (int64_t)acc);
        }
    }
    return out;
}

ZdVector operator*(const GFMatrix &m, const ZdVector &v) {
    if (m.cols() != v.size()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
    }
    uint64_t d = m.modulus();
    ZdVector out(m.rows(), 0);
    for (size_t r = 0; r < m.rows(); r++) {
        uint64_t acc = 0;
        for (size_t c = 0; c < m.cols(); c++) {
            acc = (acc + (uint64_t)m(r, c) * v[c]) % d;
        }
        out[r] = (uint32_t)acc;
    }
    return out;
}

RowEchelon row_reduce(const GFMatrix &m) {
    const uint64_t d = m.modulus();
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    std::vector<std::vector<uint32_t>> a(rows);
    for (size_t r = 0; r < rows; r++) {
        a[r].assign(m.row(r).begin(), m.row(r).end());
    }

    std::vector<size_t> pivots;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; col++) {
        size_t found = rows;
        for (size_t r = pivot_row; r < rows; r++) {
            if (a[r][col] != 0) {
                found = r;
                break;
            }
        }
        if (found == rows) {
            continue;
        }
        std::swap(a[pivot_row], a[found]);
        uint64_t inv = inverse_mod(a[pivot_row][col], (uint32_t)d);
        for (size_t c = col; c < cols; c++) {
            a[pivot_row][c] = (uint32_t)(a[pivot_row][c] * inv % d);
        }
        for (size_t r = 0; r < rows; r++) {
            if (r == pivot_row || a[r][col] == 0) {
                continue;
            }
            uint64_t factor = d - a[r][col];
            for (size_t c = col; c < cols; c++) {
                a[r][c] = (uint32_t)((a[r][c] + factor * a[pivot_row][c]) % d);
            }
        }
        pivots.push_back(col);
        pivot_row++;
    }

    GFMatrix reduced(rows, cols, m.modulus());
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            reduced.set(r, c, a[r][c]);
        }
    }
    return {std::move(reduced), std::move(pivots)};
}

size_t rank(const GFMatrix &m) {
    return row_reduce(m).pivot_columns.size();
}

std::vector<ZdVector> nullspace_basis(const GFMatrix &m) {
    RowEchelon ech = row_reduce(m);
    const uint32_t d = m.modulus();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : ech.pivot_columns) {
        is_pivot[c] = true;
    }

    std::vector<ZdVector> basis;
    for (size_t free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        ZdVector v(m.cols(), 0);
        v[free] = 1 % d;
        for (size_t i = 0; i < ech.pivot_columns.size(); i++) {
            v[ech.pivot_columns[i]] = mod_reduce(-(int64_t)ech.reduced(i, free), d);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

GFMatrix invert(const GFMatrix &m) {
    if (!m.is_square()) {
        throw Error(ErrorCode::DimensionMismatch, "cannot invert a non-square matrix");
    }
    const size_t n = m.rows();
    if (n == 0) {
        return m;
    }
    GFMatrix augmented(n, 2 * n, m.modulus());
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            augmented.set(r, c, m(r, c));
        }
        augmented.set(r, n + r, 1);
    }
    RowEchelon ech = row_reduce(augmented);
    if (ech.pivot_columns.size() < n || ech.pivot_columns[n - 1] >= n) {
        throw Error(ErrorCode::Singular, "matrix is singular mod " + std::to_string(m.modulus()));
    }
    return ech.reduced.block(0, n, n, n);
}

}  // namespace frustgraph
