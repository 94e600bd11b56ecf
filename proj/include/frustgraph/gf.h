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

#ifndef FRUSTGRAPH_GF_H
#define FRUSTGRAPH_GF_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace frustgraph {

/// A vector over Z_d. Entries are always kept in [0, d).
using ZdVector = std::vector<uint32_t>;

bool is_prime(uint64_t n);

/// Throws NotPrime unless d is a prime number.
void require_prime(uint32_t d);

/// Reduces a signed integer into [0, d).
inline uint32_t mod_reduce(int64_t value, uint32_t d) {
    int64_t r = value % (int64_t)d;
    return (uint32_t)(r < 0 ? r + d : r);
}

/// Multiplicative inverse of a in Z_d. Throws ZeroInverse when a is 0 mod d.
uint32_t inverse_mod(uint32_t a, uint32_t d);

/// An element of the prime field Z_d.
class GFScalar {
   public:
    GFScalar(int64_t value, uint32_t modulus);

    uint32_t value() const noexcept {
        return value_;
    }
    uint32_t modulus() const noexcept {
        return modulus_;
    }

    bool operator==(const GFScalar &other) const = default;

   private:
    uint32_t value_;
    uint32_t modulus_;
};

GFScalar field_inverse(GFScalar a);

/// Dense row-major matrix over Z_d.
class GFMatrix {
   public:
    /// Zero matrix.
    GFMatrix(size_t rows, size_t cols, uint32_t modulus);
    /// Entries may be negative; they are reduced mod `modulus`.
    GFMatrix(uint32_t modulus, std::initializer_list<std::initializer_list<int64_t>> rows);

    static GFMatrix identity(size_t n, uint32_t modulus);
    static GFMatrix from_rows(uint32_t modulus, const std::vector<std::vector<int64_t>> &rows);
    static GFMatrix from_columns(size_t rows, uint32_t modulus, const std::vector<ZdVector> &columns);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    uint32_t modulus() const noexcept {
        return modulus_;
    }

    uint32_t operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(size_t r, size_t c, int64_t value) {
        entries_[r * cols_ + c] = mod_reduce(value, modulus_);
    }
    std::span<const uint32_t> row(size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    ZdVector column(size_t c) const;

    GFMatrix transpose() const;
    /// Sub-block [r0, r0 + nr) x [c0, c0 + nc).
    GFMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;

    bool is_zero() const;
    bool is_square() const noexcept {
        return rows_ == cols_;
    }
    /// Antisymmetric mod d with a zero diagonal.
    bool is_antisymmetric() const;

    /// Entries printed as integers in [0, d), one row per line.
    std::string str() const;

    bool operator==(const GFMatrix &other) const = default;

   private:
    size_t rows_;
    size_t cols_;
    uint32_t modulus_;
    std::vector<uint32_t> entries_;
};

GFMatrix operator*(const GFMatrix &a, const GFMatrix &b);
ZdVector operator*(const GFMatrix &m, const ZdVector &v);

struct RowEchelon {
    GFMatrix reduced;
    /// Pivot column of each nonzero row of `reduced`, increasing.
    std::vector<size_t> pivot_columns;
};

/// Reduced row echelon form. Pivots are taken from the first row holding a
/// nonzero entry in the current column and normalized to 1.
RowEchelon row_reduce(const GFMatrix &m);

size_t rank(const GFMatrix &m);

/// Basis of {v : M v = 0}. One vector per free column in increasing order,
/// with that free coordinate set to 1 and the other free coordinates 0.
std::vector<ZdVector> nullspace_basis(const GFMatrix &m);

/// Throws DimensionMismatch for non-square input and Singular when the rank
/// is deficient.
GFMatrix invert(const GFMatrix &m);

}  // namespace frustgraph

#endif
