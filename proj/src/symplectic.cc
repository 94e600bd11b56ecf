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

#include "frustgraph/symplectic.h"

#include <utility>
#include <vector>

#include "frustgraph/error.h"

namespace frustgraph {

namespace {

void require_antisymmetric(const GFMatrix &gamma) {
    if (!gamma.is_antisymmetric()) {
        throw Error(ErrorCode::NotAntisymmetric, "gamma must be antisymmetric mod d with a zero diagonal");
    }
}

GFMatrix congruence(const GFMatrix &gamma, const GFMatrix &o) {
    return o.transpose() * gamma * o;
}

/// u^T gamma v mod d.
uint32_t form(const GFMatrix &gamma, const ZdVector &u, const ZdVector &v) {
    const uint64_t d = gamma.modulus();
    uint64_t acc = 0;
    for (size_t i = 0; i < u.size(); i++) {
        if (u[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < v.size(); j++) {
            acc = (acc + (uint64_t)u[i] * gamma(i, j) % d * v[j]) % d;
        }
    }
    return (uint32_t)acc;
}

/// w + a * u + b * v, all mod d.
ZdVector combine(const ZdVector &w, uint32_t a, const ZdVector &u, uint32_t b, const ZdVector &v, uint32_t d) {
    ZdVector out(w.size());
    for (size_t i = 0; i < w.size(); i++) {
        out[i] = (uint32_t)((w[i] + (uint64_t)a * u[i] + (uint64_t)b * v[i]) % d);
    }
    return out;
}

}  // namespace

GFMatrix canonical_block_matrix(size_t blocks, size_t k, uint32_t d) {
    GFMatrix m(k, k, d);
    for (size_t b = 0; b < blocks; b++) {
        m.set(2 * b, 2 * b + 1, -1);
        m.set(2 * b + 1, 2 * b, 1);
    }
    return m;
}

BlockReduction block_reduce(const GFMatrix &gamma) {
    require_antisymmetric(gamma);
    const size_t k = gamma.rows();
    const uint32_t d = gamma.modulus();

    std::vector<ZdVector> columns;
    for (size_t i = 0; i < k; i++) {
        columns.push_back(GFMatrix::identity(k, d).column(i));
    }

    size_t n = k == 0 ? 0 : 1;
    while (n < k) {
        GFMatrix m = congruence(gamma, GFMatrix::from_columns(k, d, columns));
        GFMatrix top_right = m.block(0, n, n, k - n);
        auto dependencies = nullspace_basis(top_right);
        if (dependencies.empty()) {
            break;
        }
        // The last nonzero coefficient sits on a free column and equals 1.
        const ZdVector &lambda = dependencies[0];
        size_t pivot = lambda.size();
        while (lambda[pivot - 1] == 0) {
            pivot--;
        }
        pivot--;
        ZdVector merged(k, 0);
        for (size_t j = 0; j < lambda.size(); j++) {
            for (size_t r = 0; r < k; r++) {
                merged[r] = (uint32_t)((merged[r] + (uint64_t)lambda[j] * columns[n + j][r]) % d);
            }
        }
        columns[n + pivot] = std::move(merged);
        std::swap(columns[n], columns[n + pivot]);
        n++;
    }

    GFMatrix transform = GFMatrix::from_columns(k, d, columns);
    GFMatrix m = congruence(gamma, transform);
    const size_t mcols = k - n;
    BlockReduction out{transform, n, m.block(0, n, n, mcols), m.block(n, n, mcols, mcols)};
    if (!m.block(0, 0, n, n).is_zero() || rank(out.d_block) != mcols || n - mcols != k - rank(gamma)) {
        throw Error(ErrorCode::Internal, "block reduction post-condition failed");
    }
    return out;
}

CanonicalForm canonical_form(const GFMatrix &gamma) {
    require_antisymmetric(gamma);
    const size_t k = gamma.rows();
    const uint32_t d = gamma.modulus();

    std::vector<ZdVector> kernel = nullspace_basis(gamma);

    // Complete the kernel to a basis with the lowest-index unit vectors.
    std::vector<ZdVector> pending;
    {
        std::vector<ZdVector> spanned = kernel;
        for (size_t i = 0; i < k && spanned.size() < k; i++) {
            ZdVector e(k, 0);
            e[i] = 1;
            spanned.push_back(e);
            if (rank(GFMatrix::from_columns(k, d, spanned)) == spanned.size()) {
                pending.push_back(std::move(e));
            } else {
                spanned.pop_back();
            }
        }
    }

    std::vector<ZdVector> columns;
    while (!pending.empty()) {
        ZdVector u = pending.front();
        size_t partner = 0;
        uint32_t f = 0;
        for (size_t j = 1; j < pending.size(); j++) {
            f = form(gamma, u, pending[j]);
            if (f != 0) {
                partner = j;
                break;
            }
        }
        if (partner == 0) {
            throw Error(ErrorCode::Internal, "complement of the kernel is degenerate");
        }
        ZdVector v = pending[partner];
        if (f == 1) {
            std::swap(u, v);
        } else if (f != d - 1) {
            uint32_t scale = mod_reduce(-(int64_t)inverse_mod(f, d), d);
            for (auto &x : v) {
                x = (uint32_t)((uint64_t)x * scale % d);
            }
        }
        // Now u^T gamma v = -1. Remove the pair from every other direction.
        std::vector<ZdVector> rest;
        for (size_t j = 1; j < pending.size(); j++) {
            if (j == partner) {
                continue;
            }
            const ZdVector &w = pending[j];
            uint32_t a = mod_reduce(-(int64_t)form(gamma, v, w), d);
            uint32_t b = form(gamma, u, w);
            rest.push_back(combine(w, a, u, b, v, d));
        }
        columns.push_back(std::move(u));
        columns.push_back(std::move(v));
        pending = std::move(rest);
    }

    const size_t blocks = columns.size() / 2;
    for (auto &w : kernel) {
        columns.push_back(std::move(w));
    }
    GFMatrix transform = k == 0 ? GFMatrix(0, 0, d) : GFMatrix::from_columns(k, d, columns);
    if (rank(transform) != k || congruence(gamma, transform) != canonical_block_matrix(blocks, k, d)) {
        throw Error(ErrorCode::Internal, "canonical form post-condition failed");
    }
    return {std::move(transform), blocks, k - 2 * blocks};
}

}  // namespace frustgraph
