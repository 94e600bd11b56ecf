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

#ifndef FRUSTGRAPH_SYMPLECTIC_H
#define FRUSTGRAPH_SYMPLECTIC_H

#include <cstddef>

#include "frustgraph/gf.h"

namespace frustgraph {

/// O^T gamma O = [[0, D], [-D^T, E]] with an n x n zero block and D (n x m)
/// of full column rank. n - m = null(gamma).
struct BlockReduction {
    GFMatrix transform;
    size_t zero_block;
    GFMatrix d_block;
    GFMatrix e_block;
};

/// Grows the zero block one dependent column at a time: a column of D that
/// depends on the others is cancelled by a column operation and moved to the
/// front of D. Throws NotAntisymmetric.
BlockReduction block_reduce(const GFMatrix &gamma);

/// O^T gamma O = [[0,-1],[1,0]]^{(+) blocks} (+) 0_{residual_dim}.
struct CanonicalForm {
    GFMatrix transform;
    size_t blocks;
    size_t residual_dim;
};

/// Symplectic Gram-Schmidt. Kernel directions of gamma go to the trailing
/// residual block; the remaining directions are paired lowest index first.
/// The result is checked against `canonical_block_matrix` before returning.
/// Throws NotAntisymmetric.
CanonicalForm canonical_form(const GFMatrix &gamma);

/// The k x k target matrix with `blocks` copies of [[0,-1],[1,0]] followed by zeros.
GFMatrix canonical_block_matrix(size_t blocks, size_t k, uint32_t d);

}  // namespace frustgraph

#endif
