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

#ifndef FRUSTGRAPH_GROUP_H
#define FRUSTGRAPH_GROUP_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "frustgraph/gf.h"
#include "frustgraph/pauli.h"

namespace frustgraph {

constexpr size_t kCliqueVertexCap = 256;
constexpr size_t kColoringVertexCap = 64;

/// Exponent vector I in Z_d^k labelling A_I = alpha_I prod_i T_i^{I_i}.
using GroupElementIndex = ZdVector;

/// d^e, throwing TooLarge if it does not fit in 64 bits.
uint64_t checked_pow(uint64_t d, uint64_t e);

/// A group <T_1, ..., T_k> described by its generating-graph matrix gamma and,
/// optionally, concrete Pauli generators.
class GroupSpec {
   public:
    /// Throws NotAntisymmetric unless gamma is antisymmetric with zero diagonal.
    static GroupSpec from_gamma(GFMatrix gamma);
    /// gamma is computed from the generators. An empty list is the trivial group.
    static GroupSpec from_generators(uint32_t d, size_t n_sites, std::vector<PauliOperator> generators);

    uint32_t d() const noexcept {
        return gamma_.modulus();
    }
    size_t k() const noexcept {
        return gamma_.rows();
    }
    const GFMatrix &gamma() const noexcept {
        return gamma_;
    }
    bool has_generators() const noexcept {
        return generators_.has_value();
    }
    /// Throws DimensionMismatch for an abstract spec.
    const std::vector<PauliOperator> &generators() const;
    size_t n_sites() const;

    /// d^k.
    uint64_t order() const;

    /// canonical_unit_phase(prod_i T_i^{I_i}). Requires concrete generators.
    PauliOperator element(const GroupElementIndex &index) const;

   private:
    GroupSpec(GFMatrix gamma, std::optional<std::vector<PauliOperator>> generators, size_t n_sites);

    GFMatrix gamma_;
    std::optional<std::vector<PauliOperator>> generators_;
    size_t n_sites_;
};

/// Pairwise commutator exponents of the generators.
GFMatrix generating_graph(uint32_t d, const std::vector<PauliOperator> &generators);
/// Throws DimensionMismatch on an empty list (d is unknown).
GFMatrix generating_graph(const std::vector<PauliOperator> &generators);

/// Gamma_{I,J} = sum_{i,j} I_i J_j gamma_{i,j} mod d.
GFScalar frustration_exponent(const GroupElementIndex &i, const GroupElementIndex &j, const GFMatrix &gamma);

/// All of Z_d^k in lexicographic order.
std::vector<GroupElementIndex> enumerate_indices(uint32_t d, size_t k);

/// Simple undirected graph stored as adjacency bit rows.
class CommutationGraph {
   public:
    explicit CommutationGraph(size_t vertex_count);

    /// Builds a graph from an explicit edge list (unlabelled vertices).
    static CommutationGraph from_edges(size_t vertex_count, const std::vector<std::pair<size_t, size_t>> &edges);

    size_t vertex_count() const noexcept {
        return n_;
    }
    bool adjacent(size_t u, size_t v) const {
        return (rows_[u][v >> 6] >> (v & 63)) & 1;
    }
    void add_edge(size_t u, size_t v);
    size_t degree(size_t v) const;
    size_t edge_count() const;

    /// Element labels when built from a group; empty otherwise.
    const std::vector<GroupElementIndex> &labels() const noexcept {
        return labels_;
    }
    void set_labels(std::vector<GroupElementIndex> labels);

    const std::vector<uint64_t> &adjacency_row(size_t v) const {
        return rows_[v];
    }

   private:
    size_t n_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<GroupElementIndex> labels_;
};

/// Vertices are all d^k indices in lexicographic order; I ~ J iff I != J and
/// Gamma_{I,J} = 0. Throws TooLarge when d^k exceeds vertex_cap.
CommutationGraph commutation_graph(const GroupSpec &spec, size_t vertex_cap = kCliqueVertexCap);

/// The indices of C(A): the span of ker(gamma), sorted lexicographically.
std::vector<GroupElementIndex> central_subgroup_indices(const GroupSpec &spec);

/// d^((null(gamma) + k) / 2). Throws InternalParity if null + k is odd.
uint64_t clique_number(const GroupSpec &spec);

/// Exact maximum clique by branch and bound with greedy-coloring bounds.
size_t clique_number_bruteforce(const CommutationGraph &graph, size_t vertex_cap = kCliqueVertexCap);

/// Exact chromatic number by DSATUR backtracking, seeded with the clique
/// number as a lower bound.
size_t chromatic_number_exact(const CommutationGraph &graph, size_t vertex_cap = kColoringVertexCap);

/// Upper bound on sum_A |<A>|^2; equals clique_number(spec).
uint64_t sos_bound(const GroupSpec &spec);

/// Upper bound on sum_A <A> + <A^dagger> for odd d:
/// 2 * clique * ((1 + sqrt d) / 2)^(rank(gamma) / 2). Throws EvenDimension for d = 2.
double sum_bound(const GroupSpec &spec);

}  // namespace frustgraph

#endif
