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

#include "frustgraph/group.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "frustgraph/error.h"

namespace frustgraph {

uint64_t checked_pow(uint64_t d, uint64_t e) {
    uint64_t result = 1;
    for (uint64_t i = 0; i < e; i++) {
        if (d != 0 && result > UINT64_MAX / d) {
            throw Error(ErrorCode::TooLarge, std::to_string(d) + "^" + std::to_string(e) + " overflows 64 bits");
        }
        result *= d;
    }
    return result;
}

GroupSpec::GroupSpec(GFMatrix gamma, std::optional<std::vector<PauliOperator>> generators, size_t n_sites)
    : gamma_(std::move(gamma)), generators_(std::move(generators)), n_sites_(n_sites) {
}

GroupSpec GroupSpec::from_gamma(GFMatrix gamma) {
    if (!gamma.is_antisymmetric()) {
        throw Error(ErrorCode::NotAntisymmetric, "gamma must be antisymmetric mod d with a zero diagonal");
    }
    return GroupSpec(std::move(gamma), std::nullopt, 0);
}

GroupSpec GroupSpec::from_generators(uint32_t d, size_t n_sites, std::vector<PauliOperator> generators) {
    for (const auto &g : generators) {
        if (g.d() != d || g.n_sites() != n_sites) {
            throw Error(ErrorCode::DimensionMismatch, "generator " + g.str() + " does not match d and site count");
        }
    }
    GFMatrix gamma = generating_graph(d, generators);
    return GroupSpec(std::move(gamma), std::move(generators), n_sites);
}

const std::vector<PauliOperator> &GroupSpec::generators() const {
    if (!generators_) {
        throw Error(ErrorCode::DimensionMismatch, "group spec has no concrete generators");
    }
    return *generators_;
}

size_t GroupSpec::n_sites() const {
    generators();
    return n_sites_;
}

uint64_t GroupSpec::order() const {
    return checked_pow(d(), k());
}

PauliOperator GroupSpec::element(const GroupElementIndex &index) const {
    const auto &gens = generators();
    if (index.size() != gens.size()) {
        throw Error(ErrorCode::DimensionMismatch, "element index length differs from generator count");
    }
    PauliOperator acc = PauliOperator::identity(d(), n_sites_);
    for (size_t i = 0; i < gens.size(); i++) {
        if (index[i] != 0) {
            acc = multiply(acc, power(gens[i], index[i]));
        }
    }
    return canonical_unit_phase(acc);
}

GFMatrix generating_graph(uint32_t d, const std::vector<PauliOperator> &generators) {
    const size_t k = generators.size();
    GFMatrix gamma(k, k, d);
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            if (i != j) {
                gamma.set(i, j, commutator_exponent(generators[i], generators[j]).value());
            }
        }
    }
    return gamma;
}

GFMatrix generating_graph(const std::vector<PauliOperator> &generators) {
    if (generators.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "cannot infer d from an empty generator list");
    }
    return generating_graph(generators[0].d(), generators);
}

GFScalar frustration_exponent(const GroupElementIndex &i, const GroupElementIndex &j, const GFMatrix &gamma) {
    const size_t k = gamma.rows();
    if (i.size() != k || j.size() != k || gamma.cols() != k) {
        throw Error(ErrorCode::DimensionMismatch, "element index length differs from gamma size");
    }
    const uint64_t d = gamma.modulus();
    uint64_t acc = 0;
    for (size_t a = 0; a < k; a++) {
        if (i[a] == 0) {
            continue;
        }
        uint64_t row = 0;
        for (size_t b = 0; b < k; b++) {
            row = (row + (uint64_t)gamma(a, b) * j[b]) % d;
        }
        acc = (acc + i[a] * row) % d;
    }
    return GFScalar((int64_t)acc, gamma.modulus());
}

std::vector<GroupElementIndex> enumerate_indices(uint32_t d, size_t k) {
    uint64_t count = checked_pow(d, k);
    std::vector<GroupElementIndex> out;
    out.reserve(count);
    GroupElementIndex cur(k, 0);
    for (uint64_t n = 0; n < count; n++) {
        out.push_back(cur);
        for (size_t pos = k; pos-- > 0;) {
            if (++cur[pos] < d) {
                break;
            }
            cur[pos] = 0;
        }
    }
    return out;
}

CommutationGraph::CommutationGraph(size_t vertex_count)
    : n_(vertex_count), rows_(vertex_count, std::vector<uint64_t>((vertex_count + 63) / 64, 0)) {
}

CommutationGraph CommutationGraph::from_edges(size_t vertex_count, const std::vector<std::pair<size_t, size_t>> &edges) {
    CommutationGraph g(vertex_count);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw Error(ErrorCode::DimensionMismatch, "edge endpoint out of range");
        }
        g.add_edge(u, v);
    }
    return g;
}

void CommutationGraph::add_edge(size_t u, size_t v) {
    if (u == v) {
        return;
    }
    rows_[u][v >> 6] |= uint64_t{1} << (v & 63);
    rows_[v][u >> 6] |= uint64_t{1} << (u & 63);
}

size_t CommutationGraph::degree(size_t v) const {
    size_t deg = 0;
    for (uint64_t w : rows_[v]) {
        deg += std::popcount(w);
    }
    return deg;
}

size_t CommutationGraph::edge_count() const {
    size_t total = 0;
    for (size_t v = 0; v < n_; v++) {
        total += degree(v);
    }
    return total / 2;
}

void CommutationGraph::set_labels(std::vector<GroupElementIndex> labels) {
    if (labels.size() != n_) {
        throw Error(ErrorCode::DimensionMismatch, "label count differs from vertex count");
    }
    labels_ = std::move(labels);
}

CommutationGraph commutation_graph(const GroupSpec &spec, size_t vertex_cap) {
    uint64_t n = 0;
    try {
        n = spec.order();
    } catch (const Error &) {
        n = UINT64_MAX;
    }
    if (n > vertex_cap) {
        throw Error(
            ErrorCode::TooLarge,
            "d^k = " + std::to_string(spec.d()) + "^" + std::to_string(spec.k()) + " exceeds vertex cap " +
                std::to_string(vertex_cap));
    }
    auto labels = enumerate_indices(spec.d(), spec.k());
    CommutationGraph g(labels.size());
    for (size_t u = 0; u < labels.size(); u++) {
        for (size_t v = u + 1; v < labels.size(); v++) {
            if (frustration_exponent(labels[u], labels[v], spec.gamma()).value() == 0) {
                g.add_edge(u, v);
            }
        }
    }
    g.set_labels(std::move(labels));
    return g;
}

std::vector<GroupElementIndex> central_subgroup_indices(const GroupSpec &spec) {
    const uint32_t d = spec.d();
    const size_t k = spec.k();
    auto basis = nullspace_basis(spec.gamma());
    std::vector<GroupElementIndex> out;
    for (const auto &coeffs : enumerate_indices(d, basis.size())) {
        GroupElementIndex v(k, 0);
        for (size_t b = 0; b < basis.size(); b++) {
            for (size_t i = 0; i < k; i++) {
                v[i] = (uint32_t)((v[i] + (uint64_t)coeffs[b] * basis[b][i]) % d);
            }
        }
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t clique_number(const GroupSpec &spec) {
    const size_t k = spec.k();
    const size_t nullity = k - rank(spec.gamma());
    if ((nullity + k) % 2 != 0) {
        throw Error(
            ErrorCode::InternalParity,
            "null(gamma) + k = " + std::to_string(nullity + k) + " is odd; gamma is not a valid generating graph");
    }
    return checked_pow(spec.d(), (nullity + k) / 2);
}

uint64_t sos_bound(const GroupSpec &spec) {
    return clique_number(spec);
}

double sum_bound(const GroupSpec &spec) {
    if (spec.d() == 2) {
        throw Error(ErrorCode::EvenDimension, "the sum bound requires an odd prime d");
    }
    double clique = (double)clique_number(spec);
    double half_rank = (double)rank(spec.gamma()) / 2.0;
    return 2.0 * clique * std::pow((1.0 + std::sqrt((double)spec.d())) / 2.0, half_rank);
}

namespace {

class MaxCliqueSearch {
   public:
    explicit MaxCliqueSearch(const CommutationGraph &g) : g_(g) {
    }

    size_t run() {
        std::vector<size_t> order(g_.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return g_.degree(a) > g_.degree(b); });
        best_ = g_.vertex_count() ? 1 : 0;
        expand(0, order);
        return best_;
    }

   private:
    // Greedy sequential coloring of `candidates`; returns them sorted by color
    // with the matching (1-based) color bound for each position.
    void color_sort(const std::vector<size_t> &candidates, std::vector<size_t> &sorted, std::vector<size_t> &bounds) {
        std::vector<std::vector<size_t>> classes;
        for (size_t v : candidates) {
            size_t c = 0;
            for (; c < classes.size(); c++) {
                bool clash = false;
                for (size_t u : classes[c]) {
                    if (g_.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) {
                    break;
                }
            }
            if (c == classes.size()) {
                classes.emplace_back();
            }
            classes[c].push_back(v);
        }
        sorted.clear();
        bounds.clear();
        for (size_t c = 0; c < classes.size(); c++) {
            for (size_t v : classes[c]) {
                sorted.push_back(v);
                bounds.push_back(c + 1);
            }
        }
    }

    void expand(size_t depth, std::vector<size_t> candidates) {
        std::vector<size_t> sorted;
        std::vector<size_t> bounds;
        color_sort(candidates, sorted, bounds);
        for (size_t i = sorted.size(); i-- > 0;) {
            if (depth + bounds[i] <= best_) {
                return;
            }
            size_t v = sorted[i];
            std::vector<size_t> next;
            for (size_t j = 0; j < i; j++) {
                if (g_.adjacent(v, sorted[j])) {
                    next.push_back(sorted[j]);
                }
            }
            if (next.empty()) {
                best_ = std::max(best_, depth + 1);
            } else {
                expand(depth + 1, std::move(next));
            }
        }
    }

    const CommutationGraph &g_;
    size_t best_ = 0;
};

class ColoringSearch {
   public:
    ColoringSearch(const CommutationGraph &g, size_t lower_bound)
        : g_(g), n_(g.vertex_count()), lower_(lower_bound), color_(n_, kNone), seen_(n_, std::vector<size_t>(n_ + 1, 0)), sat_(n_, 0) {
    }

    size_t run() {
        if (n_ == 0) {
            return 0;
        }
        best_ = n_ + 1;
        search(0, 0);
        return best_;
    }

   private:
    static constexpr size_t kNone = SIZE_MAX;

    size_t pick() const {
        size_t chosen = kNone;
        for (size_t v = 0; v < n_; v++) {
            if (color_[v] != kNone) {
                continue;
            }
            if (chosen == kNone || sat_[v] > sat_[chosen] ||
                (sat_[v] == sat_[chosen] && g_.degree(v) > g_.degree(chosen))) {
                chosen = v;
            }
        }
        return chosen;
    }

    void assign(size_t v, size_t c) {
        color_[v] = c;
        for (size_t u = 0; u < n_; u++) {
            if (g_.adjacent(u, v) && seen_[u][c]++ == 0) {
                sat_[u]++;
            }
        }
    }

    void unassign(size_t v) {
        size_t c = color_[v];
        color_[v] = kNone;
        for (size_t u = 0; u < n_; u++) {
            if (g_.adjacent(u, v) && --seen_[u][c] == 0) {
                sat_[u]--;
            }
        }
    }

    void search(size_t colored, size_t used) {
        if (best_ == lower_) {
            return;
        }
        if (colored == n_) {
            best_ = std::min(best_, used);
            return;
        }
        size_t v = pick();
        for (size_t c = 0; c < used; c++) {
            if (seen_[v][c] == 0) {
                assign(v, c);
                search(colored + 1, used);
                unassign(v);
                if (best_ == lower_) {
                    return;
                }
            }
        }
        if (used + 1 < best_) {
            assign(v, used);
            search(colored + 1, used + 1);
            unassign(v);
        }
    }

    const CommutationGraph &g_;
    size_t n_;
    size_t lower_;
    size_t best_ = 0;
    std::vector<size_t> color_;
    std::vector<std::vector<size_t>> seen_;
    std::vector<size_t> sat_;
};

}  // namespace

size_t clique_number_bruteforce(const CommutationGraph &graph, size_t vertex_cap) {
    if (graph.vertex_count() > vertex_cap) {
        throw Error(
            ErrorCode::TooLarge,
            std::to_string(graph.vertex_count()) + " vertices exceed the clique search cap " + std::to_string(vertex_cap));
    }
    return MaxCliqueSearch(graph).run();
}

size_t chromatic_number_exact(const CommutationGraph &graph, size_t vertex_cap) {
    if (graph.vertex_count() > vertex_cap) {
        throw Error(
            ErrorCode::TooLarge,
            std::to_string(graph.vertex_count()) + " vertices exceed the coloring cap " + std::to_string(vertex_cap));
    }
    size_t lower = MaxCliqueSearch(graph).run();
    return ColoringSearch(graph, lower).run();
}

}  // namespace frustgraph
