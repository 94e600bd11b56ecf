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

#ifndef FRUSTGRAPH_STABILIZER_H
#define FRUSTGRAPH_STABILIZER_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frustgraph/gf.h"
#include "frustgraph/pauli.h"

namespace frustgraph {

/// 2^(16 - 1) - 1: every bipartition of up to 16 sites.
constexpr size_t kDefaultBipartitionCap = 32767;

/// Non-negative reduced fraction.
struct Rational {
    uint64_t num = 0;
    uint64_t den = 1;

    static Rational make(uint64_t num, uint64_t den);
    double real() const {
        return (double)num / (double)den;
    }
    bool operator==(const Rational &other) const = default;
    bool operator<(const Rational &other) const;
};

class Stabilizer {
   public:
    /// Checks only that the generators match d and n_sites; see `validate`.
    Stabilizer(uint32_t d, size_t n_sites, std::vector<PauliOperator> generators);

    uint32_t d() const noexcept {
        return d_;
    }
    size_t n_sites() const noexcept {
        return n_sites_;
    }
    size_t k() const noexcept {
        return generators_.size();
    }
    const std::vector<PauliOperator> &generators() const noexcept {
        return generators_;
    }

   private:
    uint32_t d_;
    size_t n_sites_;
    std::vector<PauliOperator> generators_;
};

/// Throws NonCommuting (1-based generator labels in the message),
/// PhaseViolation when some product of generators is a nontrivial multiple of
/// the identity, or DependentGenerators. Checked in that order.
void validate(const Stabilizer &s);

/// Commutator exponents of the generators restricted to `side`.
/// Throws BadSubset unless `side` is a proper non-empty subset.
GFMatrix reduced_generating_graph(const Stabilizer &s, const SiteSubset &side);

/// Bipartitions with site 1 on the listed side, ordered by the bitmask of the
/// remaining sites. Throws TooManyBipartitions when 2^(n-1) - 1 > cap.
std::vector<SiteSubset> enumerate_bipartitions(size_t n_sites, size_t cap = kDefaultBipartitionCap);

bool is_gme(const Stabilizer &s, size_t bipartition_cap = kDefaultBipartitionCap);

struct BipartitionReport {
    SiteSubset side;
    GFMatrix gamma;
    size_t rank;
    /// 1 - d^(-rank / 2).
    Rational gm;
    /// 1 - d^(-k) * clique_number(gamma), asserted equal to gm.
    Rational gm_clique_form;
};

BipartitionReport gm_measure(const Stabilizer &s, const SiteSubset &side);

/// Minimum of gm over all bipartitions; (d - 1) / d for GME stabilizers.
Rational ggm_measure(const Stabilizer &s, size_t bipartition_cap = kDefaultBipartitionCap);

/// "ghz" (any n >= 2) or "five_qudit" (n = 5). Throws UnknownCode.
Stabilizer builtin_code(std::string_view name, uint32_t d, size_t n_sites);

}  // namespace frustgraph

#endif
