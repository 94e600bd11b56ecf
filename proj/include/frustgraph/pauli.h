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

#ifndef FRUSTGRAPH_PAULI_H
#define FRUSTGRAPH_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "frustgraph/gf.h"

namespace frustgraph {

/// Order of the scalar unit zeta used for Pauli phases: zeta = omega =
/// exp(2 pi i / d) for odd d (order d) and zeta = i for d = 2 (order 4).
inline uint32_t phase_modulus(uint32_t d) {
    return d == 2 ? 4 : d;
}

/// Ordered set of 1-based site labels.
class SiteSubset {
   public:
    /// Sorts and deduplicates. Throws BadSubset for an empty list or a 0 label.
    explicit SiteSubset(std::vector<size_t> sites);

    const std::vector<size_t> &indices() const noexcept {
        return sites_;
    }
    size_t size() const noexcept {
        return sites_.size();
    }
    bool contains(size_t site) const;

    /// Throws BadSubset if any label exceeds n_sites.
    void check_within(size_t n_sites) const;
    /// Throws BadSubset unless this is a proper non-empty subset of [1, n_sites].
    void check_bipartition(size_t n_sites) const;
    SiteSubset complement(size_t n_sites) const;

    /// Formatted as "{1,2}".
    std::string str() const;

    bool operator==(const SiteSubset &other) const = default;

   private:
    std::vector<size_t> sites_;
};

/// zeta^phase_exp * X^{x_1} Z^{z_1} (x) ... (x) X^{x_N} Z^{z_N}, with X left of Z
/// on every site.
class PauliOperator {
   public:
    PauliOperator(uint32_t d, ZdVector x, ZdVector z, uint32_t phase_exp = 0);

    static PauliOperator identity(uint32_t d, size_t n_sites);
    /// X^x Z^z on one site (0-based) of an n-site register.
    static PauliOperator single_site(uint32_t d, size_t n_sites, size_t site, uint32_t x, uint32_t z);

    uint32_t d() const noexcept {
        return d_;
    }
    size_t n_sites() const noexcept {
        return x_.size();
    }
    const ZdVector &x() const noexcept {
        return x_;
    }
    const ZdVector &z() const noexcept {
        return z_;
    }
    uint32_t phase_exp() const noexcept {
        return phase_;
    }

    /// True when every X and Z exponent is zero (the phase may be anything).
    bool is_scalar() const;
    /// Exactly the identity operator.
    bool is_identity() const {
        return is_scalar() && phase_ == 0;
    }

    PauliOperator with_phase(uint32_t phase_exp) const;

    /// Site tokens of the input grammar, e.g. "w^1 X Z^2 X^1Z^1 I".
    std::string str() const;

    bool operator==(const PauliOperator &other) const = default;

   private:
    uint32_t d_;
    ZdVector x_;
    ZdVector z_;
    uint32_t phase_;
};

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
inline PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
    return multiply(p, q);
}

/// sigma with P Q P^-1 Q^-1 = omega^sigma. Independent of the phases of P, Q.
GFScalar commutator_exponent(const PauliOperator &p, const PauliOperator &q);

/// Exact m-th power; negative m gives powers of the inverse.
PauliOperator power(const PauliOperator &p, int64_t m);

/// Replaces the phase by the unique unit in the allowed set making P^d = 1:
/// always 1 for odd d, and i exactly when the sitewise XZ count is odd for d = 2.
PauliOperator canonical_unit_phase(const PauliOperator &p);

/// The factor of P acting on the sites of `sites` (as a |sites|-site operator),
/// with its phase replaced by `canonical_unit_phase`.
PauliOperator restrict_to(const PauliOperator &p, const SiteSubset &sites);

}  // namespace frustgraph

#endif
