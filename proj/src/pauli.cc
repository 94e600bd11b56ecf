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

#include "frustgraph/pauli.h"

#include <algorithm>
#include <sstream>

#include "frustgraph/error.h"

namespace frustgraph {

SiteSubset::SiteSubset(std::vector<size_t> sites) : sites_(std::move(sites)) {
    std::sort(sites_.begin(), sites_.end());
    sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
    if (sites_.empty()) {
        throw Error(ErrorCode::BadSubset, "site subset is empty");
    }
    if (sites_.front() == 0) {
        throw Error(ErrorCode::BadSubset, "site labels are 1-based");
    }
}

bool SiteSubset::contains(size_t site) const {
    return std::binary_search(sites_.begin(), sites_.end(), site);
}

void SiteSubset::check_within(size_t n_sites) const {
    if (sites_.back() > n_sites) {
        throw Error(
            ErrorCode::BadSubset,
            "site " + std::to_string(sites_.back()) + " is out of range for " + std::to_string(n_sites) + " sites");
    }
}

void SiteSubset::check_bipartition(size_t n_sites) const {
    check_within(n_sites);
    if (sites_.size() >= n_sites) {
        throw Error(ErrorCode::BadSubset, "bipartition side " + str() + " must be a proper subset");
    }
}

SiteSubset SiteSubset::complement(size_t n_sites) const {
    check_within(n_sites);
    std::vector<size_t> rest;
    for (size_t s = 1; s <= n_sites; s++) {
        if (!contains(s)) {
            rest.push_back(s);
        }
    }
    return SiteSubset(std::move(rest));
}

std::string SiteSubset::str() const {
    std::string out = "{";
    for (size_t i = 0; i < sites_.size(); i++) {
        if (i) {
            out += ',';
        }
        out += std::to_string(sites_[i]);
    }
    return out + "}";
}

PauliOperator::PauliOperator(uint32_t d, ZdVector x, ZdVector z, uint32_t phase_exp)
    : d_(d), x_(std::move(x)), z_(std::move(z)), phase_(phase_exp % phase_modulus(d)) {
    require_prime(d);
    if (x_.size() != z_.size()) {
        throw Error(ErrorCode::DimensionMismatch, "X and Z exponent vectors differ in length");
    }
    for (auto &v : x_) {
        v %= d;
    }
    for (auto &v : z_) {
        v %= d;
    }
}

PauliOperator PauliOperator::identity(uint32_t d, size_t n_sites) {
    return PauliOperator(d, ZdVector(n_sites, 0), ZdVector(n_sites, 0));
}

PauliOperator PauliOperator::single_site(uint32_t d, size_t n_sites, size_t site, uint32_t x, uint32_t z) {
    if (site >= n_sites) {
        throw Error(ErrorCode::BadSubset, "site index out of range");
    }
    ZdVector xs(n_sites, 0);
    ZdVector zs(n_sites, 0);
    xs[site] = x;
    zs[site] = z;
    return PauliOperator(d, std::move(xs), std::move(zs));
}

bool PauliOperator::is_scalar() const {
    return std::all_of(x_.begin(), x_.end(), [](uint32_t v) { return v == 0; }) &&
           std::all_of(z_.begin(), z_.end(), [](uint32_t v) { return v == 0; });
}

PauliOperator PauliOperator::with_phase(uint32_t phase_exp) const {
    PauliOperator out = *this;
    out.phase_ = phase_exp % phase_modulus(d_);
    return out;
}

std::string PauliOperator::str() const {
    std::stringstream out;
    bool first = true;
    auto sep = [&]() {
        if (!first) {
            out << ' ';
        }
        first = false;
    };
    if (phase_ != 0) {
        sep();
        out << "w^" << phase_;
    }
    for (size_t s = 0; s < x_.size(); s++) {
        sep();
        uint32_t a = x_[s];
        uint32_t b = z_[s];
        if (a == 0 && b == 0) {
            out << 'I';
        } else if (b == 0) {
            out << 'X';
            if (a != 1) {
                out << '^' << a;
            }
        } else if (a == 0) {
            out << 'Z';
            if (b != 1) {
                out << '^' << b;
            }
        } else {
            out << "X^" << a << "Z^" << b;
        }
    }
    return out.str();
}

static void check_compatible(const PauliOperator &p, const PauliOperator &q) {
    if (p.d() != q.d() || p.n_sites() != q.n_sites()) {
        throw Error(
            ErrorCode::DimensionMismatch,
            "operators differ in dimension or site count (d=" + std::to_string(p.d()) + ",n=" +
                std::to_string(p.n_sites()) + " vs d=" + std::to_string(q.d()) + ",n=" + std::to_string(q.n_sites()) +
                ")");
    }
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    check_compatible(p, q);
    const uint32_t d = p.d();
    const uint64_t big_d = phase_modulus(d);
    const uint64_t omega_in_zeta = big_d / d;

    // X^a Z^b X^a' Z^b' = omega^(b a') X^(a+a') Z^(b+b') on each site.
    uint64_t cross = 0;
    ZdVector x(p.n_sites());
    ZdVector z(p.n_sites());
    for (size_t s = 0; s < p.n_sites(); s++) {
        cross = (cross + (uint64_t)p.z()[s] * q.x()[s]) % d;
        x[s] = (p.x()[s] + q.x()[s]) % d;
        z[s] = (p.z()[s] + q.z()[s]) % d;
    }
    uint64_t phase = (p.phase_exp() + q.phase_exp() + omega_in_zeta * cross) % big_d;
    return PauliOperator(d, std::move(x), std::move(z), (uint32_t)phase);
}

GFScalar commutator_exponent(const PauliOperator &p, const PauliOperator &q) {
    check_compatible(p, q);
    const uint32_t d = p.d();
    int64_t sigma = 0;
    for (size_t s = 0; s < p.n_sites(); s++) {
        sigma += (int64_t)p.z()[s] * q.x()[s] - (int64_t)p.x()[s] * q.z()[s];
        sigma %= d;
    }
    return GFScalar(sigma, d);
}

PauliOperator power(const PauliOperator &p, int64_t m) {
    // P^(d * D) = 1, so the exponent can be reduced modulo d * D.
    const int64_t order = (int64_t)p.d() * phase_modulus(p.d());
    uint64_t e = (uint64_t)(((m % order) + order) % order);
    PauliOperator result = PauliOperator::identity(p.d(), p.n_sites());
    PauliOperator base = p;
    while (e) {
        if (e & 1) {
            result = multiply(result, base);
        }
        e >>= 1;
        if (e) {
            base = multiply(base, base);
        }
    }
    return result;
}

PauliOperator canonical_unit_phase(const PauliOperator &p) {
    if (p.d() != 2) {
        return p.with_phase(0);
    }
    uint32_t overlap = 0;
    for (size_t s = 0; s < p.n_sites(); s++) {
        overlap += p.x()[s] & p.z()[s];
    }
    return p.with_phase(overlap & 1);
}

PauliOperator restrict_to(const PauliOperator &p, const SiteSubset &sites) {
    sites.check_within(p.n_sites());
    ZdVector x;
    ZdVector z;
    for (size_t s : sites.indices()) {
        x.push_back(p.x()[s - 1]);
        z.push_back(p.z()[s - 1]);
    }
    return canonical_unit_phase(PauliOperator(p.d(), std::move(x), std::move(z)));
}

}  // namespace frustgraph
