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

#include "frustgraph/stabilizer.h"

#include <numeric>

#include "frustgraph/error.h"
#include "frustgraph/group.h"

namespace frustgraph {

Rational Rational::make(uint64_t num, uint64_t den) {
    if (den == 0) {
        throw Error(ErrorCode::Internal, "zero denominator");
    }
    uint64_t g = std::gcd(num, den);
    if (g == 0) {
        return {0, 1};
    }
    return {num / g, den / g};
}

bool Rational::operator<(const Rational &other) const {
    return (unsigned __int128)num * other.den < (unsigned __int128)other.num * den;
}

Stabilizer::Stabilizer(uint32_t d, size_t n_sites, std::vector<PauliOperator> generators)
    : d_(d), n_sites_(n_sites), generators_(std::move(generators)) {
    require_prime(d);
    for (const auto &g : generators_) {
        if (g.d() != d || g.n_sites() != n_sites) {
            throw Error(ErrorCode::DimensionMismatch, "generator " + g.str() + " does not match d and site count");
        }
    }
}

void validate(const Stabilizer &s) {
    const auto &gens = s.generators();
    const size_t k = gens.size();
    const size_t n = s.n_sites();
    const uint32_t d = s.d();

    for (size_t i = 0; i < k; i++) {
        for (size_t j = i + 1; j < k; j++) {
            if (commutator_exponent(gens[i], gens[j]).value() != 0) {
                throw Error(
                    ErrorCode::NonCommuting,
                    "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
            }
        }
    }

    // Products with trivial Pauli part form a lattice generated by d * e_i and
    // lifts of the mod-d relations between exponent rows; the phase is a
    // homomorphism on it, so checking those generators is enough.
    for (size_t i = 0; i < k; i++) {
        PauliOperator p = power(gens[i], d);
        if (!p.is_identity()) {
            throw Error(
                ErrorCode::PhaseViolation,
                "generator " + std::to_string(i + 1) + " raised to the power d is w^" + std::to_string(p.phase_exp()) +
                    " times the identity");
        }
    }
    GFMatrix stacked_t(2 * n, k, d);
    for (size_t i = 0; i < k; i++) {
        for (size_t site = 0; site < n; site++) {
            stacked_t.set(site, i, gens[i].x()[site]);
            stacked_t.set(n + site, i, gens[i].z()[site]);
        }
    }
    auto relations = nullspace_basis(stacked_t);
    for (const auto &c : relations) {
        PauliOperator p = PauliOperator::identity(d, n);
        for (size_t i = 0; i < k; i++) {
            p = multiply(p, power(gens[i], c[i]));
        }
        if (!p.is_identity()) {
            throw Error(
                ErrorCode::PhaseViolation,
                "a product of generators equals w^" + std::to_string(p.phase_exp()) + " times the identity");
        }
    }
    if (!relations.empty()) {
        throw Error(ErrorCode::DependentGenerators, "generator exponent rows are linearly dependent mod d");
    }
}

GFMatrix reduced_generating_graph(const Stabilizer &s, const SiteSubset &side) {
    side.check_bipartition(s.n_sites());
    std::vector<PauliOperator> restricted;
    restricted.reserve(s.k());
    for (const auto &g : s.generators()) {
        restricted.push_back(restrict_to(g, side));
    }
    return generating_graph(s.d(), restricted);
}

std::vector<SiteSubset> enumerate_bipartitions(size_t n_sites, size_t cap) {
    if (n_sites < 2) {
        throw Error(ErrorCode::BadSubset, "bipartitions need at least two sites");
    }
    if (n_sites - 1 >= 63 || ((uint64_t{1} << (n_sites - 1)) - 1) > cap) {
        throw Error(
            ErrorCode::TooManyBipartitions,
            std::to_string(n_sites) + " sites exceed the bipartition cap " + std::to_string(cap));
    }
    const uint64_t count = (uint64_t{1} << (n_sites - 1)) - 1;
    std::vector<SiteSubset> out;
    out.reserve(count);
    for (uint64_t mask = 0; mask < count; mask++) {
        std::vector<size_t> sites{1};
        for (size_t bit = 0; bit + 1 < n_sites; bit++) {
            if ((mask >> bit) & 1) {
                sites.push_back(bit + 2);
            }
        }
        out.emplace_back(std::move(sites));
    }
    return out;
}

bool is_gme(const Stabilizer &s, size_t bipartition_cap) {
    for (const auto &side : enumerate_bipartitions(s.n_sites(), bipartition_cap)) {
        if (reduced_generating_graph(s, side).is_zero()) {
            return false;
        }
    }
    return true;
}

BipartitionReport gm_measure(const Stabilizer &s, const SiteSubset &side) {
    GFMatrix gamma = reduced_generating_graph(s, side);
    const size_t r = rank(gamma);
    if (r % 2 != 0) {
        throw Error(ErrorCode::InternalParity, "reduced generating graph has odd rank");
    }
    uint64_t scale = checked_pow(s.d(), r / 2);
    Rational gm = Rational::make(scale - 1, scale);

    Rational clique_form = gm;
    try {
        uint64_t clique = clique_number(GroupSpec::from_gamma(gamma));
        uint64_t order = checked_pow(s.d(), s.k());
        clique_form = Rational::make(order - clique, order);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::TooLarge) {
            throw;
        }
    }
    if (!(clique_form == gm)) {
        throw Error(ErrorCode::Internal, "rank and clique forms of the geometric measure disagree");
    }
    return {side, std::move(gamma), r, gm, clique_form};
}

Rational ggm_measure(const Stabilizer &s, size_t bipartition_cap) {
    auto sides = enumerate_bipartitions(s.n_sites(), bipartition_cap);
    Rational best{1, 1};
    bool gme = true;
    for (const auto &side : sides) {
        BipartitionReport rep = gm_measure(s, side);
        if (rep.rank == 0) {
            gme = false;
        }
        if (rep.gm < best) {
            best = rep.gm;
        }
    }
    if (gme && !(best == Rational::make(s.d() - 1, s.d()))) {
        throw Error(ErrorCode::Internal, "GME stabilizer with generalized geometric measure other than (d-1)/d");
    }
    return best;
}

Stabilizer builtin_code(std::string_view name, uint32_t d, size_t n_sites) {
    require_prime(d);
    const uint32_t minus_one = d - 1;
    std::vector<PauliOperator> gens;
    if (name == "ghz") {
        if (n_sites < 2) {
            throw Error(ErrorCode::DimensionMismatch, "ghz needs at least two sites");
        }
        gens.emplace_back(d, ZdVector(n_sites, 1), ZdVector(n_sites, 0));
        for (size_t s = 0; s + 1 < n_sites; s++) {
            ZdVector z(n_sites, 0);
            z[s] = 1;
            z[s + 1] = minus_one;
            gens.emplace_back(d, ZdVector(n_sites, 0), std::move(z));
        }
    } else if (name == "five_qudit") {
        if (n_sites != 5) {
            throw Error(ErrorCode::DimensionMismatch, "five_qudit is defined on exactly 5 sites");
        }
        // Cyclic shifts of X Z Z^-1 X^-1 I.
        const ZdVector x0{1, 0, 0, minus_one, 0};
        const ZdVector z0{0, 1, minus_one, 0, 0};
        for (size_t shift = 0; shift < 4; shift++) {
            ZdVector x(5);
            ZdVector z(5);
            for (size_t s = 0; s < 5; s++) {
                x[(s + shift) % 5] = x0[s];
                z[(s + shift) % 5] = z0[s];
            }
            gens.emplace_back(d, std::move(x), std::move(z));
        }
    } else {
        throw Error(ErrorCode::UnknownCode, "unknown builtin code '" + std::string(name) + "'");
    }
    Stabilizer s(d, n_sites, std::move(gens));
    validate(s);
    return s;
}

}  // namespace frustgraph
