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

#include "frustgraph/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "frustgraph/error.h"
#include "frustgraph/symplectic.h"

namespace frustgraph {

DenseOperator::DenseOperator(size_t dim) : dim_(dim), entries_(dim * dim, Complex{0, 0}) {
}

DenseOperator DenseOperator::identity(size_t dim) {
    DenseOperator out(dim);
    for (size_t i = 0; i < dim; i++) {
        out(i, i) = 1;
    }
    return out;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseOperator DenseOperator::kron(const DenseOperator &other) const {
    const size_t m = other.dim_;
    DenseOperator out(dim_ * m);
    for (size_t r1 = 0; r1 < dim_; r1++) {
        for (size_t c1 = 0; c1 < dim_; c1++) {
            Complex a = (*this)(r1, c1);
            if (a == Complex{0, 0}) {
                continue;
            }
            for (size_t r2 = 0; r2 < m; r2++) {
                for (size_t c2 = 0; c2 < m; c2++) {
                    out(r1 * m + r2, c1 * m + c2) = a * other(r2, c2);
                }
            }
        }
    }
    return out;
}

StateVector DenseOperator::apply(const StateVector &v) const {
    if (v.size() != dim_) {
        throw Error(ErrorCode::DimensionMismatch, "vector length differs from operator dimension");
    }
    StateVector out(dim_, Complex{0, 0});
    for (size_t r = 0; r < dim_; r++) {
        Complex acc{0, 0};
        for (size_t c = 0; c < dim_; c++) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

DenseOperator DenseOperator::operator*(const DenseOperator &other) const {
    if (other.dim_ != dim_) {
        throw Error(ErrorCode::DimensionMismatch, "operator dimensions differ");
    }
    DenseOperator out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t i = 0; i < dim_; i++) {
            Complex a = (*this)(r, i);
            if (a == Complex{0, 0}) {
                continue;
            }
            for (size_t c = 0; c < dim_; c++) {
                out(r, c) += a * other(i, c);
            }
        }
    }
    return out;
}

DenseOperator DenseOperator::operator+(const DenseOperator &other) const {
    if (other.dim_ != dim_) {
        throw Error(ErrorCode::DimensionMismatch, "operator dimensions differ");
    }
    DenseOperator out = *this;
    for (size_t i = 0; i < entries_.size(); i++) {
        out.entries_[i] += other.entries_[i];
    }
    return out;
}

DenseOperator DenseOperator::operator*(Complex scale) const {
    DenseOperator out = *this;
    for (auto &e : out.entries_) {
        e *= scale;
    }
    return out;
}

double DenseOperator::max_abs_diff(const DenseOperator &other) const {
    if (other.dim_ != dim_) {
        throw Error(ErrorCode::DimensionMismatch, "operator dimensions differ");
    }
    double worst = 0;
    for (size_t i = 0; i < entries_.size(); i++) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

double DenseOperator::frobenius_norm() const {
    double acc = 0;
    for (const auto &e : entries_) {
        acc += std::norm(e);
    }
    return std::sqrt(acc);
}

bool DenseOperator::is_hermitian(double tol) const {
    return max_abs_diff(adjoint()) < tol;
}

bool DenseOperator::is_unitary(double tol) const {
    return ((*this) * adjoint()).max_abs_diff(identity(dim_)) < tol;
}

void OptimizerConfig::check() const {
    if (restarts < 1) {
        throw Error(ErrorCode::InvalidConfig, "restarts must be at least 1");
    }
    if (!(tol > 0)) {
        throw Error(ErrorCode::InvalidConfig, "tol must be positive");
    }
}

std::mt19937_64 stream_rng(uint64_t seed, uint64_t stream) {
    std::seed_seq seq{
        (uint32_t)seed, (uint32_t)(seed >> 32), (uint32_t)stream, (uint32_t)(stream >> 32), uint32_t{0x9e3779b9}};
    return std::mt19937_64(seq);
}

StateVector random_unit_vector(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVector v(dim);
    for (auto &x : v) {
        x = Complex{gauss(rng), gauss(rng)};
    }
    double n = norm(v);
    for (auto &x : v) {
        x /= n;
    }
    return v;
}

Complex root_of_unity(uint64_t m, uint32_t order) {
    m %= order;
    if ((4 * m) % order == 0) {
        static const Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return quarter[(4 * m) / order];
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * (double)m / (double)order);
}

double norm(const StateVector &v) {
    double acc = 0;
    for (const auto &x : v) {
        acc += std::norm(x);
    }
    return std::sqrt(acc);
}

Complex inner(const StateVector &a, const StateVector &b) {
    Complex acc{0, 0};
    for (size_t i = 0; i < a.size(); i++) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

namespace {

size_t register_dim(uint32_t d, size_t n_sites, size_t cap) {
    uint64_t dim = 0;
    try {
        dim = checked_pow(d, n_sites);
    } catch (const Error &) {
        dim = UINT64_MAX;
    }
    if (dim > cap) {
        throw Error(
            ErrorCode::TooLarge,
            "dense dimension " + std::to_string(d) + "^" + std::to_string(n_sites) + " exceeds cap " +
                std::to_string(cap));
    }
    return (size_t)dim;
}

/// Calls emit(target, source, factor) for every nonzero entry of the
/// monomial matrix of p.
template <typename F>
void for_each_entry(const PauliOperator &p, F &&emit) {
    const uint32_t d = p.d();
    const size_t n = p.n_sites();
    const uint32_t big_d = phase_modulus(d);
    const uint32_t omega_in_zeta = big_d / d;
    std::vector<Complex> roots(big_d);
    for (uint32_t m = 0; m < big_d; m++) {
        roots[m] = root_of_unity(m, big_d);
    }
    size_t dim = 1;
    for (size_t s = 0; s < n; s++) {
        dim *= d;
    }
    std::vector<uint32_t> digits(n, 0);
    for (size_t source = 0; source < dim; source++) {
        uint64_t units = p.phase_exp();
        size_t target = 0;
        for (size_t s = 0; s < n; s++) {
            units += (uint64_t)omega_in_zeta * p.z()[s] * digits[s];
            target = target * d + (digits[s] + p.x()[s]) % d;
        }
        emit(target, source, roots[units % big_d]);
        for (size_t s = n; s-- > 0;) {
            if (++digits[s] < d) {
                break;
            }
            digits[s] = 0;
        }
    }
}

std::vector<PauliOperator> group_elements(const GroupSpec &spec) {
    std::vector<PauliOperator> out;
    for (const auto &index : enumerate_indices(spec.d(), spec.k())) {
        out.push_back(spec.element(index));
    }
    return out;
}

double sum_of_squares(const std::vector<PauliOperator> &elements, const StateVector &psi) {
    double acc = 0;
    for (const auto &a : elements) {
        acc += std::norm(expectation(a, psi));
    }
    return acc;
}

StateVector normalized(StateVector v) {
    double n = norm(v);
    for (auto &x : v) {
        x /= n;
    }
    return v;
}

/// Top eigenvector of a Hermitian matrix.
std::pair<double, StateVector> top_eigenpair(const DenseOperator &h) {
    Eigensystem es = hermitian_eigensystem(h);
    return {es.values.back(), es.vectors.back()};
}

}  // namespace

DenseOperator dense_pauli(const PauliOperator &p) {
    DenseOperator out(register_dim(p.d(), p.n_sites(), kDensePauliDimCap));
    for_each_entry(p, [&](size_t target, size_t source, Complex v) { out(target, source) = v; });
    return out;
}

StateVector apply_pauli(const PauliOperator &p, const StateVector &v) {
    StateVector out(v.size(), Complex{0, 0});
    size_t seen = 0;
    for_each_entry(p, [&](size_t target, size_t source, Complex f) {
        out[target] = f * v[source];
        seen++;
    });
    if (seen != v.size()) {
        throw Error(ErrorCode::DimensionMismatch, "state length differs from d^n_sites");
    }
    return out;
}

Complex expectation(const PauliOperator &p, const StateVector &v) {
    return inner(v, apply_pauli(p, v));
}

Eigensystem hermitian_eigensystem(const DenseOperator &input) {
    const size_t n = input.dim();
    DenseOperator h = input;
    DenseOperator v = DenseOperator::identity(n);
    const double scale = input.frobenius_norm();
    Eigensystem out;

    auto off_diagonal = [&]() {
        double acc = 0;
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                if (r != c) {
                    acc += std::norm(h(r, c));
                }
            }
        }
        return std::sqrt(acc);
    };

    constexpr size_t kMaxSweeps = 100;
    while (scale > 0 && out.sweeps < kMaxSweeps && off_diagonal() >= 1e-12 * scale) {
        out.sweeps++;
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                Complex c = h(p, q);
                double abs_c = std::abs(c);
                if (abs_c < 1e-300) {
                    continue;
                }
                double a = h(p, p).real();
                double b = h(q, q).real();
                double theta = (b - a) / (2 * abs_c);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double cs = 1 / std::sqrt(t * t + 1);
                double sn = t * cs;
                // G = diag(1, e^{-i phi}) * [[cs, sn], [-sn, cs]] on (p, q).
                Complex phase = std::conj(c) / abs_c;
                Complex gpp = cs;
                Complex gpq = sn;
                Complex gqp = -sn * phase;
                Complex gqq = cs * phase;
                for (size_t r = 0; r < n; r++) {
                    Complex hp = h(r, p);
                    Complex hq = h(r, q);
                    h(r, p) = hp * gpp + hq * gqp;
                    h(r, q) = hp * gpq + hq * gqq;
                    Complex vp = v(r, p);
                    Complex vq = v(r, q);
                    v(r, p) = vp * gpp + vq * gqp;
                    v(r, q) = vp * gpq + vq * gqq;
                }
                for (size_t col = 0; col < n; col++) {
                    Complex hp = h(p, col);
                    Complex hq = h(q, col);
                    h(p, col) = std::conj(gpp) * hp + std::conj(gqp) * hq;
                    h(q, col) = std::conj(gpq) * hp + std::conj(gqq) * hq;
                }
                h(p, q) = 0;
                h(q, p) = 0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return h(i, i).real() < h(j, j).real(); });
    for (size_t i : order) {
        out.values.push_back(h(i, i).real());
        StateVector col(n);
        for (size_t r = 0; r < n; r++) {
            col[r] = v(r, i);
        }
        out.vectors.push_back(std::move(col));
    }
    return out;
}

double verify_swap_identity(uint32_t d) {
    require_prime(d);
    if (d > kSwapMaxDim) {
        throw Error(ErrorCode::TooLarge, "swap identity check is limited to d <= 11");
    }
    DenseOperator swap(d * d);
    for (size_t a = 0; a < d; a++) {
        for (size_t b = 0; b < d; b++) {
            swap(b * d + a, a * d + b) = 1;
        }
    }
    DenseOperator sum(d * d);
    for (uint32_t i = 0; i < d; i++) {
        for (uint32_t j = 0; j < d; j++) {
            DenseOperator w = dense_pauli(PauliOperator(d, {i}, {j}));
            sum = sum + w.kron(w.adjoint());
        }
    }
    return swap.max_abs_diff(sum * Complex{1.0 / d, 0});
}

double sum_of_squares(const GroupSpec &spec, const StateVector &psi) {
    return sum_of_squares(group_elements(spec), psi);
}

SosResult max_sos(const GroupSpec &spec, const OptimizerConfig &cfg) {
    cfg.check();
    const size_t dim = register_dim(spec.d(), spec.n_sites(), kDensePauliDimCap);
    const auto elements = group_elements(spec);

    SosResult result{0, 0, 0, {}};
    StateVector best_iterative;
    for (size_t restart = 0; restart < cfg.restarts; restart++) {
        auto rng = stream_rng(cfg.seed, restart);
        StateVector psi = random_unit_vector(dim, rng);
        double value = sum_of_squares(elements, psi);
        for (size_t iter = 0; iter < cfg.max_iters; iter++) {
            StateVector next(dim, Complex{0, 0});
            for (const auto &a : elements) {
                Complex e = std::conj(expectation(a, psi));
                StateVector ap = apply_pauli(a, psi);
                for (size_t i = 0; i < dim; i++) {
                    next[i] += e * ap[i];
                }
            }
            if (norm(next) < 1e-300) {
                break;
            }
            next = normalized(std::move(next));
            double next_value = sum_of_squares(elements, next);
            bool done = std::abs(next_value - value) < cfg.tol;
            if (next_value >= value) {
                psi = std::move(next);
                value = next_value;
            } else {
                break;
            }
            if (done) {
                break;
            }
        }
        if (value > result.iterative || best_iterative.empty()) {
            result.iterative = value;
            best_iterative = psi;
        }
    }

    // Witness: a joint eigenvector of the subgroup spanned by one vector of
    // every symplectic pair plus the kernel of gamma.
    CanonicalForm cf = canonical_form(spec.gamma());
    std::vector<PauliOperator> commuting;
    for (size_t c = 0; c < spec.k(); c++) {
        if (c >= 2 * cf.blocks || c % 2 == 0) {
            commuting.push_back(spec.element(cf.transform.column(c)));
        }
    }
    auto rng = stream_rng(cfg.seed, cfg.restarts);
    StateVector psi = random_unit_vector(dim, rng);
    const uint32_t d = spec.d();
    for (const auto &b : commuting) {
        std::vector<StateVector> powers{psi};
        for (uint32_t t = 1; t < d; t++) {
            powers.push_back(apply_pauli(b, powers.back()));
        }
        StateVector best;
        double best_norm = -1;
        for (uint32_t s = 0; s < d; s++) {
            StateVector proj(dim, Complex{0, 0});
            for (uint32_t t = 0; t < d; t++) {
                Complex w = root_of_unity((uint64_t)(d - s) * t, d) / (double)d;
                for (size_t i = 0; i < dim; i++) {
                    proj[i] += w * powers[t][i];
                }
            }
            double pn = norm(proj);
            if (pn > best_norm) {
                best_norm = pn;
                best = std::move(proj);
            }
        }
        psi = normalized(std::move(best));
    }
    result.witness = sum_of_squares(elements, psi);

    if (result.witness >= result.iterative) {
        result.value = result.witness;
        result.maximizer = std::move(psi);
    } else {
        result.value = result.iterative;
        result.maximizer = std::move(best_iterative);
    }
    return result;
}

DenseOperator sum_hamiltonian(const GroupSpec &spec) {
    if (spec.d() == 2) {
        throw Error(ErrorCode::EvenDimension, "the sum Hamiltonian is defined for odd prime d");
    }
    DenseOperator h(register_dim(spec.d(), spec.n_sites(), kSumEigenDimCap));
    for (const auto &a : group_elements(spec)) {
        for_each_entry(a, [&](size_t target, size_t source, Complex v) {
            h(target, source) += v;
            h(source, target) += std::conj(v);
        });
    }
    return h;
}

double max_sum_eigenvalue(const GroupSpec &spec) {
    return hermitian_eigensystem(sum_hamiltonian(spec)).values.back();
}

DenseOperator stabilizer_projector(const Stabilizer &s) {
    const size_t dim = register_dim(s.d(), s.n_sites(), kOverlapDimCap);
    DenseOperator proj(dim);
    for (size_t col = 0; col < dim; col++) {
        StateVector v(dim, Complex{0, 0});
        v[col] = 1;
        for (const auto &g : s.generators()) {
            StateVector acc = v;
            StateVector cur = v;
            for (uint32_t t = 1; t < s.d(); t++) {
                cur = apply_pauli(g, cur);
                for (size_t i = 0; i < dim; i++) {
                    acc[i] += cur[i];
                }
            }
            for (auto &x : acc) {
                x /= (double)s.d();
            }
            v = std::move(acc);
        }
        for (size_t r = 0; r < dim; r++) {
            proj(r, col) = v[r];
        }
    }
    return proj;
}

double max_product_overlap(const Stabilizer &s, const SiteSubset &side, const OptimizerConfig &cfg) {
    cfg.check();
    side.check_bipartition(s.n_sites());
    const size_t dim = register_dim(s.d(), s.n_sites(), kOverlapDimCap);
    const DenseOperator proj = stabilizer_projector(s);
    const uint32_t d = s.d();
    const size_t n = s.n_sites();

    // full_index[a * rest_dim + r] is the register index of |a>_side |r>_rest.
    size_t side_dim = 1;
    for (size_t i = 0; i < side.size(); i++) {
        side_dim *= d;
    }
    const size_t rest_dim = dim / side_dim;
    std::vector<size_t> full_index(dim);
    for (size_t idx = 0; idx < dim; idx++) {
        size_t a = 0;
        size_t r = 0;
        size_t rem = idx;
        std::vector<uint32_t> digits(n);
        for (size_t site = n; site-- > 0;) {
            digits[site] = rem % d;
            rem /= d;
        }
        for (size_t site = 0; site < n; site++) {
            if (side.contains(site + 1)) {
                a = a * d + digits[site];
            } else {
                r = r * d + digits[site];
            }
        }
        full_index[a * rest_dim + r] = idx;
    }
    auto at = [&](size_t a, size_t r) { return full_index[a * rest_dim + r]; };

    // <.|_fixed P |.>_fixed as an operator on the free factor.
    auto contract = [&](const StateVector &fixed, bool fixed_is_rest) {
        const size_t free_dim = fixed_is_rest ? side_dim : rest_dim;
        const size_t fixed_dim = fixed.size();
        auto idx = [&](size_t free, size_t f) { return fixed_is_rest ? at(free, f) : at(f, free); };
        DenseOperator m(free_dim);
        for (size_t x = 0; x < free_dim; x++) {
            for (size_t y = 0; y < free_dim; y++) {
                Complex acc{0, 0};
                for (size_t f = 0; f < fixed_dim; f++) {
                    if (fixed[f] == Complex{0, 0}) {
                        continue;
                    }
                    Complex row{0, 0};
                    for (size_t g = 0; g < fixed_dim; g++) {
                        row += proj(idx(x, f), idx(y, g)) * fixed[g];
                    }
                    acc += std::conj(fixed[f]) * row;
                }
                m(x, y) = acc;
            }
        }
        return m;
    };

    double best = 0;
    for (size_t restart = 0; restart < cfg.restarts; restart++) {
        auto rng = stream_rng(cfg.seed, restart);
        StateVector rest = random_unit_vector(rest_dim, rng);
        StateVector phi;
        double value = -1;
        for (size_t iter = 0; iter < cfg.max_iters; iter++) {
            auto [v1, side_vec] = top_eigenpair(contract(rest, true));
            phi = std::move(side_vec);
            auto [v2, rest_vec] = top_eigenpair(contract(phi, false));
            rest = std::move(rest_vec);
            bool done = std::abs(v2 - value) < cfg.tol;
            value = v2;
            if (done) {
                break;
            }
        }
        StateVector product(dim);
        for (size_t a = 0; a < side_dim; a++) {
            for (size_t r = 0; r < rest_dim; r++) {
                product[at(a, r)] = phi[a] * rest[r];
            }
        }
        product = normalized(std::move(product));
        best = std::max(best, inner(product, proj.apply(product)).real());
    }
    return best;
}

double lagrange_extremum(uint32_t d, const OptimizerConfig &cfg) {
    require_prime(d);
    if (d == 2) {
        throw Error(ErrorCode::EvenDimension, "the Lagrange extremum is stated for odd prime d");
    }
    cfg.check();
    const double root_d = std::sqrt((double)d);
    auto objective = [&](const std::vector<double> &a) {
        double sum = 0;
        for (double x : a) {
            sum += std::abs(x);
        }
        return sum * std::abs(a[0]) / root_d;
    };

    double best = 0;
    for (size_t restart = 0; restart < cfg.restarts; restart++) {
        auto rng = stream_rng(cfg.seed, restart);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<double> a(d);
        for (auto &x : a) {
            x = unif(rng) + 1e-3;
        }
        double value = -1;
        for (size_t iter = 0; iter < cfg.max_iters; iter++) {
            double n = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
            for (auto &x : a) {
                x /= n;
            }
            double next_value = objective(a);
            if (std::abs(next_value - value) < cfg.tol * 1e-3) {
                value = next_value;
                break;
            }
            value = next_value;
            // Ascent step a <- a + grad / 2 on the sphere (positive orthant).
            double tail = std::accumulate(a.begin() + 1, a.end(), 0.0);
            std::vector<double> next(d);
            next[0] = a[0] + (2 * a[0] + tail) / (2 * root_d);
            for (size_t i = 1; i < d; i++) {
                next[i] = a[i] + a[0] / (2 * root_d);
            }
            a = std::move(next);
        }
        best = std::max(best, value);
    }
    return best;
}

StateVector theta_state(uint32_t d) {
    require_prime(d);
    if (d == 2) {
        throw Error(ErrorCode::EvenDimension, "the theta state is defined for odd prime d");
    }
    const double root_d = std::sqrt((double)d);
    StateVector out(d, Complex{1.0 / std::sqrt(2 * root_d * (1 + root_d)), 0});
    out[0] = std::sqrt((1 + root_d) / (2 * root_d));
    if (std::abs(norm(out) - 1.0) > kExactTol) {
        throw Error(ErrorCode::Internal, "theta state is not normalized");
    }
    return out;
}

}  // namespace frustgraph
