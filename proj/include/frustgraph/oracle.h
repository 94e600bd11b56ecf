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

#ifndef FRUSTGRAPH_ORACLE_H
#define FRUSTGRAPH_ORACLE_H

// Dense complex-matrix checks of the closed forms. Everything here is
// brute force and meant for small registers only.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "frustgraph/group.h"
#include "frustgraph/pauli.h"
#include "frustgraph/stabilizer.h"

namespace frustgraph {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

// Named tolerances, reported by the test suites.
constexpr double kExactTol = 1e-12;
constexpr double kBoundTol = 1e-9;
constexpr double kOverlapTol = 1e-6;

constexpr size_t kDensePauliDimCap = 4096;
constexpr size_t kSumEigenDimCap = 1024;
constexpr size_t kOverlapDimCap = 1024;
constexpr uint32_t kSwapMaxDim = 11;

class DenseOperator {
   public:
    explicit DenseOperator(size_t dim);
    static DenseOperator identity(size_t dim);

    size_t dim() const noexcept {
        return dim_;
    }
    Complex &operator()(size_t r, size_t c) {
        return entries_[r * dim_ + c];
    }
    Complex operator()(size_t r, size_t c) const {
        return entries_[r * dim_ + c];
    }

    DenseOperator adjoint() const;
    DenseOperator kron(const DenseOperator &other) const;
    StateVector apply(const StateVector &v) const;

    DenseOperator operator*(const DenseOperator &other) const;
    DenseOperator operator+(const DenseOperator &other) const;
    DenseOperator operator*(Complex scale) const;

    double max_abs_diff(const DenseOperator &other) const;
    double frobenius_norm() const;
    bool is_hermitian(double tol = kExactTol) const;
    bool is_unitary(double tol = kExactTol) const;

   private:
    size_t dim_;
    std::vector<Complex> entries_;
};

struct OptimizerConfig {
    size_t restarts = 32;
    size_t max_iters = 500;
    double tol = 1e-9;
    uint64_t seed = 0;

    /// Throws InvalidConfig unless restarts >= 1 and tol > 0.
    void check() const;
};

/// Independent generator for stream `stream` of a run seeded with `seed`.
std::mt19937_64 stream_rng(uint64_t seed, uint64_t stream);
StateVector random_unit_vector(size_t dim, std::mt19937_64 &rng);

/// zeta^m with zeta = exp(2 pi i / order), exact at quarter turns.
Complex root_of_unity(uint64_t m, uint32_t order);

/// Throws TooLarge when d^n_sites exceeds kDensePauliDimCap.
DenseOperator dense_pauli(const PauliOperator &p);
/// P |v>, without materializing P. Site 1 is the most significant digit.
StateVector apply_pauli(const PauliOperator &p, const StateVector &v);
Complex expectation(const PauliOperator &p, const StateVector &v);

double norm(const StateVector &v);
Complex inner(const StateVector &a, const StateVector &b);

/// Eigenvalues ascending; vectors[i] pairs with values[i].
struct Eigensystem {
    std::vector<double> values;
    std::vector<StateVector> vectors;
    size_t sweeps = 0;
};

/// Cyclic complex Jacobi rotations, stopping when the off-diagonal Frobenius
/// mass drops below 1e-12 * ||H||_F.
Eigensystem hermitian_eigensystem(const DenseOperator &h);

/// Max entry of |U_SWAP - (1/d) sum_{i,j} X^i Z^j (x) (X^i Z^j)^dagger|.
double verify_swap_identity(uint32_t d);

struct SosResult {
    /// max(iterative, witness).
    double value;
    /// Best self-consistent iteration psi <- normalize(sum_A <A>^* A psi).
    double iterative;
    /// Value at a joint eigenvector of a maximal commuting subgroup.
    double witness;
    StateVector maximizer;
};

/// Maximizes sum_A |<psi|A|psi>|^2 over the group. Requires concrete generators.
SosResult max_sos(const GroupSpec &spec, const OptimizerConfig &cfg);

/// sum_A |<psi|A|psi>|^2 for the canonical-phase elements of the group.
double sum_of_squares(const GroupSpec &spec, const StateVector &psi);

/// sum_A (A + A^dagger) over the canonical-phase elements.
DenseOperator sum_hamiltonian(const GroupSpec &spec);

/// Largest eigenvalue of `sum_hamiltonian`. Throws EvenDimension or TooLarge.
double max_sum_eigenvalue(const GroupSpec &spec);

/// (1/d^k) sum over the stabilizer group, built as prod_i (1/d) sum_t g_i^t.
DenseOperator stabilizer_projector(const Stabilizer &s);

/// Alternating maximization of <phi (x) chi| P_V |phi (x) chi> across side|rest.
double max_product_overlap(const Stabilizer &s, const SiteSubset &side, const OptimizerConfig &cfg);

/// Maximizes (1/sqrt d) sum_i |a_i||a_0| over unit vectors. Throws EvenDimension.
double lagrange_extremum(uint32_t d, const OptimizerConfig &cfg);

/// Unit vector with weight sqrt((1+sqrt d)/(2 sqrt d)) on |0> and
/// 1/sqrt(2 sqrt d (1 + sqrt d)) elsewhere. Throws EvenDimension.
StateVector theta_state(uint32_t d);

}  // namespace frustgraph

#endif
