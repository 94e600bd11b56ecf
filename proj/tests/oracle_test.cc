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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "frustgraph/error.h"
#include "frustgraph/group.h"
#include "frustgraph/stabilizer.h"
#include "test_util.h"

namespace frustgraph {
namespace {

using testing::random_pauli;
using testing::X;
using testing::Z;
using Mat = Eigen::MatrixXcd;

void expect_error(ErrorCode code, auto &&fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << error_code_name(code);
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

Mat to_eigen(const DenseOperator &op) {
    Mat m(op.dim(), op.dim());
    for (size_t r = 0; r < op.dim(); r++) {
        for (size_t c = 0; c < op.dim(); c++) {
            m(r, c) = op(r, c);
        }
    }
    return m;
}

DenseOperator from_eigen(const Mat &m) {
    DenseOperator op(m.rows());
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            op(r, c) = m(r, c);
        }
    }
    return op;
}

/// Sum over i, j of X^i Z^j on one qudit, from the textbook matrices.
Mat single_site_pauli_sum(uint32_t d) {
    Mat x = Mat::Zero(d, d);
    Mat z = Mat::Zero(d, d);
    for (uint32_t j = 0; j < d; j++) {
        x((j + 1) % d, j) = 1;
        z(j, j) = std::polar(1.0, 2 * std::numbers::pi * j / d);
    }
    Mat sum = Mat::Zero(d, d);
    Mat xi = Mat::Identity(d, d);
    for (uint32_t i = 0; i < d; i++) {
        Mat zj = Mat::Identity(d, d);
        for (uint32_t j = 0; j < d; j++) {
            sum += xi * zj;
            zj = zj * z;
        }
        xi = xi * x;
    }
    return sum;
}

Stabilizer ghz3_d2() {
    return builtin_code("ghz", 2, 3);
}

TEST(DensePauli, Examples) {
    DenseOperator x2 = dense_pauli(X(2));
    EXPECT_EQ(x2(0, 1), Complex(1, 0));
    EXPECT_EQ(x2(1, 0), Complex(1, 0));
    EXPECT_EQ(x2(0, 0), Complex(0, 0));

    DenseOperator z3 = dense_pauli(Z(3));
    const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
    EXPECT_LT(std::abs(z3(1, 1) - w), 1e-15);
    EXPECT_LT(std::abs(z3(2, 2) - w * w), 1e-15);

    DenseOperator y = dense_pauli(canonical_unit_phase(PauliOperator(2, {1}, {1})));
    EXPECT_EQ(y(0, 1), Complex(0, -1));
    EXPECT_EQ(y(1, 0), Complex(0, 1));

    expect_error(ErrorCode::TooLarge, [] { dense_pauli(PauliOperator::identity(2, 13)); });
}

TEST(DensePauli, SiteOneIsMostSignificant) {
    DenseOperator xi = dense_pauli(PauliOperator(3, {1, 0}, {0, 0}));
    EXPECT_EQ(xi(3, 0), Complex(1, 0));
    EXPECT_TRUE(xi.is_unitary());
}

TEST(DensePauli, SymbolicProductsAndPowersAreFaithful) {
    std::mt19937_64 rng(61);
    for (uint32_t d : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 100; trial++) {
            size_t n = 1 + rng() % 2;
            PauliOperator p = random_pauli(d, n, rng);
            PauliOperator q = random_pauli(d, n, rng);
            DenseOperator mp = dense_pauli(p);
            ASSERT_LT(dense_pauli(p * q).max_abs_diff(mp * dense_pauli(q)), 1e-12);
            int64_t m = rng() % 7;
            DenseOperator expected = DenseOperator::identity(mp.dim());
            for (int64_t i = 0; i < m; i++) {
                expected = expected * mp;
            }
            ASSERT_LT(dense_pauli(power(p, m)).max_abs_diff(expected), 1e-12);
        }
    }
}

TEST(ApplyPauli, MatchesDenseMatrix) {
    std::mt19937_64 rng(62);
    for (uint32_t d : {2u, 3u, 5u}) {
        PauliOperator p = random_pauli(d, 3, rng);
        StateVector v = random_unit_vector(d * d * d, rng);
        StateVector a = apply_pauli(p, v);
        StateVector b = dense_pauli(p).apply(v);
        for (size_t i = 0; i < a.size(); i++) {
            ASSERT_LT(std::abs(a[i] - b[i]), 1e-12);
        }
    }
    expect_error(ErrorCode::DimensionMismatch, [] { apply_pauli(X(2), StateVector(3)); });
}

TEST(Eigensolver, AgreesWithEigenOnRandomHermitian) {
    std::mt19937_64 rng(63);
    std::normal_distribution<double> gauss;
    for (size_t n : {1u, 2u, 5u, 16u, 40u}) {
        Mat a(n, n);
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                a(r, c) = Complex(gauss(rng), gauss(rng));
            }
        }
        Mat h = a + a.adjoint();
        DenseOperator op = from_eigen(h);
        Eigensystem es = hermitian_eigensystem(op);
        Eigen::SelfAdjointEigenSolver<Mat> reference(h);
        const double scale = op.frobenius_norm();
        for (size_t i = 0; i < n; i++) {
            ASSERT_NEAR(es.values[i], reference.eigenvalues()[i], 1e-9 * scale);
            StateVector hv = op.apply(es.vectors[i]);
            double residual = 0;
            for (size_t r = 0; r < n; r++) {
                residual += std::norm(hv[r] - es.values[i] * es.vectors[i][r]);
            }
            ASSERT_LT(std::sqrt(residual), 1e-9 * scale);
            ASSERT_NEAR(norm(es.vectors[i]), 1.0, 1e-12);
        }
    }
}

TEST(Eigensolver, DegenerateAndZeroInputs) {
    Eigensystem zero = hermitian_eigensystem(DenseOperator(3));
    EXPECT_EQ(zero.values, (std::vector<double>{0, 0, 0}));
    Eigensystem id = hermitian_eigensystem(DenseOperator::identity(4) * Complex(2, 0));
    for (double v : id.values) {
        EXPECT_NEAR(v, 2.0, 1e-15);
    }
}

TEST(SwapIdentity, ExactForSmallPrimes) {
    for (uint32_t d : {2u, 3u, 5u, 7u, 11u}) {
        EXPECT_LT(verify_swap_identity(d), 1e-12) << d;
    }
    expect_error(ErrorCode::TooLarge, [] { verify_swap_identity(13); });
    expect_error(ErrorCode::NotPrime, [] { verify_swap_identity(4); });
}

TEST(MaxSos, Examples) {
    OptimizerConfig cfg;
    SosResult triple = max_sos(GroupSpec::from_generators(2, 1, {X(2), Z(2)}), cfg);
    EXPECT_NEAR(triple.value, 2.0, 1e-9);
    EXPECT_NEAR(triple.witness, 2.0, 1e-9);

    GroupSpec two_qubit = GroupSpec::from_generators(
        2, 2,
        {PauliOperator(2, {1, 0}, {0, 0}), PauliOperator(2, {0, 0}, {1, 0}), PauliOperator(2, {0, 1}, {0, 0}),
         PauliOperator(2, {0, 0}, {0, 1})});
    EXPECT_NEAR(max_sos(two_qubit, cfg).value, 4.0, 1e-9);

    SosResult trivial = max_sos(GroupSpec::from_generators(3, 1, {}), cfg);
    EXPECT_NEAR(trivial.value, 1.0, 1e-12);

    expect_error(ErrorCode::TooLarge, [&] {
        max_sos(GroupSpec::from_generators(2, 13, {PauliOperator::identity(2, 13)}), cfg);
    });
    expect_error(ErrorCode::InvalidConfig, [] {
        OptimizerConfig bad;
        bad.restarts = 0;
        max_sos(GroupSpec::from_generators(2, 1, {X(2)}), bad);
    });
}

TEST(MaxSos, SandwichOnRandomGroups) {
    std::mt19937_64 rng(64);
    OptimizerConfig cfg;
    cfg.restarts = 4;
    cfg.max_iters = 100;
    for (uint32_t d : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 8; trial++) {
            size_t n = d == 5 ? 1 + rng() % 2 : 1 + rng() % 3;
            size_t k = 1 + rng() % 3;
            std::vector<PauliOperator> gens;
            for (size_t i = 0; i < k; i++) {
                gens.push_back(canonical_unit_phase(random_pauli(d, n, rng).with_phase(0)));
            }
            GroupSpec spec = GroupSpec::from_generators(d, n, gens);
            SosResult r = max_sos(spec, cfg);
            double bound = (double)sos_bound(spec);
            ASSERT_LE(r.iterative, bound + 1e-9);
            ASSERT_NEAR(r.witness, bound, 1e-9);
            ASSERT_NEAR(sum_of_squares(spec, r.maximizer), r.value, 1e-9);
        }
    }
}

TEST(MaxSumEigenvalue, Examples) {
    const double r3 = std::sqrt(3.0);
    double xz3 = max_sum_eigenvalue(GroupSpec::from_generators(3, 1, {X(3), Z(3)}));
    EXPECT_NEAR(xz3, 3 + 3 * r3, 1e-9);
    EXPECT_NEAR(max_sum_eigenvalue(GroupSpec::from_generators(3, 1, {Z(3)})), 6.0, 1e-9);
    GroupSpec xz5 = GroupSpec::from_generators(5, 1, {X(5), Z(5)});
    EXPECT_NEAR(max_sum_eigenvalue(xz5), sum_bound(xz5), 1e-9);
    expect_error(ErrorCode::EvenDimension, [] { max_sum_eigenvalue(GroupSpec::from_generators(2, 1, {X(2)})); });
}

TEST(MaxSumEigenvalue, IndependentDiagonalization) {
    for (uint32_t d : {3u, 5u, 7u}) {
        // The element sum is d^{3/2} |+><0|, so H = S + S^dagger.
        Mat s = single_site_pauli_sum(d);
        Mat h = s + s.adjoint();
        double reference = Eigen::SelfAdjointEigenSolver<Mat>(h).eigenvalues().maxCoeff();
        double closed = std::pow(d, 1.5) * (1 + 1 / std::sqrt((double)d));
        EXPECT_NEAR(reference, closed, 1e-9);
        GroupSpec spec = GroupSpec::from_generators(d, 1, {X(d), Z(d)});
        EXPECT_NEAR(max_sum_eigenvalue(spec), reference, 1e-9);
        EXPECT_NEAR(sum_bound(spec), reference, 1e-9);
        EXPECT_LT((to_eigen(sum_hamiltonian(spec)) - h).cwiseAbs().maxCoeff(), 1e-12);
    }
}

/// |C| d^{3m/2} (1 + d^{-m/2}) with m = rank / 2: the top eigenvalue of
/// |C| (S^{(x)m} + h.c.) for S = d^{3/2} |+><0|, entangled states allowed.
double tensor_power_value(const GroupSpec &spec) {
    const double d = spec.d();
    const size_t r = rank(spec.gamma());
    const double m = r / 2.0;
    const double central = std::pow(d, (double)(spec.k() - r));
    return central * std::pow(d, 1.5 * m) * (1 + std::pow(d, -0.5 * m));
}

TEST(MaxSumEigenvalue, BoundHoldsForASinglePair) {
    std::mt19937_64 rng(65);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 40; trial++) {
        uint32_t d = trial % 2 ? 3 : 5;
        size_t n = 1 + rng() % 2;
        size_t k = 1 + rng() % 4;
        std::vector<PauliOperator> gens;
        for (size_t i = 0; i < k; i++) {
            gens.push_back(random_pauli(d, n, rng));
        }
        GroupSpec spec = GroupSpec::from_generators(d, n, gens);
        if (rank(spec.gamma()) > 2) {
            continue;
        }
        ASSERT_LE(max_sum_eigenvalue(spec), sum_bound(spec) + 1e-9);
        checked++;
    }
    EXPECT_EQ(checked, 40);
}

TEST(MaxSumEigenvalue, NeverExceedsTensorPowerValue) {
    std::mt19937_64 rng(66);
    for (uint32_t d : {3u, 5u}) {
        for (int trial = 0; trial < 30; trial++) {
            size_t n = 1 + rng() % 2;
            size_t k = 1 + rng() % 5;
            std::vector<PauliOperator> gens;
            for (size_t i = 0; i < k; i++) {
                gens.push_back(random_pauli(d, n, rng));
            }
            GroupSpec spec = GroupSpec::from_generators(d, n, gens);
            ASSERT_LE(max_sum_eigenvalue(spec), tensor_power_value(spec) + 1e-9);
        }
    }
}

TEST(MaxSumEigenvalue, ClosedFormBoundFailsForTwoPairs) {
    // Full two-qutrit Pauli group: rank 4, trivial centre. The entangled top
    // eigenvector of S (x) S + h.c. beats every product state.
    GroupSpec spec = GroupSpec::from_generators(
        3, 2,
        {PauliOperator(3, {1, 0}, {0, 0}), PauliOperator(3, {0, 0}, {1, 0}), PauliOperator(3, {0, 1}, {0, 0}),
         PauliOperator(3, {0, 0}, {0, 1})});
    double lambda = max_sum_eigenvalue(spec);
    EXPECT_NEAR(lambda, 36.0, 1e-9);
    EXPECT_NEAR(tensor_power_value(spec), 36.0, 1e-12);
    EXPECT_NEAR(sum_bound(spec), 18 * (2 + std::sqrt(3.0)) / 2, 1e-9);
    EXPECT_GT(lambda, sum_bound(spec) + 1);

    // The product state |theta>|theta> reaches exactly the closed form.
    StateVector theta = theta_state(3);
    StateVector pair(9);
    for (size_t i = 0; i < 9; i++) {
        pair[i] = theta[i / 3] * theta[i % 3];
    }
    EXPECT_NEAR(inner(pair, sum_hamiltonian(spec).apply(pair)).real(), sum_bound(spec), 1e-9);
}

TEST(StabilizerProjector, IsProjectorOfRankDToTheNMinusK) {
    Stabilizer five = builtin_code("five_qudit", 2, 5);
    DenseOperator p = stabilizer_projector(five);
    EXPECT_LT((p * p).max_abs_diff(p), 1e-12);
    EXPECT_TRUE(p.is_hermitian());
    Complex trace = 0;
    for (size_t i = 0; i < p.dim(); i++) {
        trace += p(i, i);
    }
    EXPECT_NEAR(trace.real(), 2.0, 1e-12);
}

TEST(MaxProductOverlap, Examples) {
    OptimizerConfig cfg;
    cfg.restarts = 8;
    EXPECT_NEAR(max_product_overlap(ghz3_d2(), SiteSubset({1}), cfg), 0.5, 1e-6);
    Stabilizer product(2, 2, {PauliOperator(2, {0, 0}, {1, 0}), PauliOperator(2, {0, 0}, {0, 1})});
    EXPECT_NEAR(max_product_overlap(product, SiteSubset({1}), cfg), 1.0, 1e-6);
    Stabilizer five = builtin_code("five_qudit", 2, 5);
    EXPECT_NEAR(max_product_overlap(five, SiteSubset({1, 2}), cfg), 0.25, 1e-6);
    expect_error(ErrorCode::BadSubset, [&] { max_product_overlap(five, SiteSubset({1, 2, 3, 4, 5}), cfg); });
    expect_error(ErrorCode::TooLarge, [&] { max_product_overlap(builtin_code("ghz", 2, 11), SiteSubset({1}), cfg); });
}

TEST(MaxProductOverlap, MatchesClosedFormForSmallQubitStabilizers) {
    OptimizerConfig cfg;
    cfg.restarts = 8;
    for (size_t n : {2u, 3u, 4u}) {
        Stabilizer ghz = builtin_code("ghz", 2, n);
        for (const auto &side : enumerate_bipartitions(n)) {
            BipartitionReport rep = gm_measure(ghz, side);
            double overlap = max_product_overlap(ghz, side, cfg);
            EXPECT_NEAR(1 - overlap, rep.gm.real(), 1e-6) << side.str();
        }
    }
}

TEST(MaxProductOverlap, ReproducibleForFixedSeed) {
    OptimizerConfig cfg;
    cfg.restarts = 3;
    cfg.seed = 99;
    Stabilizer s = builtin_code("ghz", 3, 3);
    EXPECT_EQ(max_product_overlap(s, SiteSubset({1, 3}), cfg), max_product_overlap(s, SiteSubset({1, 3}), cfg));
}

TEST(LagrangeExtremum, MatchesClosedForm) {
    OptimizerConfig cfg;
    EXPECT_NEAR(lagrange_extremum(3, cfg), 0.7886751, 1e-6);
    EXPECT_NEAR(lagrange_extremum(5, cfg), 0.7236068, 1e-6);
    EXPECT_NEAR(lagrange_extremum(7, cfg), 0.6889822, 1e-6);
    for (uint32_t d : {3u, 5u, 7u, 11u, 13u}) {
        EXPECT_NEAR(lagrange_extremum(d, cfg), (1 + 1 / std::sqrt((double)d)) / 2, 1e-6);
    }
    expect_error(ErrorCode::EvenDimension, [&] { lagrange_extremum(2, cfg); });
}

TEST(ThetaState, Coefficients) {
    StateVector theta = theta_state(3);
    EXPECT_NEAR(theta[0].real(), 0.8881, 1e-4);
    EXPECT_NEAR(theta[1].real(), 0.3251, 1e-4);
    EXPECT_NEAR(theta[2].real(), 0.3251, 1e-4);
    for (uint32_t d : {3u, 5u, 7u, 11u}) {
        EXPECT_NEAR(norm(theta_state(d)), 1.0, 1e-12);
    }
    expect_error(ErrorCode::EvenDimension, [] { theta_state(2); });
}

TEST(ThetaState, SaturatesSingleSiteSum) {
    for (uint32_t d : {3u, 5u, 7u}) {
        StateVector theta = theta_state(d);
        Eigen::VectorXcd v(d);
        for (uint32_t i = 0; i < d; i++) {
            v[i] = theta[i];
        }
        Complex total = v.dot(single_site_pauli_sum(d) * v);
        EXPECT_NEAR(total.real(), d / 2.0 * (1 + std::sqrt((double)d)), 1e-12);
        EXPECT_NEAR(total.imag(), 0.0, 1e-12);
    }
    EXPECT_NEAR(1.5 * (1 + std::sqrt(3.0)), 4.098076211, 1e-9);
}

TEST(OptimizerConfigTest, Validation) {
    OptimizerConfig cfg;
    cfg.check();
    cfg.tol = 0;
    expect_error(ErrorCode::InvalidConfig, [&] { cfg.check(); });
}

TEST(RootOfUnity, ExactQuarterTurns) {
    EXPECT_EQ(root_of_unity(1, 4), Complex(0, 1));
    EXPECT_EQ(root_of_unity(6, 4), Complex(-1, 0));
    EXPECT_EQ(root_of_unity(0, 7), Complex(1, 0));
}

}  // namespace
}  // namespace frustgraph
