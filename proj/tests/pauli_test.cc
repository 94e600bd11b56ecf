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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>

#include "frustgraph/error.h"
#include "test_util.h"

namespace frustgraph {
namespace {

using testing::random_pauli;
using testing::X;
using testing::Z;
using Mat = Eigen::MatrixXcd;

// Test-side realization built from the textbook shift and clock matrices.
Mat shift(uint32_t d) {
    Mat m = Mat::Zero(d, d);
    for (uint32_t j = 0; j < d; j++) {
        m((j + 1) % d, j) = 1;
    }
    return m;
}

Mat clock(uint32_t d) {
    Mat m = Mat::Zero(d, d);
    for (uint32_t j = 0; j < d; j++) {
        m(j, j) = std::polar(1.0, 2 * std::numbers::pi * j / d);
    }
    return m;
}

Mat mat_pow(const Mat &m, int64_t e) {
    Mat out = Mat::Identity(m.rows(), m.cols());
    for (int64_t i = 0; i < e; i++) {
        out = out * m;
    }
    return out;
}

Mat realize(const PauliOperator &p) {
    const uint32_t d = p.d();
    Mat out = Mat::Identity(1, 1);
    for (size_t s = 0; s < p.n_sites(); s++) {
        Mat site = mat_pow(shift(d), p.x()[s]) * mat_pow(clock(d), p.z()[s]);
        Mat next = Eigen::kroneckerProduct(out, site).eval();
        out = next;
    }
    double big_d = d == 2 ? 4 : d;
    return out * std::polar(1.0, 2 * std::numbers::pi * p.phase_exp() / big_d);
}

double diff(const Mat &a, const Mat &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

void expect_error(ErrorCode code, auto &&fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << error_code_name(code);
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

TEST(Multiply, Examples) {
    EXPECT_EQ(Z(3) * X(3), PauliOperator(3, {1}, {1}, 1));
    EXPECT_TRUE((X(2) * X(2)).is_identity());
    PauliOperator xz(2, {1}, {1});
    PauliOperator sq = xz * xz;
    EXPECT_TRUE(sq.is_scalar());
    EXPECT_EQ(sq.phase_exp(), 2u);  // i^2 = -1
    expect_error(ErrorCode::DimensionMismatch, [] { X(2) * X(3); });
    expect_error(ErrorCode::DimensionMismatch, [] { X(2) * PauliOperator::identity(2, 2); });
}

TEST(Multiply, DenseOracleAgrees) {
    EXPECT_LT(diff(realize(Z(3) * X(3)), realize(Z(3)) * realize(X(3))), 1e-12);
    PauliOperator xz(2, {1}, {1});
    EXPECT_LT(diff(realize(xz * xz), -Mat::Identity(2, 2)), 1e-12);
}

TEST(CommutatorExponent, Examples) {
    for (uint32_t d : {2u, 3u, 5u, 7u}) {
        EXPECT_EQ(commutator_exponent(X(d), Z(d)).value(), d - 1);
        EXPECT_EQ(commutator_exponent(X(d), X(d)).value(), 0u);
    }
    EXPECT_EQ(commutator_exponent(X(3).with_phase(2), Z(3)).value(), 2u);
}

TEST(CommutatorExponent, AntisymmetricAndBilinear) {
    std::mt19937_64 rng(21);
    for (uint32_t d : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 200; trial++) {
            size_t n = 1 + rng() % 4;
            PauliOperator p = random_pauli(d, n, rng);
            PauliOperator p2 = random_pauli(d, n, rng);
            PauliOperator q = random_pauli(d, n, rng);
            uint32_t pq = commutator_exponent(p, q).value();
            uint32_t qp = commutator_exponent(q, p).value();
            ASSERT_EQ((pq + qp) % d, 0u);
            ASSERT_EQ(
                commutator_exponent(p * p2, q).value(), (pq + commutator_exponent(p2, q).value()) % d);
        }
    }
}

TEST(CommutatorExponent, MatchesDenseGroupCommutator) {
    std::mt19937_64 rng(22);
    for (uint32_t d : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 60; trial++) {
            size_t n = 1 + rng() % 2;
            PauliOperator p = random_pauli(d, n, rng);
            PauliOperator q = random_pauli(d, n, rng);
            Mat mp = realize(p);
            Mat mq = realize(q);
            Mat group_comm = mp * mq * mp.inverse() * mq.inverse();
            double angle = 2 * std::numbers::pi * commutator_exponent(p, q).value() / d;
            Mat expected = Mat::Identity(mp.rows(), mp.cols()) * std::polar(1.0, angle);
            ASSERT_LT(diff(group_comm, expected), 1e-12) << p.str() << " / " << q.str();
        }
    }
}

TEST(Power, Examples) {
    for (uint32_t d : {2u, 3u, 5u}) {
        EXPECT_TRUE(power(X(d), d).is_identity());
        EXPECT_TRUE(power(X(d), 0).is_identity());
    }
    PauliOperator sq = power(PauliOperator(2, {1}, {1}), 2);
    EXPECT_TRUE(sq.is_scalar());
    EXPECT_EQ(sq.phase_exp(), 2u);
    EXPECT_LT(diff(realize(sq), -Mat::Identity(2, 2)), 1e-12);
}

TEST(Power, MatchesDensePowersIncludingNegative) {
    std::mt19937_64 rng(23);
    for (uint32_t d : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 40; trial++) {
            PauliOperator p = random_pauli(d, 1 + rng() % 2, rng);
            int64_t m = (int64_t)(rng() % 13) - 6;
            Mat mp = realize(p);
            Mat expected = m >= 0 ? mat_pow(mp, m) : mat_pow(mp.inverse(), -m);
            ASSERT_LT(diff(realize(power(p, m)), expected), 1e-10) << p.str() << "^" << m;
        }
    }
}

TEST(CanonicalUnitPhase, Examples) {
    PauliOperator y = canonical_unit_phase(PauliOperator(2, {1}, {1}));
    EXPECT_EQ(y.phase_exp(), 1u);
    Mat pauli_y(2, 2);
    pauli_y << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
    EXPECT_LT(diff(realize(y), pauli_y), 1e-12);
    for (uint32_t d : {2u, 3u, 5u}) {
        EXPECT_EQ(canonical_unit_phase(X(d)), X(d));
    }
    PauliOperator xz3 = canonical_unit_phase(PauliOperator(3, {1}, {1}, 2));
    EXPECT_EQ(xz3.phase_exp(), 0u);
    EXPECT_LT(diff(mat_pow(realize(xz3), 3), Mat::Identity(3, 3)), 1e-12);
}

TEST(CanonicalUnitPhase, DthPowerIsIdentity) {
    std::mt19937_64 rng(24);
    for (uint32_t d : {2u, 3u, 5u, 7u, 11u}) {
        for (int trial = 0; trial < 200; trial++) {
            PauliOperator p = canonical_unit_phase(random_pauli(d, 1 + rng() % 5, rng));
            ASSERT_TRUE(power(p, d).is_identity()) << p.str();
        }
    }
}

TEST(Restrict, Examples) {
    PauliOperator g1(2, {1, 0, 0, 0, 0}, {0, 1, 1, 1, 0});
    EXPECT_EQ(restrict_to(g1, SiteSubset({1})), X(2));
    PauliOperator p(3, {1, 2, 0}, {2, 1, 1}, 1);
    EXPECT_EQ(restrict_to(p, SiteSubset({1, 2, 3})), canonical_unit_phase(p));
    EXPECT_TRUE(restrict_to(PauliOperator::identity(5, 4), SiteSubset({2, 4})).is_identity());
    expect_error(ErrorCode::BadSubset, [&] { restrict_to(p, SiteSubset({4})); });
    expect_error(ErrorCode::BadSubset, [] { SiteSubset(std::vector<size_t>{}); });
    expect_error(ErrorCode::BadSubset, [] { SiteSubset({0}); });
}

TEST(Restrict, BipartitionConsistency) {
    std::mt19937_64 rng(25);
    for (uint32_t d : {2u, 3u, 5u}) {
        int checked = 0;
        while (checked < 200) {
            size_t n = 2 + rng() % 4;
            PauliOperator p = random_pauli(d, n, rng);
            PauliOperator q = random_pauli(d, n, rng);
            if (commutator_exponent(p, q).value() != 0) {
                continue;
            }
            std::vector<size_t> sites{1};
            for (size_t s = 2; s < n; s++) {
                if (rng() & 1) {
                    sites.push_back(s);
                }
            }
            SiteSubset side(sites);
            SiteSubset rest = side.complement(n);
            uint32_t on_side = commutator_exponent(restrict_to(p, side), restrict_to(q, side)).value();
            uint32_t on_rest = commutator_exponent(restrict_to(p, rest), restrict_to(q, rest)).value();
            ASSERT_EQ((on_side + on_rest) % d, 0u);
            ASSERT_TRUE(power(restrict_to(p, side), d).is_identity());
            checked++;
        }
    }
}

TEST(SiteSubsetTest, Normalization) {
    SiteSubset s({3, 1, 3});
    EXPECT_EQ(s.indices(), (std::vector<size_t>{1, 3}));
    EXPECT_EQ(s.str(), "{1,3}");
    EXPECT_EQ(s.complement(4).indices(), (std::vector<size_t>{2, 4}));
    expect_error(ErrorCode::BadSubset, [] { SiteSubset({1, 2}).check_bipartition(2); });
    SiteSubset({1}).check_bipartition(2);
}

TEST(Str, Tokens) {
    EXPECT_EQ(PauliOperator(3, {1, 0, 2}, {1, 0, 0}, 2).str(), "w^2 X^1Z^1 I X^2");
    EXPECT_EQ(PauliOperator(2, {0}, {1}).str(), "Z");
}

}  // namespace
}  // namespace frustgraph
