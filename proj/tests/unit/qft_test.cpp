// Copyright 2026 The qubench Authors
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

#include "qubench/bench/qft.hpp"

#include "qubench/error.hpp"

#include <Eigen/SVD>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace qubench;

namespace {

// F[y][x] = 2^{-n/2} exp(2 pi i x y / 2^n), written down directly.
Matrix dft_matrix(std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    Matrix f(dim, dim);
    for (std::size_t y = 0; y < dim; ++y) {
        for (std::size_t x = 0; x < dim; ++x) {
            const double phase = 2.0 * std::numbers::pi * static_cast<double>((x * y) % dim) / static_cast<double>(dim);
            f(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) =
                std::polar(1.0 / std::sqrt(static_cast<double>(dim)), phase);
        }
    }
    return f;
}

double svd_norm(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

std::size_t count_cphase(const Circuit& c) {
    std::size_t k = 0;
    for (const auto& g : c) k += g.kind == GateKind::CPHASE;
    return k;
}

}  // namespace

TEST(Qft, MatchesDefinitionEntrywise) {
    for (std::size_t n = 1; n <= 8; ++n) {
        EXPECT_LT((to_unitary(make_qft(n)) - dft_matrix(n)).cwiseAbs().maxCoeff(), 1e-10) << "n=" << n;
    }
}

TEST(Qft, GateCounts) {
    EXPECT_EQ(gate_counts(make_qft(6)), (GateCounts{6, 18, 24}));
    EXPECT_EQ(count_cphase(make_qft(6)), 15U);
}

TEST(Qft, ZeroInputGivesUniform) {
    for (std::size_t n : {3U, 7U}) {
        for (double p : run(make_qft(n)).probabilities()) EXPECT_NEAR(p, std::ldexp(1.0, -static_cast<int>(n)), 1e-12);
    }
}

TEST(Qft, ThresholdDropsSmallRotations) {
    const std::size_t n = 6;
    // Angle 2 pi / 2^k appears n - k + 1 times (k = 2..n).
    for (std::size_t k = 2; k <= n; ++k) {
        const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(k));
        std::size_t dropped = 0;
        for (std::size_t j = k; j <= n; ++j) dropped += n - j + 1;
        EXPECT_EQ(count_cphase(make_qft(n, angle * 1.0001)), 15U - dropped) << "k=" << k;
    }
    // Just above the k = 6 angle only its single instance goes.
    EXPECT_EQ(count_cphase(make_qft(6, 2.0 * std::numbers::pi / 64.0 * 1.0001)), 14U);
    EXPECT_EQ(count_cphase(make_qft(6, 4.0)), 0U);
    EXPECT_THROW(make_qft(0), Error);
    EXPECT_THROW(make_qft(3, -0.1), Error);
}

TEST(Aqft, ZeroThresholdIsExact) {
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(aqft_error(n, 0.0), 0.0);
}

TEST(Aqft, AllDroppedTwoQubitsMatchesSvd) {
    const double eps = aqft_error(2, 4.0);
    const Matrix diff = to_unitary(make_qft(2)) - to_unitary(make_qft(2, 4.0));
    EXPECT_NEAR(eps, svd_norm(diff), 1e-8);
    EXPECT_GT(eps, 0.0);
}

TEST(Aqft, MatchesSvd) {
    for (std::size_t n = 3; n <= 6; ++n) {
        for (int step = 0; step < 10; ++step) {
            const double threshold = std::numbers::pi * static_cast<double>(step) / 9.0 * 1.05;
            const Matrix diff = dft_matrix(n) - to_unitary(make_qft(n, threshold));
            EXPECT_NEAR(aqft_error(n, threshold), svd_norm(diff), 1e-8) << "n=" << n << " threshold=" << threshold;
        }
    }
}

// Thresholds just above each rotation angle 2 pi / 2^k, smallest first.
std::vector<double> level_errors(std::size_t n) {
    std::vector<double> out;
    for (std::size_t k = n; k >= 2; --k) {
        out.push_back(aqft_error(n, 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(k)) * 1.001));
    }
    return out;
}

TEST(Aqft, GrowsWhileSmallRotationsAreDropped) {
    for (std::size_t n : {3U, 4U, 6U}) {
        const auto eps = level_errors(n);
        for (std::size_t i = 1; i < eps.size(); ++i) EXPECT_GE(eps[i], eps[i - 1] - 1e-12) << "n=" << n;
    }
}

// The spectral norm is bounded by 2 and is not monotone everywhere: at n=5,
// dropping the pi/2 rotations too brings the error back down slightly.
TEST(Aqft, FiveQubitDipWhenEveryRotationIsDropped) {
    const auto eps = level_errors(5);
    ASSERT_EQ(eps.size(), 4U);
    EXPECT_LT(eps[3], eps[2]);
    EXPECT_NEAR(eps[2], 1.999579, 1e-6);
    EXPECT_NEAR(eps[3], 1.998348, 1e-6);
}

TEST(Aqft, WidthGuard) {
    try {
        aqft_error(9, 0.1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WidthExceeded);
    }
}

TEST(Roundtrip, IdealReturnsInput) {
    for (std::size_t n : {1U, 4U, 6U}) {
        for (const std::string& input : {std::string(n, '0'), default_roundtrip_input(n), std::string(n, '1')}) {
            EXPECT_NEAR(probability(run(make_qft_roundtrip(n, input)), input), 1.0, 1e-9);
        }
    }
    EXPECT_EQ(default_roundtrip_input(5), "10101");
    const Matrix id = Matrix::Identity(32, 32);
    Circuit both = make_qft(5);
    both.append(inverse(make_qft(5)));
    EXPECT_LT((to_unitary(both) - id).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Roundtrip, HundredShotFidelityIsExactlyOne) {
    const std::string input = default_roundtrip_input(6);
    const auto counts = sample(run(make_qft_roundtrip(6, input)), 100, 5);
    const Estimate f = roundtrip_fidelity(Distribution::from_counts(counts), input);
    EXPECT_EQ(f.value, 1.0);
    EXPECT_EQ(f.err, 0.0);
}

TEST(Roundtrip, Errors) {
    EXPECT_THROW(make_qft_roundtrip(3, "10"), Error);
    EXPECT_THROW(make_qft_roundtrip(2, "1x"), Error);
    Distribution d;
    d.n_bits = 2;
    EXPECT_THROW(roundtrip_fidelity(d, "10"), Error);
    EXPECT_THROW(roundtrip_fidelity(d, "100"), Error);
}
