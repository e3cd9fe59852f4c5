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

#include "qubench/circuit.hpp"

#include "qubench/error.hpp"
#include "reference.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

using namespace qubench;
using qubench::testing::cd;

namespace {

// Longest chain of the conflict DAG by an O(g^2) scan over gate pairs.
std::size_t longest_chain(const Circuit& c) {
    const auto& g = c.gates();
    std::vector<std::size_t> chain(g.size(), 1);
    std::size_t best = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            bool shares = false;
            for (Qubit a : g[i].targets()) {
                for (Qubit b : g[j].targets()) shares |= a == b;
            }
            if (shares) chain[j] = std::max(chain[j], chain[i] + 1);
        }
        best = std::max(best, chain[j]);
    }
    return best;
}

Circuit qft_reference_matrix_free(std::size_t n) {
    Circuit c(n);
    for (std::size_t j = n; j-- > 0;) {
        c.add(Gate::h(static_cast<Qubit>(j)));
        for (std::size_t m = j; m-- > 0;) {
            c.add(Gate::cphase(static_cast<Qubit>(j), static_cast<Qubit>(m),
                               2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - m + 1))));
        }
    }
    for (std::size_t i = 0; i < n / 2; ++i) c.add(Gate::swap(static_cast<Qubit>(i), static_cast<Qubit>(n - 1 - i)));
    return c;
}

}  // namespace

TEST(Gate, ArityAndParameters) {
    for (GateKind k : {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z, GateKind::RX, GateKind::RY, GateKind::RZ}) {
        EXPECT_EQ(arity(k), 1);
    }
    for (GateKind k : {GateKind::CPHASE, GateKind::CNOT, GateKind::CZ, GateKind::SWAP}) EXPECT_EQ(arity(k), 2);
    EXPECT_TRUE(is_parameterized(GateKind::RX));
    EXPECT_TRUE(is_parameterized(GateKind::CPHASE));
    EXPECT_FALSE(is_parameterized(GateKind::CNOT));
    EXPECT_EQ(parse_gate_name("CPHASE"), GateKind::CPHASE);
    EXPECT_FALSE(parse_gate_name("TOFFOLI").has_value());
}

TEST(Circuit, RejectsInvalidGates) {
    Circuit c(3);
    EXPECT_THROW(c.add(Gate::h(3)), Error);
    EXPECT_THROW(c.add(Gate::cnot(1, 1)), Error);
    EXPECT_THROW(c.add(Gate::cz(0, 5)), Error);
    EXPECT_THROW(Circuit(0), Error);
    EXPECT_TRUE(c.empty());
}

TEST(Circuit, ComposeNeedsEqualWidth) {
    Circuit a(2), b(3);
    try {
        compose(a, b);
        FAIL() << "expected a throw";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
}

TEST(Depth, Examples) {
    Circuit bell(2);
    bell.add(Gate::h(0)).add(Gate::cnot(0, 1));
    EXPECT_EQ(depth(bell), 2U);
    EXPECT_EQ(depth(Circuit(4)), 0U);
    Circuit c(2);
    c.add(Gate::h(0)).add(Gate::h(1)).add(Gate::cnot(0, 1));
    EXPECT_EQ(depth(c), 2U);
    EXPECT_EQ(longest_chain(c), 2U);
}

TEST(Depth, MatchesConflictDagOracle) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const Circuit c = qubench::testing::random_circuit(n, trial % 25, rng);
        ASSERT_EQ(depth(c), longest_chain(c)) << to_text(c);
    }
}

TEST(Depth, SubadditiveUnderCompose) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const Circuit a = qubench::testing::random_circuit(5, 12, rng);
        const Circuit b = qubench::testing::random_circuit(5, 9, rng);
        EXPECT_LE(depth(compose(a, b)), depth(a) + depth(b));
    }
}

TEST(GateCounts, Examples) {
    Circuit bell(2);
    bell.add(Gate::h(0)).add(Gate::cnot(0, 1));
    EXPECT_EQ(gate_counts(bell), (GateCounts{1, 1, 2}));

    Circuit ghz(10);
    ghz.add(Gate::h(0));
    for (Qubit q = 1; q < 10; ++q) ghz.add(Gate::cnot(0, q));
    EXPECT_EQ(gate_counts(ghz), (GateCounts{1, 9, 10}));

    EXPECT_EQ(gate_counts(qft_reference_matrix_free(6)), (GateCounts{6, 18, 24}));
}

TEST(Inverse, Examples) {
    Circuit h(1);
    h.add(Gate::h(0));
    EXPECT_EQ(inverse(h), h);

    Circuit c(2);
    c.add(Gate::rz(0, std::numbers::pi / 4)).add(Gate::cnot(0, 1));
    Circuit expected(2);
    expected.add(Gate::cnot(0, 1)).add(Gate::rz(0, -std::numbers::pi / 4));
    EXPECT_EQ(inverse(c), expected);
}

TEST(Unitary, SingleGateExamples) {
    Circuit x(1);
    x.add(Gate::x(0));
    Eigen::Matrix2cd xm;
    xm << 0, 1, 1, 0;
    EXPECT_LT((to_unitary(x) - xm).cwiseAbs().maxCoeff(), 1e-15);

    Circuit h(1);
    h.add(Gate::h(0));
    Eigen::Matrix2cd hm;
    hm << 1, 1, 1, -1;
    hm /= std::sqrt(2.0);
    EXPECT_LT((to_unitary(h) - hm).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Unitary, QftEntryFromDefinition) {
    // |x> -> 8^{-1/2} sum_y e^{2 pi i x y / 8} |y>.
    const Matrix u = to_unitary(qft_reference_matrix_free(3));
    const cd expected = std::polar(1.0 / std::sqrt(8.0), 2.0 * std::numbers::pi * 15.0 / 8.0);
    EXPECT_LT(std::abs(u(5, 3) - expected), 1e-12);
}

TEST(Unitary, MatchesIndependentEmbedding) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const Circuit c = qubench::testing::random_circuit(n, 15, rng);
        EXPECT_LT((to_unitary(c) - qubench::testing::reference_unitary(c)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Unitary, IsUnitaryAndInverseIsAdjoint) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const Circuit c = qubench::testing::random_circuit(4, 20, rng);
        const Matrix u = to_unitary(c);
        const Matrix id = Matrix::Identity(16, 16);
        EXPECT_LT((u.adjoint() * u - id).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT((to_unitary(inverse(c)) - u.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT((to_unitary(compose(c, inverse(c))) - id).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Unitary, WidthGuard) {
    try {
        to_unitary(Circuit(11));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WidthExceeded);
    }
}

TEST(Text, RoundTripsExactly) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Circuit c = qubench::testing::random_circuit(6, 30, rng);
        EXPECT_EQ(parse_circuit(to_text(c)), c);
    }
}

TEST(Text, ParsesCommentsAndReportsLine) {
    const Circuit c = parse_circuit("# bell\nqubits=2\n\nH 0\nCNOT 0,1  # entangle\n");
    EXPECT_EQ(c.size(), 2U);
    try {
        parse_circuit("qubits=2\nH 0\nFOO 1\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
        EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
    }
    EXPECT_THROW(parse_circuit("H 0\n"), Error);
    EXPECT_THROW(parse_circuit("qubits=2\nRZ 0\n"), Error);
}

TEST(Relabel, KeepsActiveQubits) {
    Circuit c(8);
    c.add(Gate::h(2)).add(Gate::cnot(2, 6)).add(Gate::rz(6, 0.3));
    EXPECT_EQ(active_qubits(c), (std::vector<Qubit>{2, 6}));
    const Circuit r = relabel(c, {2, 6});
    Circuit expected(2);
    expected.add(Gate::h(0)).add(Gate::cnot(0, 1)).add(Gate::rz(1, 0.3));
    EXPECT_EQ(r, expected);
    EXPECT_THROW(relabel(c, {2}), Error);
}
