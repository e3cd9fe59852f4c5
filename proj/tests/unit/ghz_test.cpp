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

#include "qubench/bench/ghz.hpp"

#include "qubench/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qubench;

namespace {

std::vector<ParityScan> exact_scans(std::size_t n) {
    std::vector<ParityScan> scans;
    for (double phi : ghz_scan_phases(n)) {
        scans.push_back({phi, Distribution::exact_from(run(make_ghz_parity_circuit(n, phi)))});
    }
    return scans;
}

// 50/50 classical mixture of |0^n> and |1^n>, measured through the same
// analyzer rotations as the parity circuits.
Distribution mixture(std::size_t n, std::optional<double> phi) {
    Distribution d;
    d.n_bits = n;
    for (int branch = 0; branch < 2; ++branch) {
        Circuit c(n);
        if (branch == 1) {
            for (Qubit q = 0; q < n; ++q) c.add(Gate::x(q));
        }
        if (phi) {
            for (Qubit q = 0; q < n; ++q) c.add(Gate::rz(q, *phi));
            for (Qubit q = 0; q < n; ++q) c.add(Gate::h(q));
        }
        const auto probs = run(c).probabilities();
        for (std::uint64_t i = 0; i < probs.size(); ++i) {
            if (probs[i] > 0) d.probs[to_bitstring(i, n)] += 0.5 * probs[i];
        }
    }
    return d;
}

}  // namespace

TEST(Ghz, Construction) {
    EXPECT_EQ(gate_counts(make_ghz(6)), (GateCounts{1, 5, 6}));
    EXPECT_THROW(make_ghz(1), Error);
    const StateVector sv = run(make_ghz(10));
    EXPECT_NEAR(probability(sv, std::string(10, '0')), 0.5, 1e-12);
    EXPECT_NEAR(probability(sv, std::string(10, '1')), 0.5, 1e-12);
    const StateVector three = run(make_ghz(3));
    EXPECT_NEAR(std::abs(three.amplitude(0) - 1 / std::sqrt(2.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(three.amplitude(7) - 1 / std::sqrt(2.0)), 0.0, 1e-12);
}

TEST(Ghz, ParityOscillatesAsCosine) {
    for (std::size_t n : {2U, 3U, 6U}) {
        for (double phi : {0.0, 0.3, 1.1, 2.0}) {
            const Distribution d = Distribution::exact_from(run(make_ghz_parity_circuit(n, phi)));
            EXPECT_NEAR(parity(d), std::cos(static_cast<double>(n) * phi), 1e-12);
        }
    }
}

TEST(Ghz, IdealFidelityIsOne) {
    for (std::size_t n = 2; n <= 10; ++n) {
        const Estimate f = ghz_fidelity(Distribution::exact_from(run(make_ghz(n))), exact_scans(n));
        EXPECT_NEAR(f.value, 1.0, 1e-9) << "n=" << n;
        EXPECT_EQ(f.err, 0.0);
    }
}

TEST(Ghz, DephasedMixtureGivesOneHalf) {
    const std::size_t n = 4;
    std::vector<ParityScan> scans;
    for (double phi : ghz_scan_phases(n)) scans.push_back({phi, mixture(n, phi)});
    const Estimate f = ghz_fidelity(mixture(n, std::nullopt), scans);
    EXPECT_NEAR(f.value, 0.5, 1e-9);
}

TEST(Ghz, UniformCountsGiveInverseDimension) {
    const std::size_t n = 5;
    CountsTable uniform(n);
    for (std::uint64_t i = 0; i < 32; ++i) uniform.add(to_bitstring(i, n), 10);
    std::vector<std::pair<double, CountsTable>> scans;
    for (double phi : ghz_scan_phases(n)) scans.emplace_back(phi, uniform);
    const Estimate f = ghz_fidelity(uniform, scans);
    EXPECT_NEAR(f.value, 1.0 / 32.0, 1e-12);
}

TEST(Ghz, SampledIdealNearOne) {
    const std::size_t n = 6;
    const CountsTable pop = sample(run(make_ghz(n)), 20000, 1);
    std::vector<std::pair<double, CountsTable>> scans;
    std::uint64_t seed = 2;
    for (double phi : ghz_scan_phases(n)) scans.emplace_back(phi, sample(run(make_ghz_parity_circuit(n, phi)), 20000, seed++));
    const Estimate f = ghz_fidelity(pop, scans);
    EXPECT_GT(f.err, 0.0);
    EXPECT_NEAR(f.value, 1.0, 5 * f.err + 1e-3);
    EXPECT_LE(f.value, 1.0);
}

TEST(Ghz, StaysInUnitIntervalForRandomRecords) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint64_t> count(0, 9);
    const std::size_t n = 3;
    for (int trial = 0; trial < 100; ++trial) {
        auto random_table = [&] {
            CountsTable t(n);
            for (std::uint64_t i = 0; i < 8; ++i) t.add(to_bitstring(i, n), count(rng));
            t.add("000");
            return t;
        };
        std::vector<std::pair<double, CountsTable>> scans;
        for (double phi : ghz_scan_phases(n)) scans.emplace_back(phi, random_table());
        const Estimate f = ghz_fidelity(random_table(), scans);
        EXPECT_GE(f.value, 0.0);
        EXPECT_LE(f.value, 1.0);
    }
}

TEST(Ghz, MissingScanSettings) {
    auto scans = exact_scans(4);
    scans.pop_back();
    try {
        ghz_fidelity(Distribution::exact_from(run(make_ghz(4))), scans);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingScanSettings);
    }
    auto shifted = exact_scans(4);
    shifted[1].phi += 0.01;
    EXPECT_THROW(ghz_fidelity(Distribution::exact_from(run(make_ghz(4))), shifted), Error);
}
