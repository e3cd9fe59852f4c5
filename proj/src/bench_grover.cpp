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

#include "qubench/bench/grover.hpp"

#include "qubench/error.hpp"
#include "qubench/execute.hpp"
#include "qubench/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace qubench {

void append_multi_controlled_z(Circuit& c, std::span<const Qubit> qubits) {
    const std::size_t k = qubits.size();
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "multi-controlled Z needs at least one qubit");
    if (k == 1) {
        c.add(Gate::z(qubits[0]));
        return;
    }
    if (k == 2) {
        c.add(Gate::cz(qubits[0], qubits[1]));
        return;
    }

    // x_t * prod(x_c) = 2^{1-m} * sum_{S != {}} (-1)^{|S|+1} x_t * parity(x_S).
    // Walk the non-empty control subsets in reflected Gray-code order; the
    // parity of S is kept on its leading (highest-order) control.
    const Qubit target = qubits[k - 1];
    const auto controls = qubits.first(k - 1);
    const std::size_t m = controls.size();
    const double angle = std::numbers::pi / std::ldexp(1.0, static_cast<int>(m - 1));

    auto bit_at = [m](std::uint64_t code, std::size_t pos) { return ((code >> (m - 1 - pos)) & 1U) != 0; };

    std::uint64_t last = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
        const std::uint64_t code = i ^ (i >> 1);
        std::size_t lead = 0;
        while (!bit_at(code, lead)) ++lead;

        if (last != 0) {
            std::size_t changed = 0;
            while (bit_at(code, changed) == bit_at(last, changed)) ++changed;
            if (changed != lead) {
                c.add(Gate::cnot(controls[changed], controls[lead]));
            } else {
                for (std::size_t p = lead + 1; p < m; ++p) {
                    if (bit_at(code, p)) c.add(Gate::cnot(controls[p], controls[lead]));
                }
            }
        }
        const bool odd = std::popcount(code) % 2 == 1;
        c.add(Gate::cphase(controls[lead], target, odd ? angle : -angle));
        last = code;
    }
}

Circuit make_grover(const GroverSpec& spec) {
    const std::size_t n = spec.n;
    if (n == 0 || n > kMaxGroverQubits) {
        throw Error(ErrorKind::InvalidArgument, "Grover search supports 1.." + std::to_string(kMaxGroverQubits) + " qubits");
    }
    if (spec.marked.size() != n) {
        throw Error(ErrorKind::LengthMismatch, "marked state '" + spec.marked + "' does not have " +
                                                   std::to_string(n) + " bits");
    }
    if (spec.marked.find_first_not_of("01") != std::string::npos) {
        throw Error(ErrorKind::InvalidArgument, "marked state may contain only '0' and '1'");
    }

    std::vector<Qubit> all(n);
    for (std::size_t q = 0; q < n; ++q) all[q] = static_cast<Qubit>(q);

    Circuit c(n);
    for (Qubit q : all) c.add(Gate::h(q));
    for (std::size_t iter = 0; iter < spec.iterations; ++iter) {
        // Oracle: phase flip on |marked>.
        for (Qubit q : all) {
            if (spec.marked[q] == '0') c.add(Gate::x(q));
        }
        append_multi_controlled_z(c, all);
        for (Qubit q : all) {
            if (spec.marked[q] == '0') c.add(Gate::x(q));
        }
        // Diffusion: H X MCZ X H = -(2|s><s| - I).
        for (Qubit q : all) c.add(Gate::h(q));
        for (Qubit q : all) c.add(Gate::x(q));
        append_multi_controlled_z(c, all);
        for (Qubit q : all) c.add(Gate::x(q));
        for (Qubit q : all) c.add(Gate::h(q));
    }
    return c;
}

std::size_t grover_optimal_k(std::size_t n, std::size_t marked_count) {
    if (marked_count == 0) throw Error(ErrorKind::InvalidArgument, "at least one marked state is required");
    const double ratio = std::ldexp(1.0, static_cast<int>(n)) / static_cast<double>(marked_count);
    return static_cast<std::size_t>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

double grover_success_analytic(std::size_t n, std::size_t k) {
    const double theta = std::asin(std::pow(2.0, -0.5 * static_cast<double>(n)));
    const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
    return s * s;
}

std::vector<BenchmarkResult> grover_scan(std::size_t n, const std::string& marked,
                                         const DeviceModel& dev, std::uint64_t shots,
                                         std::uint64_t seed) {
    const std::size_t k_star = grover_optimal_k(n);
    std::vector<BenchmarkResult> rows;
    for (int offset = -1; offset <= 1; ++offset) {
        if (offset < 0 && k_star == 0) continue;
        const std::size_t k = k_star + static_cast<std::size_t>(static_cast<std::int64_t>(offset));
        const Circuit circuit = make_grover({n, marked, k});
        const Execution exec = execute(circuit, dev, shots, derive_seed(seed, k));
        const double p = exec.outcomes.p(marked);

        BenchmarkResult row;
        row.algorithm = "grover";
        row.device = dev.name;
        row.n = n;
        row.metric = "success_probability";
        row.value = p;
        row.err = binomial_err(p, shots);
        row.shots = shots;
        row.seed = seed;
        row.extras["k"] = static_cast<std::int64_t>(k);
        row.extras["label"] = std::string(offset < 0 ? "k-1" : offset == 0 ? "k" : "k+1");
        row.extras["marked"] = marked;
        row.extras["depth"] = static_cast<std::int64_t>(exec.depth);
        row.extras["two_qubit_count"] = static_cast<std::int64_t>(exec.two_qubit_count);
        row.extras["p_ideal"] = grover_success_analytic(n, k);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qubench
