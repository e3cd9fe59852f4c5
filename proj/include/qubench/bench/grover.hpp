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

#pragma once

#include "qubench/bench/result.hpp"
#include "qubench/circuit.hpp"
#include "qubench/device.hpp"

#include <array>
#include <span>
#include <string>

namespace qubench {

inline constexpr std::size_t kMaxGroverQubits = 12;

/// Single marked state `marked` (little-endian) searched with k iterations.
struct GroverSpec {
    std::size_t n = 0;
    std::string marked;
    std::size_t iterations = 0;
};

/// Phase -1 on the all-ones state of `qubits`, built from CPHASE and CNOT
/// only (no ancilla). Three or more qubits use the Gray-code expansion of
/// the multi-controlled phase: 2^m - 1 controlled phases of +-pi/2^{m-1}
/// between the last qubit and parities of the m controls.
void append_multi_controlled_z(Circuit& c, std::span<const Qubit> qubits);

/// H on all qubits, then k rounds of oracle and diffusion (2|s><s| - I, up to
/// a global phase).
Circuit make_grover(const GroverSpec& spec);

/// floor((pi/4) sqrt(2^n / marked_count)).
std::size_t grover_optimal_k(std::size_t n, std::size_t marked_count = 1);

/// sin^2((2k+1) arcsin(2^{-n/2})).
double grover_success_analytic(std::size_t n, std::size_t k);

/// Runs k* - 1, k*, k* + 1 (k* - 1 omitted when k* = 0) on `dev` and reports
/// count(marked)/shots with binomial error. shots == 0 gives exact
/// probabilities on a noiseless device.
std::vector<BenchmarkResult> grover_scan(std::size_t n, const std::string& marked,
                                         const DeviceModel& dev, std::uint64_t shots,
                                         std::uint64_t seed);

}  // namespace qubench
