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
#include "qubench/statevector.hpp"

#include <array>
#include <numbers>
#include <span>

namespace qubench {

/// Analyzer angles in the X-Z plane (rotation about Y). The defaults are the
/// Tsirelson-optimal set, for which the ideal Bell state gives S = 2*sqrt(2).
struct ChshSettings {
    double a = 0.0;
    double a_prime = std::numbers::pi / 2.0;
    double b = std::numbers::pi / 4.0;
    double b_prime = -std::numbers::pi / 4.0;
};

inline constexpr double kTsirelsonBound = 2.0 * std::numbers::sqrt2;
inline constexpr double kClassicalBound = 2.0;

/// [H(0), CNOT(0,1)] preparing (|00> + |11>)/sqrt(2).
Circuit make_bell();

/// Bell preparation plus RY(-theta_A) on qubit 0 and RY(-theta_B) on qubit 1,
/// for the setting pairs (a,b), (a,b'), (a',b), (a',b') in that order.
std::array<Circuit, 4> chsh_circuits(const ChshSettings& settings = {});

/// Correlator (P00 + P11 - P01 - P10) of one setting pair.
double correlator(const Distribution& d);

/// S = E(a,b) + E(a,b') + E(a',b) - E(a',b'), with
/// err = sqrt(sum_i (1 - E_i^2) / shots_i). Inputs follow chsh_circuits order.
/// Throws EmptyCounts or LengthMismatch.
Estimate estimate_chsh(std::span<const Distribution, 4> settings);
Estimate estimate_chsh(std::span<const CountsTable, 4> settings);

}  // namespace qubench
