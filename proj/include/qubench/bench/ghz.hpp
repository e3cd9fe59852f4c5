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

#include <utility>
#include <vector>

namespace qubench {

/// [H(0), CNOT(0,1), ..., CNOT(0,n-1)]. Requires n >= 2.
Circuit make_ghz(std::size_t n);

/// Phases j*pi/(n+1), j = 0..n, of the parity scan.
std::vector<double> ghz_scan_phases(std::size_t n);

/// make_ghz(n) followed by RZ(phi) and H on every qubit, so that the parity
/// of the outcome measures cos(phi) X + sin(phi) Y on each qubit.
Circuit make_ghz_parity_circuit(std::size_t n, double phi);

/// <(-1)^{weight(z)}> of a distribution.
double parity(const Distribution& d);

/// One point of the parity scan.
struct ParityScan {
    double phi = 0.0;
    Distribution outcomes;
};

/// GHZ fidelity from populations plus parity oscillations:
///   F = (P(0^n) + P(1^n) + C) / 2,
/// with C the magnitude of the n*phi Fourier component of the scanned parity,
/// C = |2/(n+1) * sum_j <Pi>(phi_j) e^{i n phi_j}|, capped at 1.
/// Uncertainties are binomial for the populations and (1 - <Pi>^2)/shots per
/// scan point, propagated linearly. Throws MissingScanSettings unless the
/// scans cover exactly ghz_scan_phases(n).
Estimate ghz_fidelity(const Distribution& populations, const std::vector<ParityScan>& scans);
Estimate ghz_fidelity(const CountsTable& populations,
                      const std::vector<std::pair<double, CountsTable>>& scans);

}  // namespace qubench
