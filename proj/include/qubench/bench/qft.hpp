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

#include <string>
#include <string_view>

namespace qubench {

/// Textbook QFT, |x> -> 2^{-n/2} sum_y e^{2 pi i x y / 2^n} |y> with x, y
/// read little-endian. Qubit n-1 (most significant) is processed first:
/// H(j), then CPHASE(2 pi / 2^{j-m+1}) between j and every m < j, and the
/// register is reversed with floor(n/2) SWAPs at the end.
///
/// threshold > 0 drops every CPHASE whose |angle| < threshold.
Circuit make_qft(std::size_t n, double threshold = 0.0);

inline constexpr std::size_t kMaxAqftQubits = 8;

/// Spectral norm of U_exact - U_approx, by power iteration on the Gram
/// matrix. Throws WidthExceeded above kMaxAqftQubits.
double aqft_error(std::size_t n, double threshold, double rel_tol = 1e-12);

/// X gates preparing `input`, then the exact QFT and its inverse.
Circuit make_qft_roundtrip(std::size_t n, std::string_view input);

/// Default round-trip input: alternating "1010...".
std::string default_roundtrip_input(std::size_t n);

/// P(input) with binomial error.
Estimate roundtrip_fidelity(const Distribution& d, std::string_view input);

}  // namespace qubench
