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

#include "qubench/circuit.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qubench {

/// Desk-scale guard for dense simulation.
inline constexpr std::size_t kMaxSimQubits = 20;

/// Shots used when a run does not ask for a specific count.
inline constexpr std::uint64_t kDefaultShots = 100;

/// Bitstrings are rendered little-endian: character i is the value of qubit i.
std::string to_bitstring(std::uint64_t index, std::size_t n_bits);
std::uint64_t from_bitstring(std::string_view bits);

class StateVector {
public:
    /// |0...0> on n qubits.
    explicit StateVector(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::span<const std::complex<double>> amplitudes() const noexcept { return amps_; }
    std::complex<double> amplitude(std::uint64_t index) const { return amps_.at(index); }

    void apply(const Gate& gate);

    double norm_squared() const noexcept;
    std::vector<double> probabilities() const;

private:
    std::size_t n_qubits_;
    std::vector<std::complex<double>> amps_;
};

/// Measurement record: bitstring -> count. Every key has the same length
/// and the counts always sum to shots().
class CountsTable {
public:
    explicit CountsTable(std::size_t n_bits);

    void add(std::string_view bits, std::uint64_t count = 1);

    std::size_t n_bits() const noexcept { return n_bits_; }
    std::uint64_t shots() const noexcept { return shots_; }
    std::uint64_t count(std::string_view bits) const;
    const std::map<std::string, std::uint64_t, std::less<>>& entries() const noexcept { return entries_; }

    /// {"shots": n, "counts": {"bitstring": count, ...}}
    std::string to_json() const;
    static CountsTable from_json(std::string_view json);

    friend bool operator==(const CountsTable&, const CountsTable&) = default;

private:
    std::size_t n_bits_;
    std::uint64_t shots_ = 0;
    std::map<std::string, std::uint64_t, std::less<>> entries_;
};

/// Outcome distribution fed to the analyzers: either empirical frequencies
/// from `shots` samples, or exact probabilities (shots == 0), in which case
/// shot-noise error bars are zero.
struct Distribution {
    std::size_t n_bits = 0;
    std::uint64_t shots = 0;
    std::map<std::string, double, std::less<>> probs;

    bool exact() const noexcept { return shots == 0; }
    double p(std::string_view bits) const;

    static Distribution from_counts(const CountsTable& counts);
    static Distribution exact_from(const StateVector& sv);
};

/// Applies the gates of `c` to |0...0>. Throws WidthExceeded above kMaxSimQubits.
StateVector run(const Circuit& c);

/// `shots` independent basis-state draws from |amplitude|^2. Shot i uses the
/// first uniform of stream(seed, i), so results are schedule-independent.
CountsTable sample(const StateVector& sv, std::uint64_t shots, std::uint64_t seed);

/// |amplitude|^2 at the little-endian bitstring. Throws LengthMismatch.
double probability(const StateVector& sv, std::string_view bits);

/// Sum over all basis states of |amp(z)|^2 * cost(z).
double expectation_diagonal(const StateVector& sv,
                            const std::function<double(std::string_view)>& cost);

}  // namespace qubench
