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
#include "qubench/statevector.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qubench {

enum class NativeGate { CNOT, CZ };

std::string_view to_string(NativeGate g) noexcept;

using Edge = std::pair<Qubit, Qubit>;

/// Architecture description: coupling graph, native entangler and a simple
/// per-gate depolarizing noise model. An empty coupling list means
/// all-to-all connectivity.
///
/// The noise rates of the presets are illustrative stand-ins; none of them
/// is a calibration of a real machine.
struct DeviceModel {
    std::string name;
    std::size_t n_qubits = 0;
    std::vector<Edge> coupling;  // normalized: first < second, sorted, unique
    NativeGate native_two_qubit = NativeGate::CNOT;
    double p1 = 0.0;
    double p2 = 0.0;
    double readout_flip = 0.0;

    bool all_to_all() const noexcept { return coupling.empty(); }
    bool adjacent(Qubit a, Qubit b) const noexcept;
    bool noiseless() const noexcept { return p1 == 0.0 && p2 == 0.0 && readout_flip == 0.0; }

    /// Normalizes the edge list and checks every invariant; throws InvalidArgument.
    void validate();
};

/// Nearest-neighbour lattice with `rows` x `cols` qubits, index = r * cols + c.
std::vector<Edge> grid_coupling(std::size_t rows, std::size_t cols);

/// IDEAL, ION_FC, SC_GRID20 or SC_GRID84. Throws UnknownPreset.
DeviceModel device_preset(std::string_view name);

/// {"name", "n_qubits", "coupling": [[i,j],...] | "all_to_all",
///  "native_two_qubit", "p1", "p2", "readout_flip"}
DeviceModel device_from_json(std::string_view json);
std::string device_to_json(const DeviceModel& dev);

/// A preset name, or otherwise a path to a device JSON file.
DeviceModel resolve_device(std::string_view name_or_path);

/// Monte-Carlo trajectory execution. After each gate a uniformly random
/// non-identity Pauli is inserted with probability p1 (one-qubit gates) or p2
/// (two-qubit gates, 15 choices); each readout bit then flips with
/// probability readout_flip. Shot i draws from stream(seed, i), and the first
/// draw of a shot selects the measured basis state, so a noiseless device
/// reproduces sample(run(c), shots, seed) exactly.
///
/// Idle qubits are dropped before simulation, so wide routed circuits are
/// fine as long as at most kMaxSimQubits qubits are touched.
CountsTable noisy_run(const Circuit& c, const DeviceModel& dev, std::uint64_t shots,
                      std::uint64_t seed);

/// Equivalent to sample(run(c), shots, seed), with idle qubits dropped
/// first so that routed circuits on wide devices can be executed.
CountsTable ideal_run(const Circuit& c, std::uint64_t shots, std::uint64_t seed);

/// Exact outcome probabilities over all c.n_qubits() bits, idle qubits dropped.
Distribution ideal_distribution(const Circuit& c);

/// Throws UnroutedCircuit if a two-qubit gate sits on a non-edge.
void check_routed(const Circuit& c, const DeviceModel& dev);

}  // namespace qubench
