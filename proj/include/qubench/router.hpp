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
#include "qubench/device.hpp"

#include <string>
#include <vector>

namespace qubench {

struct RoutingOverhead {
    std::size_t added_swaps = 0;
    std::size_t depth_before = 0;
    std::size_t depth_after = 0;
};

/// A circuit placed on physical qubits.
///
/// `final_permutation[l]` is the physical qubit holding logical qubit l at
/// the end of the circuit. On constrained devices the routed register is the
/// whole device, and indices >= the logical width label the spare qubits, so
/// the permutation is always a bijection over circuit.n_qubits().
struct RoutedCircuit {
    Circuit circuit;
    std::vector<Qubit> final_permutation;
    RoutingOverhead overhead;
};

/// Greedy SWAP insertion. All-to-all devices get the circuit back unchanged.
/// Otherwise logical i starts on physical i, and each two-qubit gate on
/// non-adjacent qubits first walks its first qubit along the BFS shortest
/// path (neighbours visited in ascending index order) until adjacent.
/// Throws DisconnectedGraph or WidthExceeded.
RoutedCircuit route(const Circuit& c, const DeviceModel& dev);

/// Rewrites two-qubit gates into the native entangler:
///   CNOT(c,t) -> H(t) CZ(c,t) H(t)           (native CZ)
///   CZ(a,b)   -> H(b) CNOT(a,b) H(b)         (native CNOT)
///   SWAP(a,b) -> CNOT(a,b) CNOT(b,a) CNOT(a,b), then as above
///   CPHASE(θ) -> RZ(a,θ/2) CNOT(a,b) RZ(b,-θ/2) CNOT(a,b) RZ(b,θ/2)
///                (native CNOT; exact up to global phase e^{-iθ/4})
/// CPHASE is kept on CZ-native devices.
Circuit decompose_native(const Circuit& c, NativeGate native);

/// route() followed by decompose_native(); overhead.depth_after is the depth
/// of the executable circuit.
RoutedCircuit compile_for_device(const Circuit& c, const DeviceModel& dev);

struct RoutingReportRow {
    std::string device;
    std::size_t n = 0;
    std::size_t depth_before = 0;
    std::size_t depth_after = 0;
    std::size_t two_qubit_count = 0;
    std::size_t added_swaps = 0;
};

/// One row per device, in input order.
std::vector<RoutingReportRow> routing_report(const Circuit& c, const std::vector<DeviceModel>& devices);

/// "device,n,depth_before,depth_after,two_qubit_count,added_swaps" CSV.
std::string routing_report_csv(const std::vector<RoutingReportRow>& rows);

}  // namespace qubench
