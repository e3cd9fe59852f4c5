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

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qubench {

/// Qubit index. Qubit 0 is the least significant bit of a basis-state index.
using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t { H, X, Y, Z, RX, RY, RZ, CPHASE, CNOT, CZ, SWAP };

int arity(GateKind kind) noexcept;
bool is_parameterized(GateKind kind) noexcept;
std::string_view gate_name(GateKind kind) noexcept;
std::optional<GateKind> parse_gate_name(std::string_view name) noexcept;

/// One gate application. The qubit list of a one-qubit gate uses only
/// `qubits[0]`; for CNOT qubits[0] is the control and qubits[1] the target.
/// For CPHASE the angle multiplies |11>, i.e. diag(1, 1, 1, e^{i angle}).
struct Gate {
    GateKind kind;
    std::array<Qubit, 2> qubits{};
    double angle = 0.0;

    int arity() const noexcept { return qubench::arity(kind); }
    std::vector<Qubit> targets() const;
    Gate adjoint() const noexcept;

    friend bool operator==(const Gate&, const Gate&) = default;

    static Gate h(Qubit q) { return {GateKind::H, {q, 0}}; }
    static Gate x(Qubit q) { return {GateKind::X, {q, 0}}; }
    static Gate y(Qubit q) { return {GateKind::Y, {q, 0}}; }
    static Gate z(Qubit q) { return {GateKind::Z, {q, 0}}; }
    static Gate rx(Qubit q, double theta) { return {GateKind::RX, {q, 0}, theta}; }
    static Gate ry(Qubit q, double theta) { return {GateKind::RY, {q, 0}, theta}; }
    static Gate rz(Qubit q, double theta) { return {GateKind::RZ, {q, 0}, theta}; }
    static Gate cphase(Qubit a, Qubit b, double theta) { return {GateKind::CPHASE, {a, b}, theta}; }
    static Gate cnot(Qubit control, Qubit target) { return {GateKind::CNOT, {control, target}}; }
    static Gate cz(Qubit a, Qubit b) { return {GateKind::CZ, {a, b}}; }
    static Gate swap(Qubit a, Qubit b) { return {GateKind::SWAP, {a, b}}; }
};

struct GateCounts {
    std::size_t one_qubit = 0;
    std::size_t two_qubit = 0;
    std::size_t total = 0;

    friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Ordered gate list over a fixed register. Gates are validated on insertion,
/// so every Circuit value satisfies the width and distinct-qubit invariants.
class Circuit {
public:
    explicit Circuit(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    auto begin() const noexcept { return gates_.begin(); }
    auto end() const noexcept { return gates_.end(); }

    Circuit& add(const Gate& gate);
    Circuit& append(const Circuit& other);

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
};

/// Longest chain of the shared-qubit conflict DAG (greedy ASAP layering).
std::size_t depth(const Circuit& c);

GateCounts gate_counts(const Circuit& c);

/// a followed by b. Widths must agree.
Circuit compose(const Circuit& a, const Circuit& b);

Circuit inverse(const Circuit& c);

/// Largest register accepted by to_unitary.
inline constexpr std::size_t kMaxUnitaryQubits = 10;

using Matrix = Eigen::MatrixXcd;

/// 2x2 or 4x4 matrix of a single gate in its local basis. For two-qubit gates
/// the local index is bit0 = qubits[0], bit1 = qubits[1].
Matrix gate_matrix(const Gate& gate);

/// Full 2^n x 2^n unitary; throws WidthExceeded above kMaxUnitaryQubits.
Matrix to_unitary(const Circuit& c);

/// Line format: "qubits=<n>" header, then "GATE q0[,q1][ angle=<radians>]".
/// Blank lines and '#' comments are ignored on input.
std::string to_text(const Circuit& c);
Circuit parse_circuit(std::string_view text);

/// Qubits touched by at least one gate, ascending.
std::vector<Qubit> active_qubits(const Circuit& c);

/// Relabels `c` onto `keep.size()` qubits, keep[i] -> i. Every gate must act
/// only on qubits listed in `keep`.
Circuit relabel(const Circuit& c, const std::vector<Qubit>& keep);

}  // namespace qubench
