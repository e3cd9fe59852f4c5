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

#include "qubench/circuit.hpp"

#include "qubench/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace qubench {

namespace {

using cd = std::complex<double>;

struct GateInfo {
    GateKind kind;
    std::string_view name;
    int arity;
    bool parameterized;
};

constexpr std::array<GateInfo, 11> kGateTable{{
    {GateKind::H, "H", 1, false},
    {GateKind::X, "X", 1, false},
    {GateKind::Y, "Y", 1, false},
    {GateKind::Z, "Z", 1, false},
    {GateKind::RX, "RX", 1, true},
    {GateKind::RY, "RY", 1, true},
    {GateKind::RZ, "RZ", 1, true},
    {GateKind::CPHASE, "CPHASE", 2, true},
    {GateKind::CNOT, "CNOT", 2, false},
    {GateKind::CZ, "CZ", 2, false},
    {GateKind::SWAP, "SWAP", 2, false},
}};

const GateInfo& info(GateKind kind) noexcept {
    return kGateTable[static_cast<std::size_t>(kind)];
}

}  // namespace

int arity(GateKind kind) noexcept { return info(kind).arity; }

bool is_parameterized(GateKind kind) noexcept { return info(kind).parameterized; }

std::string_view gate_name(GateKind kind) noexcept { return info(kind).name; }

std::optional<GateKind> parse_gate_name(std::string_view name) noexcept {
    for (const auto& g : kGateTable) {
        if (g.name == name) return g.kind;
    }
    return std::nullopt;
}

std::vector<Qubit> Gate::targets() const {
    if (arity() == 1) return {qubits[0]};
    return {qubits[0], qubits[1]};
}

Gate Gate::adjoint() const noexcept {
    Gate g = *this;
    if (is_parameterized(kind)) g.angle = -angle;
    return g;
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) throw Error(ErrorKind::InvalidArgument, "circuit needs at least one qubit");
}

Circuit& Circuit::add(const Gate& gate) {
    const int k = gate.arity();
    for (int i = 0; i < k; ++i) {
        if (gate.qubits[i] >= n_qubits_) {
            throw Error(ErrorKind::InvalidArgument,
                        std::string(gate_name(gate.kind)) + " on qubit " +
                            std::to_string(gate.qubits[i]) + " outside register of " +
                            std::to_string(n_qubits_));
        }
    }
    if (k == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string(gate_name(gate.kind)) + " with repeated qubit " +
                        std::to_string(gate.qubits[0]));
    }
    if (!std::isfinite(gate.angle)) {
        throw Error(ErrorKind::InvalidArgument, "non-finite gate angle");
    }
    Gate g = gate;
    if (k == 1) g.qubits[1] = 0;
    if (!is_parameterized(g.kind)) g.angle = 0.0;
    gates_.push_back(g);
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.n_qubits_ != n_qubits_) {
        throw Error(ErrorKind::InvalidArgument, "cannot compose circuits of width " +
                                                    std::to_string(n_qubits_) + " and " +
                                                    std::to_string(other.n_qubits_));
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

std::size_t depth(const Circuit& c) {
    std::vector<std::size_t> level(c.n_qubits(), 0);
    std::size_t deepest = 0;
    for (const Gate& g : c) {
        std::size_t layer = level[g.qubits[0]];
        if (g.arity() == 2) layer = std::max(layer, level[g.qubits[1]]);
        ++layer;
        level[g.qubits[0]] = layer;
        if (g.arity() == 2) level[g.qubits[1]] = layer;
        deepest = std::max(deepest, layer);
    }
    return deepest;
}

GateCounts gate_counts(const Circuit& c) {
    GateCounts counts;
    for (const Gate& g : c) {
        if (g.arity() == 1) {
            ++counts.one_qubit;
        } else {
            ++counts.two_qubit;
        }
    }
    counts.total = counts.one_qubit + counts.two_qubit;
    return counts;
}

Circuit compose(const Circuit& a, const Circuit& b) {
    Circuit out = a;
    out.append(b);
    return out;
}

Circuit inverse(const Circuit& c) {
    Circuit out(c.n_qubits());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.add(it->adjoint());
    return out;
}

Matrix gate_matrix(const Gate& gate) {
    const double s = 1.0 / std::numbers::sqrt2;
    const cd i{0.0, 1.0};
    const double half = gate.angle / 2.0;
    switch (gate.kind) {
        case GateKind::H: {
            Matrix m(2, 2);
            m << s, s, s, -s;
            return m;
        }
        case GateKind::X: {
            Matrix m(2, 2);
            m << 0, 1, 1, 0;
            return m;
        }
        case GateKind::Y: {
            Matrix m(2, 2);
            m << 0, -i, i, 0;
            return m;
        }
        case GateKind::Z: {
            Matrix m(2, 2);
            m << 1, 0, 0, -1;
            return m;
        }
        case GateKind::RX: {
            Matrix m(2, 2);
            m << std::cos(half), -i * std::sin(half), -i * std::sin(half), std::cos(half);
            return m;
        }
        case GateKind::RY: {
            Matrix m(2, 2);
            m << std::cos(half), -std::sin(half), std::sin(half), std::cos(half);
            return m;
        }
        case GateKind::RZ: {
            Matrix m = Matrix::Zero(2, 2);
            m(0, 0) = std::exp(-i * half);
            m(1, 1) = std::exp(i * half);
            return m;
        }
        case GateKind::CPHASE: {
            Matrix m = Matrix::Identity(4, 4);
            m(3, 3) = std::exp(i * gate.angle);
            return m;
        }
        case GateKind::CNOT: {
            // control = local bit 0, target = local bit 1
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = 1;
            m(2, 2) = 1;
            m(3, 1) = 1;
            m(1, 3) = 1;
            return m;
        }
        case GateKind::CZ: {
            Matrix m = Matrix::Identity(4, 4);
            m(3, 3) = -1;
            return m;
        }
        case GateKind::SWAP: {
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = 1;
            m(1, 2) = 1;
            m(2, 1) = 1;
            m(3, 3) = 1;
            return m;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown gate kind");
}

Matrix to_unitary(const Circuit& c) {
    const std::size_t n = c.n_qubits();
    if (n > kMaxUnitaryQubits) {
        throw Error(ErrorKind::WidthExceeded, "to_unitary supports at most " +
                                                  std::to_string(kMaxUnitaryQubits) +
                                                  " qubits, got " + std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    Matrix u = Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));

    // Left-multiply by each embedded gate: mix the rows addressed by the
    // gate's local basis, for every base index with the gate bits cleared.
    for (const Gate& g : c) {
        const Matrix local = gate_matrix(g);
        const int k = g.arity();
        const std::size_t local_dim = std::size_t{1} << k;
        std::size_t mask = std::size_t{1} << g.qubits[0];
        if (k == 2) mask |= std::size_t{1} << g.qubits[1];

        std::vector<Eigen::Index> rows(local_dim);
        Matrix block(static_cast<Eigen::Index>(local_dim), u.cols());
        for (std::size_t base = 0; base < dim; ++base) {
            if (base & mask) continue;
            for (std::size_t l = 0; l < local_dim; ++l) {
                std::size_t idx = base;
                if (l & 1) idx |= std::size_t{1} << g.qubits[0];
                if (l & 2) idx |= std::size_t{1} << g.qubits[1];
                rows[l] = static_cast<Eigen::Index>(idx);
            }
            for (std::size_t l = 0; l < local_dim; ++l) block.row(l) = u.row(rows[l]);
            const Matrix mixed = local * block;
            for (std::size_t l = 0; l < local_dim; ++l) u.row(rows[l]) = mixed.row(l);
        }
    }
    return u;
}

std::string to_text(const Circuit& c) {
    std::string out = "qubits=" + std::to_string(c.n_qubits()) + "\n";
    for (const Gate& g : c) {
        out += gate_name(g.kind);
        out += ' ';
        out += std::to_string(g.qubits[0]);
        if (g.arity() == 2) {
            out += ',';
            out += std::to_string(g.qubits[1]);
        }
        if (is_parameterized(g.kind)) {
            out += " angle=";
            out += detail::format_double(g.angle);
        }
        out += '\n';
    }
    return out;
}

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    for (std::string_view raw : detail::split_lines(text)) {
        ++line_no;
        std::string_view line = detail::trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto fail = [&](const std::string& what) {
            throw Error(ErrorKind::Parse, "circuit line " + std::to_string(line_no) + ": " + what);
        };

        if (!circuit) {
            constexpr std::string_view kHeader = "qubits=";
            if (line.substr(0, kHeader.size()) != kHeader) fail("expected 'qubits=<n>' header");
            auto n = detail::parse_uint(line.substr(kHeader.size()));
            if (!n || *n == 0) fail("invalid qubit count");
            circuit.emplace(*n);
            continue;
        }

        auto fields = detail::split_ws(line);
        if (fields.size() < 2 || fields.size() > 3) fail("expected 'GATE q0[,q1][ angle=<radians>]'");
        auto kind = parse_gate_name(fields[0]);
        if (!kind) fail("unknown gate '" + std::string(fields[0]) + "'");

        Gate g{*kind};
        auto qubit_fields = detail::split(fields[1], ',');
        if (static_cast<int>(qubit_fields.size()) != arity(*kind)) {
            fail(std::string(fields[0]) + " takes " + std::to_string(arity(*kind)) + " qubit(s)");
        }
        for (std::size_t i = 0; i < qubit_fields.size(); ++i) {
            auto q = detail::parse_uint(qubit_fields[i]);
            if (!q) fail("invalid qubit index '" + std::string(qubit_fields[i]) + "'");
            g.qubits[i] = static_cast<Qubit>(*q);
        }

        if (is_parameterized(*kind)) {
            constexpr std::string_view kAngle = "angle=";
            if (fields.size() != 3 || fields[2].substr(0, kAngle.size()) != kAngle) {
                fail(std::string(fields[0]) + " requires angle=<radians>");
            }
            auto angle = detail::parse_double(fields[2].substr(kAngle.size()));
            if (!angle) fail("invalid angle");
            g.angle = *angle;
        } else if (fields.size() == 3) {
            fail(std::string(fields[0]) + " takes no angle");
        }

        try {
            circuit->add(g);
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    if (!circuit) throw Error(ErrorKind::Parse, "circuit text has no 'qubits=<n>' header");
    return *circuit;
}

std::vector<Qubit> active_qubits(const Circuit& c) {
    std::vector<bool> used(c.n_qubits(), false);
    for (const Gate& g : c) {
        used[g.qubits[0]] = true;
        if (g.arity() == 2) used[g.qubits[1]] = true;
    }
    std::vector<Qubit> out;
    for (std::size_t q = 0; q < used.size(); ++q) {
        if (used[q]) out.push_back(static_cast<Qubit>(q));
    }
    return out;
}

Circuit relabel(const Circuit& c, const std::vector<Qubit>& keep) {
    if (keep.empty()) throw Error(ErrorKind::InvalidArgument, "relabel needs at least one qubit");
    std::vector<std::optional<Qubit>> to_new(c.n_qubits());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= c.n_qubits()) throw Error(ErrorKind::InvalidArgument, "relabel qubit out of range");
        to_new[keep[i]] = static_cast<Qubit>(i);
    }
    Circuit out(keep.size());
    for (Gate g : c) {
        for (int i = 0; i < g.arity(); ++i) {
            auto mapped = to_new[g.qubits[i]];
            if (!mapped) {
                throw Error(ErrorKind::InvalidArgument,
                            "gate acts on qubit " + std::to_string(g.qubits[i]) + " not kept by relabel");
            }
            g.qubits[i] = *mapped;
        }
        out.add(g);
    }
    return out;
}

}  // namespace qubench
