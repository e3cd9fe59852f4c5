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

#include "qubench/device.hpp"

#include "qubench/error.hpp"
#include "qubench/rng.hpp"
#include "sampling.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace qubench {

namespace {

using nlohmann::json;

bool valid_probability(double p) { return p >= 0.0 && p <= 1.0; }

/// Circuit restricted to its touched qubits.
struct Compacted {
    Circuit circuit;
    std::vector<Qubit> active;
};

Compacted compact(const Circuit& c) {
    auto active = active_qubits(c);
    if (active.empty()) active.push_back(0);
    if (active.size() > kMaxSimQubits) {
        throw Error(ErrorKind::WidthExceeded, "circuit touches " + std::to_string(active.size()) +
                                                  " qubits; simulation supports at most " +
                                                  std::to_string(kMaxSimQubits));
    }
    return {relabel(c, active), std::move(active)};
}

std::string expand(std::uint64_t compact_index, const std::vector<Qubit>& active, std::size_t width) {
    std::string bits(width, '0');
    for (std::size_t k = 0; k < active.size(); ++k) {
        if ((compact_index >> k) & 1U) bits[active[k]] = '1';
    }
    return bits;
}

constexpr std::array<GateKind, 3> kPaulis{GateKind::X, GateKind::Y, GateKind::Z};

/// A Pauli inserted after gate `gate_index`. `code` is 0..2 for one-qubit
/// gates and 1..15 for two-qubit gates (base-4 digits, 0 = identity).
struct PauliEvent {
    std::size_t gate_index;
    unsigned code;
};

void apply_pauli_code(StateVector& sv, const Gate& g, unsigned code) {
    if (g.arity() == 1) {
        sv.apply(Gate{kPaulis[code], {g.qubits[0], 0}});
        return;
    }
    const unsigned first = code % 4;
    const unsigned second = code / 4;
    if (first != 0) sv.apply(Gate{kPaulis[first - 1], {g.qubits[0], 0}});
    if (second != 0) sv.apply(Gate{kPaulis[second - 1], {g.qubits[1], 0}});
}

}  // namespace

std::string_view to_string(NativeGate g) noexcept {
    return g == NativeGate::CNOT ? "CNOT" : "CZ";
}

bool DeviceModel::adjacent(Qubit a, Qubit b) const noexcept {
    if (a == b) return false;
    if (all_to_all()) return a < n_qubits && b < n_qubits;
    const Edge e = a < b ? Edge{a, b} : Edge{b, a};
    return std::binary_search(coupling.begin(), coupling.end(), e);
}

void DeviceModel::validate() {
    if (n_qubits == 0) throw Error(ErrorKind::InvalidArgument, "device '" + name + "' has no qubits");
    for (auto& [a, b] : coupling) {
        if (a == b) throw Error(ErrorKind::InvalidArgument, "device '" + name + "' has a self-loop on qubit " + std::to_string(a));
        if (a >= n_qubits || b >= n_qubits) {
            throw Error(ErrorKind::InvalidArgument, "device '" + name + "' edge references a qubit outside 0.." +
                                                        std::to_string(n_qubits - 1));
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(coupling.begin(), coupling.end());
    coupling.erase(std::unique(coupling.begin(), coupling.end()), coupling.end());
    if (!valid_probability(p1) || !valid_probability(p2) || !valid_probability(readout_flip)) {
        throw Error(ErrorKind::InvalidArgument, "device '" + name + "' has a probability outside [0, 1]");
    }
}

std::vector<Edge> grid_coupling(std::size_t rows, std::size_t cols) {
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto q = static_cast<Qubit>(r * cols + c);
            if (c + 1 < cols) edges.emplace_back(q, q + 1);
            if (r + 1 < rows) edges.emplace_back(q, static_cast<Qubit>(q + cols));
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

DeviceModel device_preset(std::string_view name) {
    DeviceModel dev;
    dev.name = std::string(name);
    if (name == "IDEAL") {
        dev.n_qubits = kMaxSimQubits;
    } else if (name == "ION_FC") {
        dev.n_qubits = 36;
        dev.p1 = 5e-4;
        dev.p2 = 5e-3;
        dev.readout_flip = 5e-3;
    } else if (name == "SC_GRID20" || name == "SC_GRID84") {
        const bool small = name == "SC_GRID20";
        const std::size_t rows = small ? 4 : 7;
        const std::size_t cols = small ? 5 : 12;
        dev.n_qubits = rows * cols;
        dev.coupling = grid_coupling(rows, cols);
        dev.native_two_qubit = NativeGate::CZ;
        dev.p1 = 1e-3;
        dev.p2 = 1e-2;
        dev.readout_flip = 2e-2;
    } else {
        throw Error(ErrorKind::UnknownPreset, "unknown device preset '" + std::string(name) +
                                                  "' (expected IDEAL, ION_FC, SC_GRID20 or SC_GRID84)");
    }
    return dev;
}

DeviceModel device_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("device JSON: ") + e.what());
    }
    try {
        DeviceModel dev;
        dev.name = j.at("name").get<std::string>();
        dev.n_qubits = j.at("n_qubits").get<std::size_t>();
        const auto& coupling = j.at("coupling");
        if (coupling.is_string()) {
            if (coupling.get<std::string>() != "all_to_all") {
                throw Error(ErrorKind::Parse, "device coupling must be an edge list or \"all_to_all\"");
            }
        } else {
            for (const auto& e : coupling) {
                if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "device edge must be [i, j]");
                dev.coupling.emplace_back(e[0].get<Qubit>(), e[1].get<Qubit>());
            }
            if (dev.coupling.empty()) {
                throw Error(ErrorKind::Parse, "empty device edge list; use \"all_to_all\" for full connectivity");
            }
        }
        const auto native = j.value("native_two_qubit", std::string("CNOT"));
        if (native == "CNOT") {
            dev.native_two_qubit = NativeGate::CNOT;
        } else if (native == "CZ") {
            dev.native_two_qubit = NativeGate::CZ;
        } else {
            throw Error(ErrorKind::Parse, "native_two_qubit must be CNOT or CZ");
        }
        dev.p1 = j.value("p1", 0.0);
        dev.p2 = j.value("p2", 0.0);
        dev.readout_flip = j.value("readout_flip", 0.0);
        dev.validate();
        return dev;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("device JSON: ") + e.what());
    }
}

std::string device_to_json(const DeviceModel& dev) {
    json j;
    j["name"] = dev.name;
    j["n_qubits"] = dev.n_qubits;
    if (dev.all_to_all()) {
        j["coupling"] = "all_to_all";
    } else {
        json edges = json::array();
        for (const auto& [a, b] : dev.coupling) edges.push_back({a, b});
        j["coupling"] = edges;
    }
    j["native_two_qubit"] = std::string(to_string(dev.native_two_qubit));
    j["p1"] = dev.p1;
    j["p2"] = dev.p2;
    j["readout_flip"] = dev.readout_flip;
    return j.dump();
}

DeviceModel resolve_device(std::string_view name_or_path) {
    try {
        return device_preset(name_or_path);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnknownPreset) throw;
    }
    std::ifstream in{std::string(name_or_path)};
    if (!in) {
        throw Error(ErrorKind::UnknownPreset, "'" + std::string(name_or_path) +
                                                  "' is neither a device preset nor a readable device file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return device_from_json(buf.str());
}

void check_routed(const Circuit& c, const DeviceModel& dev) {
    if (dev.all_to_all()) return;
    for (const Gate& g : c) {
        if (g.arity() == 2 && !dev.adjacent(g.qubits[0], g.qubits[1])) {
            throw Error(ErrorKind::UnroutedCircuit,
                        std::string(gate_name(g.kind)) + "(" + std::to_string(g.qubits[0]) + "," +
                            std::to_string(g.qubits[1]) + ") is not on a coupling edge of '" + dev.name + "'");
        }
    }
}

CountsTable noisy_run(const Circuit& c, const DeviceModel& dev, std::uint64_t shots,
                      std::uint64_t seed) {
    if (shots == 0) throw Error(ErrorKind::InvalidArgument, "shots must be positive");
    if (c.n_qubits() > dev.n_qubits) {
        throw Error(ErrorKind::WidthExceeded, "circuit of width " + std::to_string(c.n_qubits()) +
                                                  " exceeds device '" + dev.name + "' with " +
                                                  std::to_string(dev.n_qubits) + " qubits");
    }
    check_routed(c, dev);

    const Compacted compacted = compact(c);
    const auto& gates = compacted.circuit.gates();
    const detail::CdfSampler ideal(run(compacted.circuit));

    // Ideal prefix states every `stride` gates, so a faulty trajectory
    // resumes just before its first error. Capped at ~64 MiB.
    const std::size_t state_bytes = sizeof(std::complex<double>) << compacted.circuit.n_qubits();
    const std::size_t max_checkpoints = std::max<std::size_t>(1, (std::size_t{64} << 20) / state_bytes);
    const std::size_t stride = std::max<std::size_t>(1, (gates.size() + max_checkpoints - 1) / max_checkpoints);
    std::vector<StateVector> checkpoints;
    {
        StateVector sv(compacted.circuit.n_qubits());
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (i % stride == 0) checkpoints.push_back(sv);
            sv.apply(gates[i]);
        }
    }

    std::map<std::string, std::uint64_t> hits;
    std::vector<PauliEvent> events;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        auto rng = stream(seed, shot);
        const double u = rng.uniform();

        events.clear();
        for (std::size_t i = 0; i < gates.size(); ++i) {
            const bool two = gates[i].arity() == 2;
            if (rng.uniform() < (two ? dev.p2 : dev.p1)) {
                const auto code = two ? static_cast<unsigned>(rng.below(15)) + 1
                                      : static_cast<unsigned>(rng.below(3));
                events.push_back({i, code});
            }
        }

        std::uint64_t outcome = 0;
        if (events.empty()) {
            outcome = ideal.draw(u);
        } else {
            const std::size_t start = events.front().gate_index / stride;
            StateVector sv = checkpoints[start];
            auto next = events.begin();
            for (std::size_t i = start * stride; i < gates.size(); ++i) {
                sv.apply(gates[i]);
                for (; next != events.end() && next->gate_index == i; ++next) {
                    apply_pauli_code(sv, gates[i], next->code);
                }
            }
            outcome = detail::CdfSampler(sv).draw(u);
        }

        std::string bits = expand(outcome, compacted.active, c.n_qubits());
        for (char& b : bits) {
            if (rng.uniform() < dev.readout_flip) b = b == '0' ? '1' : '0';
        }
        ++hits[bits];
    }

    CountsTable counts(c.n_qubits());
    for (const auto& [bits, n] : hits) counts.add(bits, n);
    return counts;
}

CountsTable ideal_run(const Circuit& c, std::uint64_t shots, std::uint64_t seed) {
    const Compacted compacted = compact(c);
    const CountsTable narrow = sample(run(compacted.circuit), shots, seed);
    CountsTable counts(c.n_qubits());
    for (const auto& [bits, n] : narrow.entries()) {
        counts.add(expand(from_bitstring(bits), compacted.active, c.n_qubits()), n);
    }
    return counts;
}

Distribution ideal_distribution(const Circuit& c) {
    const Compacted compacted = compact(c);
    const Distribution narrow = Distribution::exact_from(run(compacted.circuit));
    Distribution d;
    d.n_bits = c.n_qubits();
    for (const auto& [bits, p] : narrow.probs) {
        d.probs.emplace(expand(from_bitstring(bits), compacted.active, c.n_qubits()), p);
    }
    return d;
}

}  // namespace qubench
