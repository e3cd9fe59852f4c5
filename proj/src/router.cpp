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

#include "qubench/router.hpp"

#include "qubench/error.hpp"

#include <deque>
#include <numeric>
#include <optional>

namespace qubench {

namespace {

using Adjacency = std::vector<std::vector<Qubit>>;

Adjacency build_adjacency(const DeviceModel& dev) {
    Adjacency adj(dev.n_qubits);
    for (const auto& [a, b] : dev.coupling) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

/// BFS path from `from` to `to` inclusive; first discovery wins, so ties
/// resolve toward lower-index neighbours.
std::optional<std::vector<Qubit>> shortest_path(const Adjacency& adj, Qubit from, Qubit to) {
    constexpr Qubit kUnseen = ~Qubit{0};
    std::vector<Qubit> parent(adj.size(), kUnseen);
    parent[from] = from;
    std::deque<Qubit> frontier{from};
    while (!frontier.empty()) {
        const Qubit v = frontier.front();
        frontier.pop_front();
        if (v == to) break;
        for (Qubit w : adj[v]) {
            if (parent[w] == kUnseen) {
                parent[w] = v;
                frontier.push_back(w);
            }
        }
    }
    if (parent[to] == kUnseen) return std::nullopt;
    std::vector<Qubit> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

void emit_cnot(Circuit& out, Qubit control, Qubit target, NativeGate native) {
    if (native == NativeGate::CNOT) {
        out.add(Gate::cnot(control, target));
    } else {
        out.add(Gate::h(target));
        out.add(Gate::cz(control, target));
        out.add(Gate::h(target));
    }
}

}  // namespace

RoutedCircuit route(const Circuit& c, const DeviceModel& dev) {
    if (c.n_qubits() > dev.n_qubits) {
        throw Error(ErrorKind::WidthExceeded, "circuit of width " + std::to_string(c.n_qubits()) +
                                                  " does not fit device '" + dev.name + "' with " +
                                                  std::to_string(dev.n_qubits) + " qubits");
    }
    const std::size_t logical_depth = depth(c);
    if (dev.all_to_all()) {
        std::vector<Qubit> identity(c.n_qubits());
        std::iota(identity.begin(), identity.end(), Qubit{0});
        return {c, std::move(identity), {0, logical_depth, logical_depth}};
    }

    const Adjacency adj = build_adjacency(dev);
    const std::size_t width = dev.n_qubits;
    // Spare physical qubits carry placeholder logical labels n..width-1.
    std::vector<Qubit> phys_of(width);
    std::vector<Qubit> logical_at(width);
    std::iota(phys_of.begin(), phys_of.end(), Qubit{0});
    std::iota(logical_at.begin(), logical_at.end(), Qubit{0});

    Circuit out(width);
    std::size_t swaps = 0;
    for (Gate g : c) {
        if (g.arity() == 1) {
            g.qubits[0] = phys_of[g.qubits[0]];
            out.add(g);
            continue;
        }
        const Qubit pa = phys_of[g.qubits[0]];
        const Qubit pb = phys_of[g.qubits[1]];
        if (!dev.adjacent(pa, pb)) {
            auto path = shortest_path(adj, pa, pb);
            if (!path) {
                throw Error(ErrorKind::DisconnectedGraph, "no coupling path between physical qubits " +
                                                              std::to_string(pa) + " and " +
                                                              std::to_string(pb) + " on '" + dev.name + "'");
            }
            for (std::size_t i = 0; i + 2 < path->size(); ++i) {
                const Qubit x = (*path)[i];
                const Qubit y = (*path)[i + 1];
                out.add(Gate::swap(x, y));
                std::swap(logical_at[x], logical_at[y]);
                phys_of[logical_at[x]] = x;
                phys_of[logical_at[y]] = y;
                ++swaps;
            }
        }
        g.qubits = {phys_of[g.qubits[0]], phys_of[g.qubits[1]]};
        out.add(g);
    }

    const std::size_t routed_depth = depth(out);
    return {std::move(out), std::move(phys_of), {swaps, logical_depth, routed_depth}};
}

Circuit decompose_native(const Circuit& c, NativeGate native) {
    Circuit out(c.n_qubits());
    for (const Gate& g : c) {
        const Qubit a = g.qubits[0];
        const Qubit b = g.qubits[1];
        switch (g.kind) {
            case GateKind::CNOT:
                emit_cnot(out, a, b, native);
                break;
            case GateKind::CZ:
                if (native == NativeGate::CZ) {
                    out.add(g);
                } else {
                    out.add(Gate::h(b));
                    out.add(Gate::cnot(a, b));
                    out.add(Gate::h(b));
                }
                break;
            case GateKind::SWAP:
                emit_cnot(out, a, b, native);
                emit_cnot(out, b, a, native);
                emit_cnot(out, a, b, native);
                break;
            case GateKind::CPHASE:
                if (native == NativeGate::CZ) {
                    out.add(g);
                } else {
                    out.add(Gate::rz(a, g.angle / 2.0));
                    out.add(Gate::cnot(a, b));
                    out.add(Gate::rz(b, -g.angle / 2.0));
                    out.add(Gate::cnot(a, b));
                    out.add(Gate::rz(b, g.angle / 2.0));
                }
                break;
            default:
                out.add(g);
                break;
        }
    }
    return out;
}

RoutedCircuit compile_for_device(const Circuit& c, const DeviceModel& dev) {
    RoutedCircuit routed = route(c, dev);
    routed.circuit = decompose_native(routed.circuit, dev.native_two_qubit);
    routed.overhead.depth_after = depth(routed.circuit);
    return routed;
}

std::vector<RoutingReportRow> routing_report(const Circuit& c, const std::vector<DeviceModel>& devices) {
    std::vector<RoutingReportRow> rows;
    rows.reserve(devices.size());
    for (const auto& dev : devices) {
        const RoutedCircuit compiled = compile_for_device(c, dev);
        rows.push_back({dev.name, c.n_qubits(), compiled.overhead.depth_before,
                        compiled.overhead.depth_after, gate_counts(compiled.circuit).two_qubit,
                        compiled.overhead.added_swaps});
    }
    return rows;
}

std::string routing_report_csv(const std::vector<RoutingReportRow>& rows) {
    std::string out = "device,n,depth_before,depth_after,two_qubit_count,added_swaps\n";
    for (const auto& r : rows) {
        out += r.device + ',' + std::to_string(r.n) + ',' + std::to_string(r.depth_before) + ',' +
               std::to_string(r.depth_after) + ',' + std::to_string(r.two_qubit_count) + ',' +
               std::to_string(r.added_swaps) + '\n';
    }
    return out;
}

}  // namespace qubench
