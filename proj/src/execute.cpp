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

#include "qubench/execute.hpp"

#include "qubench/error.hpp"

namespace qubench {

namespace {

std::string to_logical(std::string_view physical, const std::vector<Qubit>& perm, std::size_t n) {
    std::string bits(n, '0');
    for (std::size_t l = 0; l < n; ++l) bits[l] = physical[perm[l]];
    return bits;
}

}  // namespace

Execution execute(const Circuit& logical, const DeviceModel& dev, std::uint64_t shots,
                  std::uint64_t seed) {
    const RoutedCircuit compiled = compile_for_device(logical, dev);
    const std::size_t n = logical.n_qubits();

    Execution out;
    out.depth = compiled.overhead.depth_after;
    out.two_qubit_count = gate_counts(compiled.circuit).two_qubit;
    out.added_swaps = compiled.overhead.added_swaps;
    out.outcomes.n_bits = n;
    out.outcomes.shots = shots;

    if (shots == 0) {
        if (!dev.noiseless()) {
            throw Error(ErrorKind::InvalidArgument,
                        "exact probabilities requested on noisy device '" + dev.name + "'");
        }
        for (const auto& [bits, p] : ideal_distribution(compiled.circuit).probs) {
            out.outcomes.probs[to_logical(bits, compiled.final_permutation, n)] += p;
        }
        return out;
    }

    const CountsTable physical = dev.noiseless() ? ideal_run(compiled.circuit, shots, seed)
                                                 : noisy_run(compiled.circuit, dev, shots, seed);
    CountsTable counts(n);
    for (const auto& [bits, k] : physical.entries()) {
        counts.add(to_logical(bits, compiled.final_permutation, n), k);
    }
    out.outcomes = Distribution::from_counts(counts);
    return out;
}

}  // namespace qubench
