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
#include "qubench/router.hpp"
#include "qubench/statevector.hpp"

#include <cstdint>

namespace qubench {

/// Outcome of running a logical circuit on a device: counts are keyed by
/// logical qubit (character l = logical qubit l), whatever the placement.
struct Execution {
    Distribution outcomes;
    std::size_t depth = 0;
    std::size_t two_qubit_count = 0;
    std::size_t added_swaps = 0;
};

/// compile_for_device, then sample (noiseless device) or noisy_run.
/// shots == 0 requests exact probabilities and needs a noiseless device.
Execution execute(const Circuit& logical, const DeviceModel& dev, std::uint64_t shots,
                  std::uint64_t seed);

}  // namespace qubench
