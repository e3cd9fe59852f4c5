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

#include "qubench/statevector.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace qubench::detail {

/// Inverse-CDF sampler over basis-state indices.
class CdfSampler {
public:
    explicit CdfSampler(const StateVector& sv) {
        const auto amps = sv.amplitudes();
        cdf_.resize(amps.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < amps.size(); ++i) {
            acc += std::norm(amps[i]);
            cdf_[i] = acc;
        }
    }

    /// Index selected by u in [0, 1); the total is rescaled so that rounding
    /// drift in the norm never pushes a draw past the last state.
    std::uint64_t draw(double u) const {
        const double target = u * cdf_.back();
        // upper_bound never lands on a zero-probability state.
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
        if (it == cdf_.end()) {
            it = std::lower_bound(cdf_.begin(), cdf_.end(), cdf_.back());
        }
        return static_cast<std::uint64_t>(it - cdf_.begin());
    }

private:
    std::vector<double> cdf_;
};

}  // namespace qubench::detail
