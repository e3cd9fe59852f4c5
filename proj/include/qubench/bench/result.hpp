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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace qubench {

using ExtraValue = std::variant<std::int64_t, double, std::string>;

/// One row of a results table.
struct BenchmarkResult {
    std::string algorithm;
    std::string device;
    std::size_t n = 0;
    std::string metric;
    double value = 0.0;
    double err = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::map<std::string, ExtraValue> extras;

    friend bool operator==(const BenchmarkResult&, const BenchmarkResult&) = default;
};

/// A shot-estimated quantity with its one-sigma uncertainty.
struct Estimate {
    double value = 0.0;
    double err = 0.0;
};

/// sqrt(p(1-p)/shots); zero for exact distributions (shots == 0).
inline double binomial_err(double p, std::uint64_t shots) {
    if (shots == 0) return 0.0;
    return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(shots));
}

}  // namespace qubench
