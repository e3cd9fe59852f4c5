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

#include "qubench/bench/chsh.hpp"

#include "qubench/error.hpp"

#include <cmath>

namespace qubench {

Circuit make_bell() {
    Circuit c(2);
    c.add(Gate::h(0)).add(Gate::cnot(0, 1));
    return c;
}

std::array<Circuit, 4> chsh_circuits(const ChshSettings& s) {
    auto analyzer = [](double theta_a, double theta_b) {
        Circuit c = make_bell();
        c.add(Gate::ry(0, -theta_a)).add(Gate::ry(1, -theta_b));
        return c;
    };
    return {analyzer(s.a, s.b), analyzer(s.a, s.b_prime), analyzer(s.a_prime, s.b),
            analyzer(s.a_prime, s.b_prime)};
}

double correlator(const Distribution& d) {
    if (d.n_bits != 2) {
        throw Error(ErrorKind::LengthMismatch, "CHSH correlator needs 2-bit outcomes, got " +
                                                   std::to_string(d.n_bits));
    }
    return d.p("00") + d.p("11") - d.p("01") - d.p("10");
}

Estimate estimate_chsh(std::span<const Distribution, 4> settings) {
    constexpr std::array<double, 4> kSign{1.0, 1.0, 1.0, -1.0};
    Estimate s;
    double variance = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const Distribution& d = settings[i];
        if (d.probs.empty()) throw Error(ErrorKind::EmptyCounts, "CHSH setting " + std::to_string(i) + " has no outcomes");
        const double e = correlator(d);
        s.value += kSign[i] * e;
        if (!d.exact()) variance += std::max(0.0, 1.0 - e * e) / static_cast<double>(d.shots);
    }
    s.err = std::sqrt(variance);
    return s;
}

Estimate estimate_chsh(std::span<const CountsTable, 4> settings) {
    std::array<Distribution, 4> d;
    for (std::size_t i = 0; i < 4; ++i) {
        if (settings[i].shots() == 0) {
            throw Error(ErrorKind::EmptyCounts, "CHSH setting " + std::to_string(i) + " has no shots");
        }
        d[i] = Distribution::from_counts(settings[i]);
    }
    return estimate_chsh(std::span<const Distribution, 4>(d));
}

}  // namespace qubench
