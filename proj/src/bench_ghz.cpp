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

#include "qubench/bench/ghz.hpp"

#include "qubench/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace qubench {

Circuit make_ghz(std::size_t n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "GHZ state needs n >= 2");
    Circuit c(n);
    c.add(Gate::h(0));
    for (Qubit q = 1; q < n; ++q) c.add(Gate::cnot(0, q));
    return c;
}

std::vector<double> ghz_scan_phases(std::size_t n) {
    std::vector<double> phases(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        phases[j] = static_cast<double>(j) * std::numbers::pi / static_cast<double>(n + 1);
    }
    return phases;
}

Circuit make_ghz_parity_circuit(std::size_t n, double phi) {
    Circuit c = make_ghz(n);
    for (Qubit q = 0; q < n; ++q) c.add(Gate::rz(q, phi));
    for (Qubit q = 0; q < n; ++q) c.add(Gate::h(q));
    return c;
}

double parity(const Distribution& d) {
    double total = 0.0;
    for (const auto& [bits, p] : d.probs) {
        const auto ones = std::count(bits.begin(), bits.end(), '1');
        total += (ones % 2 == 0) ? p : -p;
    }
    return total;
}

Estimate ghz_fidelity(const Distribution& populations, const std::vector<ParityScan>& scans) {
    const std::size_t n = populations.n_bits;
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "GHZ fidelity needs n >= 2");
    if (populations.probs.empty()) throw Error(ErrorKind::EmptyCounts, "GHZ population record is empty");

    // Match every expected phase to exactly one scan.
    const auto phases = ghz_scan_phases(n);
    std::vector<const ParityScan*> matched(phases.size(), nullptr);
    for (const auto& scan : scans) {
        if (scan.outcomes.n_bits != n) {
            throw Error(ErrorKind::LengthMismatch, "parity scan width differs from population width");
        }
        bool placed = false;
        for (std::size_t j = 0; j < phases.size(); ++j) {
            if (std::abs(scan.phi - phases[j]) < 1e-9 && matched[j] == nullptr) {
                matched[j] = &scan;
                placed = true;
                break;
            }
        }
        if (!placed) {
            throw Error(ErrorKind::MissingScanSettings, "unexpected parity scan phase " + std::to_string(scan.phi));
        }
    }
    for (std::size_t j = 0; j < phases.size(); ++j) {
        if (matched[j] == nullptr) {
            throw Error(ErrorKind::MissingScanSettings, "missing parity scan at phi = " + std::to_string(j) +
                                                            "*pi/" + std::to_string(n + 1));
        }
        if (matched[j]->outcomes.probs.empty()) {
            throw Error(ErrorKind::EmptyCounts, "parity scan " + std::to_string(j) + " is empty");
        }
    }

    const std::string zeros(n, '0');
    const std::string ones(n, '1');
    const double pop = populations.p(zeros) + populations.p(ones);
    const double pop_var = populations.exact()
                               ? 0.0
                               : pop * (1.0 - pop) / static_cast<double>(populations.shots);

    const double scale = 2.0 / static_cast<double>(n + 1);
    std::complex<double> component{0.0, 0.0};
    std::vector<double> parities(phases.size());
    for (std::size_t j = 0; j < phases.size(); ++j) {
        parities[j] = parity(matched[j]->outcomes);
        component += scale * parities[j] * std::polar(1.0, static_cast<double>(n) * phases[j]);
    }
    const double magnitude = std::abs(component);
    const double coherence = std::min(1.0, magnitude);

    // dC/dPi_j = scale * Re(conj(Z)/|Z| * e^{i n phi_j}); bounded by scale when Z = 0.
    double coh_var = 0.0;
    for (std::size_t j = 0; j < phases.size(); ++j) {
        const Distribution& d = matched[j]->outcomes;
        if (d.exact()) continue;
        const double var_pi = std::max(0.0, 1.0 - parities[j] * parities[j]) / static_cast<double>(d.shots);
        double grad = scale;
        if (magnitude > 0.0) {
            grad = scale * std::real(std::conj(component) / magnitude *
                                     std::polar(1.0, static_cast<double>(n) * phases[j]));
        }
        coh_var += grad * grad * var_pi;
    }

    return {(pop + coherence) / 2.0, 0.5 * std::sqrt(pop_var + coh_var)};
}

Estimate ghz_fidelity(const CountsTable& populations,
                      const std::vector<std::pair<double, CountsTable>>& scans) {
    std::vector<ParityScan> converted;
    converted.reserve(scans.size());
    for (const auto& [phi, counts] : scans) {
        if (counts.shots() == 0) throw Error(ErrorKind::EmptyCounts, "parity scan has no shots");
        converted.push_back({phi, Distribution::from_counts(counts)});
    }
    if (populations.shots() == 0) throw Error(ErrorKind::EmptyCounts, "GHZ population record is empty");
    return ghz_fidelity(Distribution::from_counts(populations), converted);
}

}  // namespace qubench
