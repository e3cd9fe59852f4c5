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

#include "qubench/statevector.hpp"

#include "qubench/error.hpp"
#include "qubench/rng.hpp"
#include "sampling.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>

namespace qubench {

namespace {

using cd = std::complex<double>;

struct Mat2 {
    cd a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 one_qubit_matrix(const Gate& g) {
    const double s = 1.0 / std::numbers::sqrt2;
    const double ch = std::cos(g.angle / 2.0);
    const double sh = std::sin(g.angle / 2.0);
    const cd i{0.0, 1.0};
    switch (g.kind) {
        case GateKind::H: return {s, s, s, -s};
        case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y: return {0.0, -i, i, 0.0};
        case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
        case GateKind::RX: return {ch, -i * sh, -i * sh, ch};
        case GateKind::RY: return {ch, -sh, sh, ch};
        case GateKind::RZ: return {cd{ch, -sh}, 0.0, 0.0, cd{ch, sh}};
        default: break;
    }
    throw Error(ErrorKind::InvalidArgument, "not a one-qubit gate");
}

void check_width(std::size_t n) {
    if (n > kMaxSimQubits) {
        throw Error(ErrorKind::WidthExceeded, "state-vector simulation supports at most " +
                                                  std::to_string(kMaxSimQubits) + " qubits, got " +
                                                  std::to_string(n));
    }
}

}  // namespace

std::string to_bitstring(std::uint64_t index, std::size_t n_bits) {
    std::string bits(n_bits, '0');
    for (std::size_t q = 0; q < n_bits; ++q) {
        if ((index >> q) & 1U) bits[q] = '1';
    }
    return bits;
}

std::uint64_t from_bitstring(std::string_view bits) {
    if (bits.size() > 64) throw Error(ErrorKind::LengthMismatch, "bitstring longer than 64 bits");
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] == '1') {
            index |= std::uint64_t{1} << q;
        } else if (bits[q] != '0') {
            throw Error(ErrorKind::InvalidArgument, "bitstring may contain only '0' and '1'");
        }
    }
    return index;
}

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) throw Error(ErrorKind::InvalidArgument, "state needs at least one qubit");
    check_width(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, cd{0.0, 0.0});
    amps_[0] = 1.0;
}

void StateVector::apply(const Gate& g) {
    const std::size_t dim = amps_.size();
    const std::size_t q0 = g.qubits[0];
    if (q0 >= n_qubits_ || (g.arity() == 2 && g.qubits[1] >= n_qubits_)) {
        throw Error(ErrorKind::InvalidArgument, "gate outside state register");
    }

    if (g.arity() == 1) {
        const std::size_t bit = std::size_t{1} << q0;
        if (g.kind == GateKind::X) {
            for (std::size_t i = 0; i < dim; ++i) {
                if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
            }
            return;
        }
        if (g.kind == GateKind::Z) {
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & bit) amps_[i] = -amps_[i];
            }
            return;
        }
        const Mat2 m = one_qubit_matrix(g);
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & bit) continue;
            const cd lo = amps_[i];
            const cd hi = amps_[i | bit];
            amps_[i] = m.a * lo + m.b * hi;
            amps_[i | bit] = m.c * lo + m.d * hi;
        }
        return;
    }

    const std::size_t b0 = std::size_t{1} << q0;
    const std::size_t b1 = std::size_t{1} << g.qubits[1];
    switch (g.kind) {
        case GateKind::CNOT:
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & b0) && !(i & b1)) std::swap(amps_[i], amps_[i | b1]);
            }
            break;
        case GateKind::CZ:
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & b0) && (i & b1)) amps_[i] = -amps_[i];
            }
            break;
        case GateKind::CPHASE: {
            const cd phase = std::polar(1.0, g.angle);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & b0) && (i & b1)) amps_[i] *= phase;
            }
            break;
        }
        case GateKind::SWAP:
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & b0) && !(i & b1)) std::swap(amps_[i], amps_[(i ^ b0) | b1]);
            }
            break;
        default:
            throw Error(ErrorKind::InvalidArgument, "not a two-qubit gate");
    }
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const cd& a : amps_) total += std::norm(a);
    return total;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) out[i] = std::norm(amps_[i]);
    return out;
}

CountsTable::CountsTable(std::size_t n_bits) : n_bits_(n_bits) {
    if (n_bits == 0) throw Error(ErrorKind::InvalidArgument, "counts table needs at least one bit");
}

void CountsTable::add(std::string_view bits, std::uint64_t count) {
    if (bits.size() != n_bits_) {
        throw Error(ErrorKind::LengthMismatch, "bitstring '" + std::string(bits) + "' has length " +
                                                   std::to_string(bits.size()) + ", expected " +
                                                   std::to_string(n_bits_));
    }
    if (bits.find_first_not_of("01") != std::string_view::npos) {
        throw Error(ErrorKind::InvalidArgument, "bitstring may contain only '0' and '1'");
    }
    if (count == 0) return;
    auto it = entries_.find(bits);
    if (it == entries_.end()) {
        entries_.emplace(std::string(bits), count);
    } else {
        it->second += count;
    }
    shots_ += count;
}

std::uint64_t CountsTable::count(std::string_view bits) const {
    auto it = entries_.find(bits);
    return it == entries_.end() ? 0 : it->second;
}

std::string CountsTable::to_json() const {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [bits, n] : entries_) counts[bits] = n;
    nlohmann::json j = {{"shots", shots_}, {"counts", counts}};
    return j.dump();
}

CountsTable CountsTable::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("counts JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("counts") || !j["counts"].is_object() || j["counts"].empty()) {
        throw Error(ErrorKind::Parse, "counts JSON needs a non-empty \"counts\" object");
    }
    const auto& counts = j["counts"];
    CountsTable table(counts.begin().key().size());
    for (auto it = counts.begin(); it != counts.end(); ++it) {
        if (!it.value().is_number_unsigned()) throw Error(ErrorKind::Parse, "counts must be non-negative integers");
        table.add(it.key(), it.value().get<std::uint64_t>());
    }
    if (j.contains("shots")) {
        if (!j["shots"].is_number_unsigned() || j["shots"].get<std::uint64_t>() != table.shots()) {
            throw Error(ErrorKind::Parse, "\"shots\" does not equal the sum of counts");
        }
    }
    return table;
}

double Distribution::p(std::string_view bits) const {
    auto it = probs.find(bits);
    return it == probs.end() ? 0.0 : it->second;
}

Distribution Distribution::from_counts(const CountsTable& counts) {
    if (counts.shots() == 0) throw Error(ErrorKind::EmptyCounts, "counts table has no shots");
    Distribution d;
    d.n_bits = counts.n_bits();
    d.shots = counts.shots();
    const double total = static_cast<double>(counts.shots());
    for (const auto& [bits, n] : counts.entries()) d.probs.emplace(bits, static_cast<double>(n) / total);
    return d;
}

Distribution Distribution::exact_from(const StateVector& sv) {
    Distribution d;
    d.n_bits = sv.n_qubits();
    const auto amps = sv.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        if (p > 0.0) d.probs.emplace(to_bitstring(i, d.n_bits), p);
    }
    return d;
}

StateVector run(const Circuit& c) {
    check_width(c.n_qubits());
    StateVector sv(c.n_qubits());
    for (const Gate& g : c) sv.apply(g);
    return sv;
}

CountsTable sample(const StateVector& sv, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw Error(ErrorKind::InvalidArgument, "shots must be positive");
    const detail::CdfSampler sampler(sv);
    std::map<std::uint64_t, std::uint64_t> hits;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        auto rng = stream(seed, shot);
        ++hits[sampler.draw(rng.uniform())];
    }
    CountsTable counts(sv.n_qubits());
    for (const auto& [index, n] : hits) counts.add(to_bitstring(index, sv.n_qubits()), n);
    return counts;
}

double probability(const StateVector& sv, std::string_view bits) {
    if (bits.size() != sv.n_qubits()) {
        throw Error(ErrorKind::LengthMismatch, "bitstring length " + std::to_string(bits.size()) +
                                                   " does not match " + std::to_string(sv.n_qubits()) +
                                                   " qubits");
    }
    return std::norm(sv.amplitude(from_bitstring(bits)));
}

double expectation_diagonal(const StateVector& sv,
                            const std::function<double(std::string_view)>& cost) {
    const auto amps = sv.amplitudes();
    double total = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        total += std::norm(amps[i]) * cost(to_bitstring(i, sv.n_qubits()));
    }
    return total;
}

}  // namespace qubench
