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

#include "qubench/bench/qft.hpp"

#include "qubench/error.hpp"

#include <cmath>
#include <numbers>

namespace qubench {

Circuit make_qft(std::size_t n, double threshold) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "QFT needs n >= 1");
    if (!(threshold >= 0.0)) throw Error(ErrorKind::InvalidArgument, "QFT threshold must be >= 0");
    Circuit c(n);
    for (std::size_t j = n; j-- > 0;) {
        c.add(Gate::h(static_cast<Qubit>(j)));
        for (std::size_t m = j; m-- > 0;) {
            const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - m + 1));
            if (std::abs(angle) < threshold) continue;
            c.add(Gate::cphase(static_cast<Qubit>(j), static_cast<Qubit>(m), angle));
        }
    }
    for (std::size_t i = 0; i < n / 2; ++i) {
        c.add(Gate::swap(static_cast<Qubit>(i), static_cast<Qubit>(n - 1 - i)));
    }
    return c;
}

double aqft_error(std::size_t n, double threshold, double rel_tol) {
    if (n > kMaxAqftQubits) {
        throw Error(ErrorKind::WidthExceeded, "approximate-QFT error supports at most " +
                                                  std::to_string(kMaxAqftQubits) + " qubits");
    }
    const Matrix diff = to_unitary(make_qft(n, 0.0)) - to_unitary(make_qft(n, threshold));
    const Matrix gram = diff.adjoint() * diff;
    if (gram.cwiseAbs().maxCoeff() == 0.0) return 0.0;

    // Largest eigenvalue of the Hermitian PSD Gram matrix = sigma_max^2.
    const Eigen::Index dim = gram.rows();
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i) = std::complex<double>(1.0 + 1.0 / static_cast<double>(i + 1), 0.5 / static_cast<double>(i + 2));
    }
    v.normalize();
    double lambda = 0.0;
    constexpr int kMaxIterations = 100000;
    for (int it = 0; it < kMaxIterations; ++it) {
        Eigen::VectorXcd w = gram * v;
        const double next = std::real(v.dot(w));
        const double wn = w.norm();
        if (wn == 0.0) return 0.0;
        v = w / wn;
        if (it > 0 && std::abs(next - lambda) <= rel_tol * std::abs(next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return std::sqrt(std::max(0.0, lambda));
}

Circuit make_qft_roundtrip(std::size_t n, std::string_view input) {
    if (input.size() != n) {
        throw Error(ErrorKind::LengthMismatch, "round-trip input '" + std::string(input) +
                                                   "' does not have " + std::to_string(n) + " bits");
    }
    Circuit c(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (input[q] == '1') {
            c.add(Gate::x(static_cast<Qubit>(q)));
        } else if (input[q] != '0') {
            throw Error(ErrorKind::InvalidArgument, "round-trip input may contain only '0' and '1'");
        }
    }
    const Circuit qft = make_qft(n, 0.0);
    c.append(qft);
    c.append(inverse(qft));
    return c;
}

std::string default_roundtrip_input(std::size_t n) {
    std::string bits(n, '0');
    for (std::size_t q = 0; q < n; q += 2) bits[q] = '1';
    return bits;
}

Estimate roundtrip_fidelity(const Distribution& d, std::string_view input) {
    if (input.size() != d.n_bits) {
        throw Error(ErrorKind::LengthMismatch, "round-trip input length differs from outcome width");
    }
    if (d.probs.empty()) throw Error(ErrorKind::EmptyCounts, "round-trip outcomes are empty");
    const double p = d.p(input);
    return {p, binomial_err(p, d.shots)};
}

}  // namespace qubench
