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

#include "qubench/bench/qaoa.hpp"

#include "qubench/error.hpp"
#include "qubench/execute.hpp"
#include "qubench/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace qubench {

namespace {

using Edge32 = std::pair<std::uint32_t, std::uint32_t>;

void normalize(Graph& g) {
    for (auto& [u, v] : g.edges) {
        if (u == v) throw Error(ErrorKind::InvalidArgument, "graph self-loop on vertex " + std::to_string(u));
        if (u >= g.n_vertices || v >= g.n_vertices) throw Error(ErrorKind::InvalidArgument, "graph edge out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end()) {
        throw Error(ErrorKind::InvalidArgument, "graph has duplicate edges");
    }
}

void check_length(std::string_view z, const Graph& g) {
    if (z.size() != g.n_vertices) {
        throw Error(ErrorKind::LengthMismatch, "assignment of length " + std::to_string(z.size()) +
                                                   " for a graph with " + std::to_string(g.n_vertices) +
                                                   " vertices");
    }
}

std::size_t hamming(std::string_view a, std::string_view b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace

double Graph::density() const noexcept {
    if (n_vertices < 2) return 0.0;
    const double pairs = static_cast<double>(n_vertices) * static_cast<double>(n_vertices - 1) / 2.0;
    return static_cast<double>(edges.size()) / pairs;
}

std::string GraphSpec::label() const {
    switch (kind) {
        case GraphKind::Path: return "path" + std::to_string(n);
        case GraphKind::BarabasiAlbert: return "ba" + std::to_string(n) + "_" + std::to_string(m);
        case GraphKind::CompleteBipartite: return "k" + std::to_string(a) + "_" + std::to_string(b);
    }
    return "graph";
}

Graph make_path(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "path graph needs at least one vertex");
    Graph g{n, {}};
    for (std::uint32_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

Graph make_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m == 0 || m >= n) throw Error(ErrorKind::InvalidArgument, "Barabasi-Albert graph needs 0 < m < n");
    Graph g{n, {}};
    std::vector<std::size_t> degree(n, 0);
    for (std::uint32_t u = 0; u <= m; ++u) {
        for (std::uint32_t v = u + 1; v <= m; ++v) {
            g.edges.emplace_back(u, v);
            ++degree[u];
            ++degree[v];
        }
    }

    Xoshiro256 rng(seed);
    for (std::size_t fresh = m + 1; fresh < n; ++fresh) {
        std::vector<bool> chosen(fresh, false);
        std::vector<std::uint32_t> targets;
        while (targets.size() < m) {
            std::uint64_t total = 0;
            for (std::size_t v = 0; v < fresh; ++v) {
                if (!chosen[v]) total += degree[v];
            }
            std::uint64_t pick = rng.below(total);
            std::size_t v = 0;
            for (;; ++v) {
                if (chosen[v]) continue;
                if (pick < degree[v]) break;
                pick -= degree[v];
            }
            chosen[v] = true;
            targets.push_back(static_cast<std::uint32_t>(v));
        }
        for (std::uint32_t t : targets) {
            g.edges.emplace_back(t, static_cast<std::uint32_t>(fresh));
            ++degree[t];
            ++degree[fresh];
        }
    }
    normalize(g);
    return g;
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) throw Error(ErrorKind::InvalidArgument, "complete bipartite graph needs non-empty sides");
    Graph g{a + b, {}};
    for (std::uint32_t u = 0; u < a; ++u) {
        for (std::uint32_t v = 0; v < b; ++v) g.edges.emplace_back(u, static_cast<std::uint32_t>(a + v));
    }
    normalize(g);
    return g;
}

Graph make_graph(const GraphSpec& spec) {
    switch (spec.kind) {
        case GraphKind::Path: return make_path(spec.n);
        case GraphKind::BarabasiAlbert: return make_barabasi_albert(spec.n, spec.m, spec.seed);
        case GraphKind::CompleteBipartite: return make_complete_bipartite(spec.a, spec.b);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown graph kind");
}

double mvc_cost(std::string_view z, const Graph& g, double penalty) {
    check_length(z, g);
    double cost = 0.0;
    for (char bit : z) cost += bit == '1' ? 1.0 : 0.0;
    for (const auto& [u, v] : g.edges) {
        if (z[u] == '0' && z[v] == '0') cost += penalty;
    }
    return cost;
}

bool is_vertex_cover(std::string_view z, const Graph& g) {
    check_length(z, g);
    return std::all_of(g.edges.begin(), g.edges.end(),
                       [&](const Edge32& e) { return z[e.first] == '1' || z[e.second] == '1'; });
}

Circuit make_qaoa_cost_layer(const Graph& g, double gamma, double penalty) {
    // C(z) = sum z_i + P*|E| - P*sum_{uv} (z_u + z_v) + P*sum_{uv} z_u z_v.
    // diag(1, e^{i phi}) ~ RZ(phi); e^{-i gamma C} needs phi_i = -gamma + gamma*P*deg(i)
    // on vertices and e^{-i gamma P} on |11> of every edge.
    std::vector<std::size_t> degree(g.n_vertices, 0);
    for (const auto& [u, v] : g.edges) {
        ++degree[u];
        ++degree[v];
    }
    Circuit c(g.n_vertices);
    for (std::size_t i = 0; i < g.n_vertices; ++i) {
        c.add(Gate::rz(static_cast<Qubit>(i), -gamma + gamma * penalty * static_cast<double>(degree[i])));
    }
    for (const auto& [u, v] : g.edges) c.add(Gate::cphase(u, v, -gamma * penalty));
    return c;
}

Circuit make_qaoa_circuit(const Graph& g, const QaoaParams& params) {
    if (params.p != 1) throw Error(ErrorKind::InvalidArgument, "only depth p = 1 QAOA is supported");
    if (!(params.penalty > 1.0)) throw Error(ErrorKind::InvalidArgument, "QAOA penalty must exceed 1");
    Circuit c(g.n_vertices);
    for (Qubit q = 0; q < g.n_vertices; ++q) c.add(Gate::h(q));
    c.append(make_qaoa_cost_layer(g, params.gamma, params.penalty));
    for (Qubit q = 0; q < g.n_vertices; ++q) c.add(Gate::rx(q, 2.0 * params.beta));
    return c;
}

double mean_cost(const Distribution& d, const Graph& g, double penalty) {
    double total = 0.0;
    for (const auto& [bits, p] : d.probs) total += p * mvc_cost(bits, g, penalty);
    return total;
}

double exact_qaoa_expectation(const Graph& g, const QaoaParams& params) {
    const StateVector sv = run(make_qaoa_circuit(g, params));
    return expectation_diagonal(sv, [&](std::string_view z) { return mvc_cost(z, g, params.penalty); });
}

QaoaOptimization optimize_qaoa(const Graph& g, double penalty,
                               const std::function<double(const QaoaParams&)>& objective) {
    (void)g;
    QaoaOptimization result;
    auto evaluate = [&](double gamma, double beta) {
        const double value = objective({gamma, beta, 1, penalty});
        result.trace.push_back({gamma, beta, value});
        return value;
    };

    const double gamma_step = std::numbers::pi / static_cast<double>(kQaoaGridSize);
    const double beta_step = std::numbers::pi / 2.0 / static_cast<double>(kQaoaGridSize);
    double best = std::numeric_limits<double>::infinity();
    std::array<double, 2> start{0.0, 0.0};
    for (std::size_t i = 0; i < kQaoaGridSize; ++i) {
        for (std::size_t j = 0; j < kQaoaGridSize; ++j) {
            const double gamma = gamma_step * static_cast<double>(i);
            const double beta = beta_step * static_cast<double>(j);
            const double value = evaluate(gamma, beta);
            if (value < best) {
                best = value;
                start = {gamma, beta};
            }
        }
    }

    // Nelder-Mead on (gamma, beta): reflection 1, expansion 2, contraction 1/2, shrink 1/2.
    struct Vertex {
        std::array<double, 2> x;
        double f;
    };
    std::size_t budget = kQaoaRefineBudget;
    auto eval_vertex = [&](std::array<double, 2> x) {
        --budget;
        return Vertex{x, evaluate(x[0], x[1])};
    };
    std::array<Vertex, 3> simplex{Vertex{start, best}, eval_vertex({start[0] + gamma_step, start[1]}),
                                  eval_vertex({start[0], start[1] + beta_step})};
    auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
    auto lerp = [](const std::array<double, 2>& a, const std::array<double, 2>& b, double t) {
        return std::array<double, 2>{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
    };

    while (true) {
        std::sort(simplex.begin(), simplex.end(), by_value);
        if (simplex[2].f - simplex[0].f < kQaoaRefineSpread || budget == 0) break;

        const std::array<double, 2> centroid{(simplex[0].x[0] + simplex[1].x[0]) / 2.0,
                                             (simplex[0].x[1] + simplex[1].x[1]) / 2.0};
        const Vertex reflected = eval_vertex(lerp(centroid, simplex[2].x, -1.0));
        if (reflected.f < simplex[0].f) {
            if (budget == 0) {
                simplex[2] = reflected;
                continue;
            }
            const Vertex expanded = eval_vertex(lerp(centroid, simplex[2].x, -2.0));
            simplex[2] = expanded.f < reflected.f ? expanded : reflected;
            continue;
        }
        if (reflected.f < simplex[1].f) {
            simplex[2] = reflected;
            continue;
        }
        if (budget == 0) break;
        const bool outside = reflected.f < simplex[2].f;
        const Vertex contracted =
            eval_vertex(outside ? lerp(centroid, reflected.x, 0.5) : lerp(centroid, simplex[2].x, 0.5));
        if (contracted.f < std::min(reflected.f, simplex[2].f)) {
            simplex[2] = contracted;
            continue;
        }
        for (std::size_t v = 1; v < 3 && budget > 0; ++v) {
            simplex[v] = eval_vertex(lerp(simplex[0].x, simplex[v].x, 0.5));
        }
    }
    std::sort(simplex.begin(), simplex.end(), by_value);

    const auto& winner = simplex[0].f < best ? simplex[0] : Vertex{start, best};
    result.best = {winner.x[0], winner.x[1], 1, penalty};
    result.best_expectation = winner.f;
    return result;
}

QaoaOptimization optimize_qaoa(const Graph& g, const DeviceModel& dev, std::uint64_t shots,
                               std::uint64_t seed, double penalty) {
    if (shots == 0) {
        if (!dev.noiseless()) {
            throw Error(ErrorKind::InvalidArgument, "exact QAOA expectation requires a noiseless device");
        }
        return optimize_qaoa(g, penalty, [&](const QaoaParams& p) { return exact_qaoa_expectation(g, p); });
    }
    std::uint64_t evaluation = 0;
    return optimize_qaoa(g, penalty, [&](const QaoaParams& p) {
        const Execution exec = execute(make_qaoa_circuit(g, p), dev, shots, derive_seed(seed, evaluation++));
        return mean_cost(exec.outcomes, g, penalty);
    });
}

MvcOptimum solve_mvc(const Graph& g, double penalty) {
    if (g.n_vertices > kMaxSimQubits) {
        throw Error(ErrorKind::WidthExceeded, "exhaustive vertex-cover search supports at most " +
                                                  std::to_string(kMaxSimQubits) + " vertices");
    }
    MvcOptimum best{std::numeric_limits<double>::infinity(), {}};
    const std::uint64_t limit = std::uint64_t{1} << g.n_vertices;
    for (std::uint64_t z = 0; z < limit; ++z) {
        const std::string bits = to_bitstring(z, g.n_vertices);
        const double cost = mvc_cost(bits, g, penalty);
        if (cost < best.cost - 1e-12) {
            best.cost = cost;
            best.solutions.clear();
        }
        if (std::abs(cost - best.cost) <= 1e-12) best.solutions.push_back(bits);
    }
    // Little-endian strings are not in index order; callers binary-search.
    std::sort(best.solutions.begin(), best.solutions.end());
    return best;
}

QaoaMetrics qaoa_metrics(const Distribution& d, const Graph& g, double penalty) {
    if (d.probs.empty()) throw Error(ErrorKind::EmptyCounts, "QAOA outcomes are empty");
    if (d.n_bits != g.n_vertices) {
        throw Error(ErrorKind::LengthMismatch, "outcome width differs from the vertex count");
    }
    const MvcOptimum optimum = solve_mvc(g, penalty);

    QaoaMetrics m;
    m.optimum = optimum.cost;
    double cost_sq = 0.0;
    double ham_sq = 0.0;
    for (const auto& [bits, p] : d.probs) {
        const double cost = mvc_cost(bits, g, penalty);
        m.mean_cost += p * cost;
        cost_sq += p * cost * cost;
        if (is_vertex_cover(bits, g)) m.feasibility.value += p;
        if (std::binary_search(optimum.solutions.begin(), optimum.solutions.end(), bits)) m.success.value += p;
        std::size_t nearest = bits.size();
        for (const auto& opt : optimum.solutions) nearest = std::min(nearest, hamming(bits, opt));
        m.mean_hamming.value += p * static_cast<double>(nearest);
        ham_sq += p * static_cast<double>(nearest) * static_cast<double>(nearest);
    }
    if (optimum.cost <= 0.0 || m.mean_cost <= 0.0) {
        throw Error(ErrorKind::UndefinedRatio, "approximation ratio undefined for zero cost");
    }
    m.hamming_var = std::max(0.0, ham_sq - m.mean_hamming.value * m.mean_hamming.value);
    m.approx_ratio.value = optimum.cost / m.mean_cost;

    if (!d.exact()) {
        const double shots = static_cast<double>(d.shots);
        const double cost_var = std::max(0.0, cost_sq - m.mean_cost * m.mean_cost);
        m.approx_ratio.err = optimum.cost / (m.mean_cost * m.mean_cost) * std::sqrt(cost_var / shots);
        m.feasibility.err = binomial_err(m.feasibility.value, d.shots);
        m.success.err = binomial_err(m.success.value, d.shots);
        m.mean_hamming.err = std::sqrt(m.hamming_var / shots);
    }
    return m;
}

QaoaMetrics qaoa_metrics(const CountsTable& counts, const Graph& g, double penalty) {
    if (counts.shots() == 0) throw Error(ErrorKind::EmptyCounts, "QAOA counts are empty");
    return qaoa_metrics(Distribution::from_counts(counts), g, penalty);
}

}  // namespace qubench
