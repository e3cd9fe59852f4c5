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

#include "qubench/bench/result.hpp"
#include "qubench/circuit.hpp"
#include "qubench/device.hpp"
#include "qubench/statevector.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qubench {

/// Simple undirected graph; edges normalized (u < v), sorted, unique.
struct Graph {
    std::size_t n_vertices = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    /// |E| / C(n, 2).
    double density() const noexcept;
};

enum class GraphKind { Path, BarabasiAlbert, CompleteBipartite };

struct GraphSpec {
    GraphKind kind = GraphKind::Path;
    std::size_t n = 10;       // Path, BarabasiAlbert
    std::size_t m = 2;        // BarabasiAlbert
    std::uint64_t seed = 0;   // BarabasiAlbert
    std::size_t a = 5, b = 5; // CompleteBipartite

    /// "path10", "ba10_2", "k5_5".
    std::string label() const;
};

Graph make_path(std::size_t n);

/// Preferential attachment: complete graph on m+1 vertices, then every new
/// vertex links to m distinct existing vertices drawn with probability
/// proportional to their current degree. Always m(m+1)/2 + m(n-m-1) edges.
Graph make_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

/// Vertices 0..a-1 on one side, a..a+b-1 on the other.
Graph make_complete_bipartite(std::size_t a, std::size_t b);

Graph make_graph(const GraphSpec& spec);

inline constexpr double kDefaultPenalty = 2.0;

/// C(z) = sum_i z_i + penalty * sum_{(u,v) in E} (1 - z_u)(1 - z_v), z_i = 1
/// meaning vertex i is in the cover. Throws LengthMismatch.
double mvc_cost(std::string_view z, const Graph& g, double penalty = kDefaultPenalty);

bool is_vertex_cover(std::string_view z, const Graph& g);

struct QaoaParams {
    double gamma = 0.0;
    double beta = 0.0;
    std::size_t p = 1;
    double penalty = kDefaultPenalty;
};

/// e^{-i gamma H_C} up to global phase: RZ(-gamma + gamma*penalty*deg(i)) on
/// every vertex and CPHASE(-gamma*penalty) on every edge.
Circuit make_qaoa_cost_layer(const Graph& g, double gamma, double penalty = kDefaultPenalty);

/// H on all qubits, the cost layer, then RX(2 beta) on all qubits. p must be 1.
Circuit make_qaoa_circuit(const Graph& g, const QaoaParams& params);

/// Mean cost of a distribution.
double mean_cost(const Distribution& d, const Graph& g, double penalty = kDefaultPenalty);

struct QaoaTracePoint {
    double gamma = 0.0;
    double beta = 0.0;
    double expectation = 0.0;
};

struct QaoaOptimization {
    QaoaParams best;
    double best_expectation = 0.0;
    std::vector<QaoaTracePoint> trace;
};

inline constexpr std::size_t kQaoaGridSize = 16;
inline constexpr std::size_t kQaoaRefineBudget = 100;
inline constexpr double kQaoaRefineSpread = 1e-4;

/// 16x16 grid over gamma in [0, pi), beta in [0, pi/2), then a Nelder-Mead
/// refinement from the best grid point (at most 100 evaluations, stops once
/// the simplex values spread by less than 1e-4). Every evaluation lands in
/// the trace, in order.
QaoaOptimization optimize_qaoa(const Graph& g, double penalty,
                               const std::function<double(const QaoaParams&)>& objective);

/// Objective is <H_C> estimated from `shots` samples on `dev` (evaluation i
/// seeded by stream index i of `seed`); shots == 0 uses the exact expectation
/// and needs a noiseless device.
QaoaOptimization optimize_qaoa(const Graph& g, const DeviceModel& dev, std::uint64_t shots,
                               std::uint64_t seed, double penalty = kDefaultPenalty);

/// Exact <H_C> of the ideal QAOA state.
double exact_qaoa_expectation(const Graph& g, const QaoaParams& params);

/// Exhaustive minimum-cost solutions (n <= 20).
struct MvcOptimum {
    double cost = 0.0;
    std::vector<std::string> solutions;
};

MvcOptimum solve_mvc(const Graph& g, double penalty = kDefaultPenalty);

struct QaoaMetrics {
    Estimate approx_ratio;   // C_opt / <C>
    Estimate feasibility;    // fraction of valid covers
    Estimate success;        // fraction of optimal samples
    Estimate mean_hamming;   // to the nearest optimal solution
    double hamming_var = 0.0;
    double mean_cost = 0.0;
    double optimum = 0.0;
};

/// Throws UndefinedRatio when C_opt or <C> is zero.
QaoaMetrics qaoa_metrics(const Distribution& d, const Graph& g, double penalty = kDefaultPenalty);
QaoaMetrics qaoa_metrics(const CountsTable& counts, const Graph& g, double penalty = kDefaultPenalty);

}  // namespace qubench
