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

#include "qubench/bench/qaoa.hpp"
#include "qubench/bench/result.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qubench {

enum class BenchmarkKind { Bell, Ghz, Qft, Grover, Qaoa };

/// One entry of RunConfig::benchmarks.
struct BenchmarkSpec {
    BenchmarkKind kind = BenchmarkKind::Bell;
    std::size_t n = 2;
    double threshold = 0.0;       // qft
    std::string input;            // qft round-trip input; empty = default
    std::string marked;           // grover; empty = all ones
    GraphSpec graph;              // qaoa
    double penalty = kDefaultPenalty;

    /// "bell", "ghz6", "qft6", "grover4", "qaoa_path10", ...
    std::string label() const;
};

struct RunConfig {
    std::vector<BenchmarkSpec> benchmarks;
    std::vector<std::string> devices;  // preset names or device JSON paths
    std::uint64_t shots = 100;
    std::uint64_t seed = 0;
    std::string output_dir = "results";
    /// Independent repetitions on noisy devices; more than one adds a
    /// median row per (benchmark, device).
    std::size_t noisy_seeds = 10;

    /// Throws Config on malformed input or guard violations.
    static RunConfig from_json(std::string_view json);
    static RunConfig load(const std::filesystem::path& path);

    /// Canonical form: defaults filled in, keys sorted.
    std::string to_json() const;
    /// FNV-1a of to_json(), 16 hex digits.
    std::string hash() const;
};

struct Provenance {
    std::string config_hash;
    std::string tool_version;
    /// ISO-8601 UTC from SOURCE_DATE_EPOCH; unset otherwise so archives stay
    /// reproducible.
    std::optional<std::string> timestamp;
    std::string config_json;
};

struct ResultsArchive {
    Provenance provenance;
    std::vector<BenchmarkResult> rows;
};

/// extras["replicate"] marks per-seed rows on noisy devices (an integer) and
/// the aggregate over them ("median"); rows without it are single runs.
inline constexpr const char* kReplicateKey = "replicate";

const char* tool_version() noexcept;

/// Runs every (benchmark, device) pair. Errors raised inside a task keep
/// their kind and gain a "benchmark on device" prefix.
ResultsArchive run_experiments(const RunConfig& cfg);

/// Task seed for (benchmark index, device, replicate).
std::uint64_t task_seed(std::uint64_t seed, std::size_t benchmark_index, std::string_view device,
                        std::size_t replicate);

/// JSON lines: a provenance header, then one row per line.
std::string archive_to_jsonl(const ResultsArchive& archive);
ResultsArchive archive_from_jsonl(std::string_view text);
void write_archive(const ResultsArchive& archive, const std::filesystem::path& path);
ResultsArchive read_archive(const std::filesystem::path& path);

/// True for rows that feed tables and plots (single runs and aggregates).
bool is_summary_row(const BenchmarkResult& row);

inline constexpr std::array<std::string_view, 5> kTableIds{"chsh", "ghz", "qft", "grover", "qaoa"};

/// CSV text. Throws NoMatchingRows, or InvalidArgument on an unknown id.
std::string render_table(const ResultsArchive& archive, std::string_view table_id);

inline constexpr std::array<std::string_view, 9> kFigureIds{
    "chsh_bars",     "ghz_vs_n",     "qft_fid_vs_n",         "qft_depth_bars",     "grover_vs_k",
    "grover_peak_vs_n", "qaoa_ar_bars", "qaoa_feas_vs_density", "qaoa_hamming_vs_ar"};

struct PlotPoint {
    double x = 0.0;
    double y = 0.0;
    double err = 0.0;
    std::string tag;  // category name for bar charts, else empty
};

struct PlotSeries {
    std::string name;
    std::vector<PlotPoint> points;
};

/// Series of one figure. Throws NoMatchingRows or InvalidArgument.
std::vector<PlotSeries> plot_data(const ResultsArchive& archive, std::string_view figure_id);

/// Writes `<figure_id>__<series>.dat` files ("x y err" lines) into out_dir
/// and returns their paths.
std::vector<std::filesystem::path> emit_plot_data(const ResultsArchive& archive, std::string_view figure_id,
                                                  const std::filesystem::path& out_dir);

}  // namespace qubench
