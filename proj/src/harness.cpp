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

#include "qubench/harness.hpp"

#include "qubench/bench/chsh.hpp"
#include "qubench/bench/ghz.hpp"
#include "qubench/bench/grover.hpp"
#include "qubench/bench/qft.hpp"
#include "qubench/device.hpp"
#include "qubench/error.hpp"
#include "qubench/execute.hpp"
#include "qubench/rng.hpp"
#include "text_util.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qubench {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::Config, msg); }

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) config_error(where + ": missing \"" + key + "\"");
    return *it;
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            config_error(where + ": unknown field \"" + key + "\"");
        }
    }
}

std::uint64_t get_uint(const json& v, const std::string& where) {
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
        config_error(where + " must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

double get_double(const json& v, const std::string& where) {
    if (!v.is_number()) config_error(where + " must be a number");
    return v.get<double>();
}

std::string get_string(const json& v, const std::string& where) {
    if (!v.is_string()) config_error(where + " must be a string");
    return v.get<std::string>();
}

bool is_bits(std::string_view s) { return s.find_first_not_of("01") == std::string_view::npos; }

GraphSpec parse_graph(const json& j, const std::string& where) {
    if (!j.is_object()) config_error(where + " must be an object");
    GraphSpec g;
    const std::string kind = get_string(require(j, "kind", where), where + ".kind");
    if (kind == "path") {
        reject_unknown(j, {"kind", "n"}, where);
        g.kind = GraphKind::Path;
        g.n = get_uint(require(j, "n", where), where + ".n");
    } else if (kind == "ba") {
        reject_unknown(j, {"kind", "n", "m", "seed"}, where);
        g.kind = GraphKind::BarabasiAlbert;
        g.n = get_uint(require(j, "n", where), where + ".n");
        g.m = get_uint(require(j, "m", where), where + ".m");
        if (j.contains("seed")) g.seed = get_uint(j["seed"], where + ".seed");
        if (g.m == 0 || g.m >= g.n) config_error(where + ": need 0 < m < n");
    } else if (kind == "complete_bipartite") {
        reject_unknown(j, {"kind", "a", "b"}, where);
        g.kind = GraphKind::CompleteBipartite;
        g.a = get_uint(require(j, "a", where), where + ".a");
        g.b = get_uint(require(j, "b", where), where + ".b");
        if (g.a == 0 || g.b == 0) config_error(where + ": sides must be non-empty");
        g.n = g.a + g.b;
    } else {
        config_error(where + ": unknown graph kind \"" + kind + "\"");
    }
    if (g.n == 0 || g.n > kMaxSimQubits) {
        config_error(where + ": graph needs 1.." + std::to_string(kMaxSimQubits) + " vertices");
    }
    return g;
}

BenchmarkSpec parse_benchmark(const json& j, const std::string& where) {
    if (!j.is_object()) config_error(where + " must be an object");
    BenchmarkSpec b;
    const std::string type = get_string(require(j, "type", where), where + ".type");
    if (type == "bell") {
        reject_unknown(j, {"type"}, where);
        b.kind = BenchmarkKind::Bell;
        b.n = 2;
    } else if (type == "ghz") {
        reject_unknown(j, {"type", "n"}, where);
        b.kind = BenchmarkKind::Ghz;
        b.n = get_uint(require(j, "n", where), where + ".n");
        if (b.n < 2 || b.n > kMaxSimQubits) config_error(where + ": ghz needs 2 <= n <= 20");
    } else if (type == "qft") {
        reject_unknown(j, {"type", "n", "threshold", "input"}, where);
        b.kind = BenchmarkKind::Qft;
        b.n = get_uint(require(j, "n", where), where + ".n");
        if (b.n < 1 || b.n > kMaxSimQubits) config_error(where + ": qft needs 1 <= n <= 20");
        if (j.contains("threshold")) b.threshold = get_double(j["threshold"], where + ".threshold");
        if (!(b.threshold >= 0.0)) config_error(where + ": threshold must be >= 0");
        b.input = j.contains("input") ? get_string(j["input"], where + ".input") : default_roundtrip_input(b.n);
        if (b.input.size() != b.n || !is_bits(b.input)) config_error(where + ": input must be n bits");
    } else if (type == "grover") {
        reject_unknown(j, {"type", "n", "marked"}, where);
        b.kind = BenchmarkKind::Grover;
        b.n = get_uint(require(j, "n", where), where + ".n");
        if (b.n < 1 || b.n > kMaxGroverQubits) config_error(where + ": grover needs 1 <= n <= 12");
        b.marked = j.contains("marked") ? get_string(j["marked"], where + ".marked") : std::string(b.n, '1');
        if (b.marked.size() != b.n || !is_bits(b.marked)) config_error(where + ": marked must be n bits");
    } else if (type == "qaoa") {
        reject_unknown(j, {"type", "graph", "penalty"}, where);
        b.kind = BenchmarkKind::Qaoa;
        b.graph = parse_graph(require(j, "graph", where), where + ".graph");
        b.n = b.graph.n;
        if (j.contains("penalty")) b.penalty = get_double(j["penalty"], where + ".penalty");
        if (!(b.penalty > 1.0)) config_error(where + ": penalty must exceed 1");
    } else {
        config_error(where + ": unknown benchmark type \"" + type + "\"");
    }
    return b;
}

json graph_to_json(const GraphSpec& g) {
    switch (g.kind) {
        case GraphKind::Path: return {{"kind", "path"}, {"n", g.n}};
        case GraphKind::BarabasiAlbert: return {{"kind", "ba"}, {"n", g.n}, {"m", g.m}, {"seed", g.seed}};
        case GraphKind::CompleteBipartite: return {{"kind", "complete_bipartite"}, {"a", g.a}, {"b", g.b}};
    }
    return {};
}

json benchmark_to_json(const BenchmarkSpec& b) {
    switch (b.kind) {
        case BenchmarkKind::Bell: return {{"type", "bell"}};
        case BenchmarkKind::Ghz: return {{"type", "ghz"}, {"n", b.n}};
        case BenchmarkKind::Qft: return {{"type", "qft"}, {"n", b.n}, {"threshold", b.threshold}, {"input", b.input}};
        case BenchmarkKind::Grover: return {{"type", "grover"}, {"n", b.n}, {"marked", b.marked}};
        case BenchmarkKind::Qaoa: return {{"type", "qaoa"}, {"graph", graph_to_json(b.graph)}, {"penalty", b.penalty}};
    }
    return {};
}

// ---- extras access ----

std::optional<double> extra_number(const BenchmarkResult& r, const std::string& key) {
    auto it = r.extras.find(key);
    if (it == r.extras.end()) return std::nullopt;
    if (const auto* i = std::get_if<std::int64_t>(&it->second)) return static_cast<double>(*i);
    if (const auto* d = std::get_if<double>(&it->second)) return *d;
    return std::nullopt;
}

std::string extra_string(const BenchmarkResult& r, const std::string& key) {
    auto it = r.extras.find(key);
    if (it == r.extras.end()) return {};
    if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
    return {};
}

double need_number(const BenchmarkResult& r, const std::string& key) {
    auto v = extra_number(r, key);
    if (!v) throw Error(ErrorKind::Parse, r.algorithm + " row on " + r.device + " lacks \"" + key + "\"");
    return *v;
}

// ---- tasks ----

struct TaskContext {
    const BenchmarkSpec& spec;
    const DeviceModel& dev;
    std::uint64_t shots;
    std::uint64_t seed;
    const QaoaOptimization* qaoa_opt = nullptr;
    const Graph* graph = nullptr;
};

void add_compile_extras(BenchmarkResult& row, const Execution& exec) {
    row.extras["depth"] = static_cast<std::int64_t>(exec.depth);
    row.extras["two_qubit_count"] = static_cast<std::int64_t>(exec.two_qubit_count);
    row.extras["added_swaps"] = static_cast<std::int64_t>(exec.added_swaps);
}

BenchmarkResult base_row(const TaskContext& t, std::string algorithm, std::string metric) {
    BenchmarkResult row;
    row.algorithm = std::move(algorithm);
    row.device = t.dev.name;
    row.n = t.spec.n;
    row.metric = std::move(metric);
    row.shots = t.shots;
    row.seed = t.seed;
    return row;
}

std::vector<BenchmarkResult> run_bell(const TaskContext& t) {
    const auto circuits = chsh_circuits();
    std::array<Distribution, 4> outcomes;
    std::size_t depth = 0, two_qubit = 0, swaps = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const Execution exec = execute(circuits[i], t.dev, t.shots, derive_seed(t.seed, i));
        outcomes[i] = exec.outcomes;
        depth = std::max(depth, exec.depth);
        two_qubit = std::max(two_qubit, exec.two_qubit_count);
        swaps = std::max(swaps, exec.added_swaps);
    }
    const Estimate s = estimate_chsh(std::span<const Distribution, 4>(outcomes));
    BenchmarkResult row = base_row(t, "chsh", "S");
    row.value = s.value;
    row.err = s.err;
    row.extras["S_ideal"] = kTsirelsonBound;
    row.extras["depth"] = static_cast<std::int64_t>(depth);
    row.extras["two_qubit_count"] = static_cast<std::int64_t>(two_qubit);
    row.extras["added_swaps"] = static_cast<std::int64_t>(swaps);
    return {row};
}

std::vector<BenchmarkResult> run_ghz(const TaskContext& t) {
    // Exact probabilities on noiseless devices: sampled parities would bias
    // the coherence term below 1 for an ideal state.
    const std::uint64_t shots = t.dev.noiseless() ? 0 : t.shots;
    const std::size_t n = t.spec.n;
    const Execution pop = execute(make_ghz(n), t.dev, shots, derive_seed(t.seed, 0));
    std::vector<ParityScan> scans;
    const auto phases = ghz_scan_phases(n);
    for (std::size_t j = 0; j < phases.size(); ++j) {
        const Execution e = execute(make_ghz_parity_circuit(n, phases[j]), t.dev, shots, derive_seed(t.seed, j + 1));
        scans.push_back({phases[j], e.outcomes});
    }
    const Estimate f = ghz_fidelity(pop.outcomes, scans);
    BenchmarkResult row = base_row(t, "ghz", "fidelity");
    row.shots = shots;
    row.value = f.value;
    row.err = f.err;
    row.extras["F_ideal"] = 1.0;
    add_compile_extras(row, pop);
    return {row};
}

std::vector<BenchmarkResult> run_qft(const TaskContext& t) {
    const std::size_t n = t.spec.n;
    Circuit c(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (t.spec.input[q] == '1') c.add(Gate::x(static_cast<Qubit>(q)));
    }
    const Circuit qft = make_qft(n, t.spec.threshold);
    c.append(qft);
    c.append(inverse(qft));
    const Execution exec = execute(c, t.dev, t.shots, derive_seed(t.seed, 0));
    const Estimate f = roundtrip_fidelity(exec.outcomes, t.spec.input);
    BenchmarkResult row = base_row(t, "qft", "roundtrip_fidelity");
    row.value = f.value;
    row.err = f.err;
    row.extras["F_ideal"] = 1.0;
    row.extras["input"] = t.spec.input;
    row.extras["threshold"] = t.spec.threshold;
    add_compile_extras(row, exec);
    return {row};
}

std::vector<BenchmarkResult> run_qaoa(const TaskContext& t) {
    const Graph& g = *t.graph;
    const QaoaOptimization& opt = *t.qaoa_opt;
    const Execution exec = execute(make_qaoa_circuit(g, opt.best), t.dev, t.shots, derive_seed(t.seed, 0));
    const QaoaMetrics m = qaoa_metrics(exec.outcomes, g, t.spec.penalty);
    BenchmarkResult row = base_row(t, "qaoa", "approx_ratio");
    row.n = g.n_vertices;
    row.value = m.approx_ratio.value;
    row.err = m.approx_ratio.err;
    row.extras["graph"] = t.spec.graph.label();
    row.extras["edges"] = static_cast<std::int64_t>(g.edges.size());
    row.extras["density"] = g.density();
    row.extras["penalty"] = t.spec.penalty;
    row.extras["gamma"] = opt.best.gamma;
    row.extras["beta"] = opt.best.beta;
    row.extras["optimizer_expectation"] = opt.best_expectation;
    row.extras["optimizer_evaluations"] = static_cast<std::int64_t>(opt.trace.size());
    row.extras["optimum"] = m.optimum;
    row.extras["mean_cost"] = m.mean_cost;
    row.extras["feasibility"] = m.feasibility.value;
    row.extras["feasibility_err"] = m.feasibility.err;
    row.extras["success"] = m.success.value;
    row.extras["success_err"] = m.success.err;
    row.extras["mean_hamming"] = m.mean_hamming.value;
    row.extras["mean_hamming_err"] = m.mean_hamming.err;
    add_compile_extras(row, exec);
    return {row};
}

std::vector<BenchmarkResult> run_task(const TaskContext& t) {
    switch (t.spec.kind) {
        case BenchmarkKind::Bell: return run_bell(t);
        case BenchmarkKind::Ghz: return run_ghz(t);
        case BenchmarkKind::Qft: return run_qft(t);
        case BenchmarkKind::Grover: {
            auto rows = grover_scan(t.spec.n, t.spec.marked, t.dev, t.shots, t.seed);
            // grover_scan does not report swaps; take them from the central circuit.
            const Circuit central = make_grover({t.spec.n, t.spec.marked, grover_optimal_k(t.spec.n)});
            const auto swaps = static_cast<std::int64_t>(compile_for_device(central, t.dev).overhead.added_swaps);
            for (auto& r : rows) r.extras["added_swaps"] = swaps;
            return rows;
        }
        case BenchmarkKind::Qaoa: return run_qaoa(t);
    }
    return {};
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size() / 2;
    return v.size() % 2 == 1 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

double spread(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Median over replicates; errors become the sample standard deviation of
// the matching values across seeds.
BenchmarkResult aggregate(const std::vector<BenchmarkResult>& reps, std::uint64_t seed) {
    BenchmarkResult out = reps.front();
    out.seed = seed;
    std::vector<double> values;
    for (const auto& r : reps) values.push_back(r.value);
    out.value = median(values);
    out.err = spread(values);
    for (auto& [key, v] : out.extras) {
        if (!std::holds_alternative<double>(v) || ends_with(key, "_err")) continue;
        std::vector<double> xs;
        for (const auto& r : reps) xs.push_back(std::get<double>(r.extras.at(key)));
        v = median(xs);
        auto err_it = out.extras.find(key + "_err");
        if (err_it != out.extras.end()) err_it->second = spread(xs);
    }
    out.extras[kReplicateKey] = std::string("median");
    return out;
}

// Sort key: per-seed rows after their aggregate, in seed order.
std::int64_t replicate_order(const BenchmarkResult& r) {
    auto it = r.extras.find(kReplicateKey);
    if (it == r.extras.end()) return -2;
    if (const auto* i = std::get_if<std::int64_t>(&it->second)) return *i;
    return -1;
}

bool row_less(const BenchmarkResult& a, const BenchmarkResult& b) {
    if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
    if (a.device != b.device) return a.device < b.device;
    if (a.n != b.n) return a.n < b.n;
    const double ka = extra_number(a, "k").value_or(-1.0);
    const double kb = extra_number(b, "k").value_or(-1.0);
    if (ka != kb) return ka < kb;
    const std::string ga = extra_string(a, "graph"), gb = extra_string(b, "graph");
    if (ga != gb) return ga < gb;
    return replicate_order(a) < replicate_order(b);
}

std::string timestamp_from_env() {
    const char* env = std::getenv("SOURCE_DATE_EPOCH");
    if (env == nullptr) return {};
    const auto secs = detail::parse_uint(detail::trim(env));
    if (!secs) return {};
    const std::time_t t = static_cast<std::time_t>(*secs);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ordered_json row_to_json(const BenchmarkResult& r) {
    ordered_json extras = ordered_json::object();
    for (const auto& [key, v] : r.extras) {
        std::visit([&](const auto& x) { extras[key] = x; }, v);
    }
    return ordered_json{{"type", "result"},   {"algorithm", r.algorithm}, {"device", r.device},
                        {"n", r.n},           {"metric", r.metric},       {"value", r.value},
                        {"err", r.err},       {"shots", r.shots},         {"seed", r.seed},
                        {"extras", extras}};
}

BenchmarkResult row_from_json(const json& j, std::size_t line) {
    const std::string where = "archive line " + std::to_string(line);
    try {
        BenchmarkResult r;
        r.algorithm = j.at("algorithm").get<std::string>();
        r.device = j.at("device").get<std::string>();
        r.n = j.at("n").get<std::size_t>();
        r.metric = j.at("metric").get<std::string>();
        r.value = j.at("value").get<double>();
        r.err = j.at("err").get<double>();
        r.shots = j.at("shots").get<std::uint64_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& [key, v] : j.at("extras").items()) {
            if (v.is_number_float()) {
                r.extras[key] = v.get<double>();
            } else if (v.is_number_integer()) {
                r.extras[key] = v.get<std::int64_t>();
            } else if (v.is_string()) {
                r.extras[key] = v.get<std::string>();
            } else {
                throw Error(ErrorKind::Parse, where + ": extra \"" + key + "\" has an unsupported type");
            }
        }
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, where + ": " + e.what());
    }
}

std::vector<BenchmarkResult> summary_rows(const ResultsArchive& archive, std::string_view algorithm) {
    std::vector<BenchmarkResult> rows;
    for (const auto& r : archive.rows) {
        if (r.algorithm == algorithm && is_summary_row(r)) rows.push_back(r);
    }
    if (rows.empty()) {
        throw Error(ErrorKind::NoMatchingRows, "archive has no " + std::string(algorithm) + " rows");
    }
    std::stable_sort(rows.begin(), rows.end(), row_less);
    return rows;
}

std::string fixed(double v, int digits) { return detail::format_fixed(v, digits); }

std::string algorithm_for(std::string_view id) {
    if (id == "chsh" || id == "chsh_bars") return "chsh";
    if (id == "ghz" || id == "ghz_vs_n") return "ghz";
    if (id == "qft" || id == "qft_fid_vs_n" || id == "qft_depth_bars") return "qft";
    if (id == "grover" || id == "grover_vs_k" || id == "grover_peak_vs_n") return "grover";
    if (id == "qaoa" || id == "qaoa_ar_bars" || id == "qaoa_feas_vs_density" || id == "qaoa_hamming_vs_ar") {
        return "qaoa";
    }
    return {};
}

std::string sanitize(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                        c == '_' || c == '.';
        if (!ok) c = '_';
    }
    return out;
}

}  // namespace

std::string BenchmarkSpec::label() const {
    switch (kind) {
        case BenchmarkKind::Bell: return "bell";
        case BenchmarkKind::Ghz: return "ghz" + std::to_string(n);
        case BenchmarkKind::Qft: return "qft" + std::to_string(n);
        case BenchmarkKind::Grover: return "grover" + std::to_string(n);
        case BenchmarkKind::Qaoa: return "qaoa_" + graph.label();
    }
    return "benchmark";
}

RunConfig RunConfig::from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        config_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) config_error("config must be a JSON object");
    reject_unknown(j, {"benchmarks", "devices", "shots", "seed", "output_dir", "noisy_seeds"}, "config");

    RunConfig cfg;
    const json& benches = require(j, "benchmarks", "config");
    if (!benches.is_array() || benches.empty()) config_error("config.benchmarks must be a non-empty array");
    for (std::size_t i = 0; i < benches.size(); ++i) {
        cfg.benchmarks.push_back(parse_benchmark(benches[i], "benchmarks[" + std::to_string(i) + "]"));
    }
    const json& devices = require(j, "devices", "config");
    if (!devices.is_array() || devices.empty()) config_error("config.devices must be a non-empty array");
    for (std::size_t i = 0; i < devices.size(); ++i) {
        cfg.devices.push_back(get_string(devices[i], "devices[" + std::to_string(i) + "]"));
    }
    if (j.contains("shots")) cfg.shots = get_uint(j["shots"], "config.shots");
    if (cfg.shots == 0) config_error("config.shots must be positive");
    if (j.contains("seed")) cfg.seed = get_uint(j["seed"], "config.seed");
    if (j.contains("output_dir")) cfg.output_dir = get_string(j["output_dir"], "config.output_dir");
    if (j.contains("noisy_seeds")) cfg.noisy_seeds = get_uint(j["noisy_seeds"], "config.noisy_seeds");
    if (cfg.noisy_seeds == 0) config_error("config.noisy_seeds must be positive");
    return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

std::string RunConfig::to_json() const {
    json j;
    j["benchmarks"] = json::array();
    for (const auto& b : benchmarks) j["benchmarks"].push_back(benchmark_to_json(b));
    j["devices"] = devices;
    j["shots"] = shots;
    j["seed"] = seed;
    j["output_dir"] = output_dir;
    j["noisy_seeds"] = noisy_seeds;
    return j.dump();
}

std::string RunConfig::hash() const {
    const std::uint64_t h = fnv1a64(to_json());
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i) out[15 - i] = kHex[(h >> (4 * i)) & 0xF];
    return out;
}

const char* tool_version() noexcept { return QUBENCH_VERSION; }

std::uint64_t task_seed(std::uint64_t seed, std::size_t benchmark_index, std::string_view device,
                        std::size_t replicate) {
    const std::string key =
        std::to_string(benchmark_index) + "|" + std::string(device) + "|" + std::to_string(replicate);
    return derive_seed(seed, fnv1a64(key));
}

ResultsArchive run_experiments(const RunConfig& input) {
    // Specs built in code may leave the bit-string fields empty.
    RunConfig cfg = input;
    for (BenchmarkSpec& b : cfg.benchmarks) {
        if (b.kind == BenchmarkKind::Qft) {
            if (b.input.empty()) b.input = default_roundtrip_input(b.n);
            if (b.input.size() != b.n) config_error(b.label() + ": input must be n bits");
        } else if (b.kind == BenchmarkKind::Grover) {
            if (b.marked.empty()) b.marked = std::string(b.n, '1');
            if (b.marked.size() != b.n) config_error(b.label() + ": marked must be n bits");
        }
    }
    if (cfg.benchmarks.empty() || cfg.devices.empty()) config_error("config needs benchmarks and devices");
    if (cfg.shots == 0) config_error("shots must be positive");

    std::vector<DeviceModel> devices;
    for (const auto& name : cfg.devices) {
        try {
            devices.push_back(resolve_device(name));
        } catch (const Error& e) {
            throw Error(ErrorKind::Config, "device \"" + name + "\": " + e.what());
        }
    }

    ResultsArchive archive;
    archive.provenance.config_json = cfg.to_json();
    archive.provenance.config_hash = cfg.hash();
    archive.provenance.tool_version = tool_version();
    if (auto ts = timestamp_from_env(); !ts.empty()) archive.provenance.timestamp = ts;

    for (std::size_t bi = 0; bi < cfg.benchmarks.size(); ++bi) {
        const BenchmarkSpec& spec = cfg.benchmarks[bi];
        std::optional<Graph> graph;
        std::optional<QaoaOptimization> opt;
        for (const DeviceModel& dev : devices) {
            const std::string context = spec.label() + " on " + dev.name;
            try {
                if (spec.kind == BenchmarkKind::Qaoa && !opt) {
                    // Parameters come from the exact ideal objective and are
                    // shared by every device.
                    graph = make_graph(spec.graph);
                    opt = optimize_qaoa(*graph, spec.penalty, [&](const QaoaParams& p) {
                        return exact_qaoa_expectation(*graph, p);
                    });
                }
                const std::size_t reps = dev.noiseless() ? 1 : cfg.noisy_seeds;
                std::vector<std::vector<BenchmarkResult>> per_rep;
                for (std::size_t r = 0; r < reps; ++r) {
                    TaskContext t{spec, dev, cfg.shots, task_seed(cfg.seed, bi, dev.name, r),
                                  opt ? &*opt : nullptr, graph ? &*graph : nullptr};
                    auto rows = run_task(t);
                    if (reps > 1) {
                        for (auto& row : rows) row.extras[kReplicateKey] = static_cast<std::int64_t>(r);
                    }
                    per_rep.push_back(std::move(rows));
                }
                if (reps > 1) {
                    for (std::size_t i = 0; i < per_rep.front().size(); ++i) {
                        std::vector<BenchmarkResult> same;
                        for (const auto& rows : per_rep) same.push_back(rows[i]);
                        archive.rows.push_back(aggregate(same, task_seed(cfg.seed, bi, dev.name, reps)));
                    }
                }
                for (auto& rows : per_rep) {
                    for (auto& row : rows) archive.rows.push_back(std::move(row));
                }
            } catch (const Error& e) {
                throw Error(e.kind(), context + ": " + e.what());
            }
        }
    }
    std::stable_sort(archive.rows.begin(), archive.rows.end(), row_less);
    return archive;
}

std::string archive_to_jsonl(const ResultsArchive& archive) {
    ordered_json header{{"type", "provenance"},
                        {"config_hash", archive.provenance.config_hash},
                        {"tool_version", archive.provenance.tool_version}};
    header["timestamp"] = archive.provenance.timestamp ? ordered_json(*archive.provenance.timestamp) : ordered_json();
    header["config"] = archive.provenance.config_json.empty() ? ordered_json::object()
                                                              : ordered_json::parse(archive.provenance.config_json);
    std::string out = header.dump() + "\n";
    for (const auto& row : archive.rows) out += row_to_json(row).dump() + "\n";
    return out;
}

ResultsArchive archive_from_jsonl(std::string_view text) {
    ResultsArchive archive;
    bool have_header = false;
    std::size_t line_no = 0;
    for (auto line : detail::split_lines(text)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw Error(ErrorKind::Parse, "archive line " + std::to_string(line_no) + ": " + e.what());
        }
        const std::string type = j.is_object() && j.contains("type") && j["type"].is_string()
                                     ? j["type"].get<std::string>()
                                     : std::string();
        if (type == "provenance") {
            if (have_header) throw Error(ErrorKind::Parse, "archive has two provenance lines");
            have_header = true;
            try {
                archive.provenance.config_hash = j.at("config_hash").get<std::string>();
                archive.provenance.tool_version = j.at("tool_version").get<std::string>();
                if (j.contains("timestamp") && j["timestamp"].is_string()) {
                    archive.provenance.timestamp = j["timestamp"].get<std::string>();
                }
                if (j.contains("config")) archive.provenance.config_json = j["config"].dump();
            } catch (const json::exception& e) {
                throw Error(ErrorKind::Parse, std::string("archive provenance: ") + e.what());
            }
        } else if (type == "result") {
            archive.rows.push_back(row_from_json(j, line_no));
        } else {
            throw Error(ErrorKind::Parse, "archive line " + std::to_string(line_no) + ": unknown record type");
        }
    }
    if (!have_header) throw Error(ErrorKind::Parse, "archive has no provenance line");
    return archive;
}

void write_archive(const ResultsArchive& archive, const std::filesystem::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << archive_to_jsonl(archive);
    if (!out) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

ResultsArchive read_archive(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read archive " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return archive_from_jsonl(ss.str());
}

bool is_summary_row(const BenchmarkResult& row) { return replicate_order(row) < 0; }

std::string render_table(const ResultsArchive& archive, std::string_view table_id) {
    if (std::find(kTableIds.begin(), kTableIds.end(), table_id) == kTableIds.end()) {
        throw Error(ErrorKind::InvalidArgument, "unknown table id \"" + std::string(table_id) + "\"");
    }
    const auto rows = summary_rows(archive, algorithm_for(table_id));
    std::string out;
    auto shots_cell = [](std::uint64_t shots) { return shots == 0 ? std::string("exact") : std::to_string(shots); };
    if (table_id == "chsh") {
        out = "device,S_exp,err,S_ideal,shots\n";
        for (const auto& r : rows) {
            out += r.device + "," + fixed(r.value, 3) + "," + fixed(r.err, 3) + "," +
                   fixed(need_number(r, "S_ideal"), 3) + "," + shots_cell(r.shots) + "\n";
        }
    } else if (table_id == "ghz") {
        out = "device,n,F_exp,err,F_ideal,shots\n";
        for (const auto& r : rows) {
            out += r.device + "," + std::to_string(r.n) + "," + fixed(r.value, 3) + "," + fixed(r.err, 3) + "," +
                   fixed(need_number(r, "F_ideal"), 3) + "," + shots_cell(r.shots) + "\n";
        }
    } else if (table_id == "qft") {
        out = "device,n,F_exp,err,depth,F_ideal\n";
        for (const auto& r : rows) {
            out += r.device + "," + std::to_string(r.n) + "," + fixed(r.value, 3) + "," + fixed(r.err, 3) + "," +
                   std::to_string(static_cast<std::int64_t>(need_number(r, "depth"))) + "," +
                   fixed(need_number(r, "F_ideal"), 3) + "\n";
        }
    } else if (table_id == "grover") {
        out = "device,n,k,label,P_success,err\n";
        for (const auto& r : rows) {
            out += r.device + "," + std::to_string(r.n) + "," +
                   std::to_string(static_cast<std::int64_t>(need_number(r, "k"))) + "," + extra_string(r, "label") +
                   "," + fixed(r.value, 3) + "," + fixed(r.err, 3) + "\n";
        }
    } else {
        out = "device,graph,approx_ratio,err,feasibility_pct,success,mean_hamming\n";
        for (const auto& r : rows) {
            out += r.device + "," + extra_string(r, "graph") + "," + fixed(r.value, 3) + "," + fixed(r.err, 3) +
                   "," + fixed(100.0 * need_number(r, "feasibility"), 1) + "," +
                   fixed(need_number(r, "success"), 3) + "," + fixed(need_number(r, "mean_hamming"), 2) + "\n";
        }
    }
    return out;
}

std::vector<PlotSeries> plot_data(const ResultsArchive& archive, std::string_view figure_id) {
    if (std::find(kFigureIds.begin(), kFigureIds.end(), figure_id) == kFigureIds.end()) {
        throw Error(ErrorKind::InvalidArgument, "unknown figure id \"" + std::string(figure_id) + "\"");
    }
    const auto rows = summary_rows(archive, algorithm_for(figure_id));

    std::map<std::string, PlotSeries> series;
    auto add = [&](const std::string& name, PlotPoint p) {
        auto& s = series[name];
        s.name = name;
        s.points.push_back(std::move(p));
    };

    if (figure_id == "chsh_bars") {
        std::size_t x = 0;
        for (const auto& r : rows) {
            const auto pos = static_cast<double>(x++);
            add(r.device, {pos, r.value, r.err, r.device});
            add("classical_bound", {pos, kClassicalBound, 0.0, r.device});
        }
    } else if (figure_id == "ghz_vs_n" || figure_id == "qft_fid_vs_n") {
        for (const auto& r : rows) add(r.device, {static_cast<double>(r.n), r.value, r.err, {}});
    } else if (figure_id == "qft_depth_bars") {
        for (const auto& r : rows) add(r.device, {static_cast<double>(r.n), need_number(r, "depth"), 0.0, {}});
    } else if (figure_id == "grover_vs_k") {
        for (const auto& r : rows) {
            add(r.device + "_n" + std::to_string(r.n), {need_number(r, "k"), r.value, r.err, extra_string(r, "label")});
        }
    } else if (figure_id == "grover_peak_vs_n") {
        for (const auto& r : rows) {
            if (extra_string(r, "label") == "k") add(r.device, {static_cast<double>(r.n), r.value, r.err, {}});
        }
    } else if (figure_id == "qaoa_ar_bars") {
        std::set<std::string> graphs;
        for (const auto& r : rows) graphs.insert(extra_string(r, "graph"));
        for (const auto& r : rows) {
            const std::string g = extra_string(r, "graph");
            const auto pos = static_cast<double>(std::distance(graphs.begin(), graphs.find(g)));
            add(r.device, {pos, r.value, r.err, g});
        }
    } else if (figure_id == "qaoa_feas_vs_density") {
        for (const auto& r : rows) {
            add(r.device, {need_number(r, "density"), 100.0 * need_number(r, "feasibility"),
                           100.0 * extra_number(r, "feasibility_err").value_or(0.0), extra_string(r, "graph")});
        }
    } else {
        for (const auto& r : rows) {
            add(r.device, {r.value, need_number(r, "mean_hamming"), extra_number(r, "mean_hamming_err").value_or(0.0),
                           extra_string(r, "graph")});
        }
    }

    std::vector<PlotSeries> out;
    for (auto& [_, s] : series) {
        if (!s.points.empty()) out.push_back(std::move(s));
    }
    if (out.empty()) throw Error(ErrorKind::NoMatchingRows, "no rows for figure " + std::string(figure_id));
    return out;
}

std::vector<std::filesystem::path> emit_plot_data(const ResultsArchive& archive, std::string_view figure_id,
                                                  const std::filesystem::path& out_dir) {
    const auto all = plot_data(archive, figure_id);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    std::vector<std::filesystem::path> written;
    for (const auto& s : all) {
        const auto path = out_dir / (std::string(figure_id) + "__" + sanitize(s.name) + ".dat");
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
        out << "# " << figure_id << " " << s.name << "\n# x y err\n";
        for (const auto& p : s.points) {
            if (!p.tag.empty()) out << "# x=" << detail::format_double(p.x) << " " << p.tag << "\n";
        }
        for (const auto& p : s.points) {
            out << detail::format_double(p.x) << " " << detail::format_double(p.y) << " "
                << detail::format_double(p.err) << "\n";
        }
        if (!out) throw Error(ErrorKind::Io, "failed writing " + path.string());
        written.push_back(path);
    }
    return written;
}

}  // namespace qubench
