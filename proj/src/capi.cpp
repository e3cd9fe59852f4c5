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

#include "qubench/qubench.h"

#include "qubench/circuit.hpp"
#include "qubench/device.hpp"
#include "qubench/error.hpp"
#include "qubench/execute.hpp"
#include "qubench/harness.hpp"
#include "qubench/router.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

struct qb_circuit {
    qubench::Circuit value;
};
struct qb_device {
    qubench::DeviceModel value;
};
struct qb_config {
    qubench::RunConfig value;
};
struct qb_archive {
    qubench::ResultsArchive value;
};

namespace {

thread_local std::string g_last_error;

qb_status status_for(qubench::ErrorKind kind) {
    using qubench::ErrorKind;
    switch (kind) {
        case ErrorKind::InvalidArgument: return QB_ERR_INVALID_ARGUMENT;
        case ErrorKind::WidthExceeded: return QB_ERR_WIDTH_EXCEEDED;
        case ErrorKind::LengthMismatch: return QB_ERR_LENGTH_MISMATCH;
        case ErrorKind::UnroutedCircuit: return QB_ERR_UNROUTED_CIRCUIT;
        case ErrorKind::UnknownPreset: return QB_ERR_UNKNOWN_PRESET;
        case ErrorKind::DisconnectedGraph: return QB_ERR_DISCONNECTED_GRAPH;
        case ErrorKind::EmptyCounts: return QB_ERR_EMPTY_COUNTS;
        case ErrorKind::MissingScanSettings: return QB_ERR_MISSING_SCAN_SETTINGS;
        case ErrorKind::UndefinedRatio: return QB_ERR_UNDEFINED_RATIO;
        case ErrorKind::Parse: return QB_ERR_PARSE;
        case ErrorKind::Config: return QB_ERR_CONFIG;
        case ErrorKind::NoMatchingRows: return QB_ERR_NO_MATCHING_ROWS;
        case ErrorKind::Io: return QB_ERR_IO;
    }
    return QB_ERR_INTERNAL;
}

qb_status fail(qb_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

template <typename F>
qb_status guarded(F&& body) {
    try {
        g_last_error.clear();
        body();
        return QB_OK;
    } catch (const qubench::Error& e) {
        return fail(status_for(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(QB_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(QB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QB_ERR_INTERNAL, "unknown exception");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

#define QB_REQUIRE(cond, what)                                                  \
    do {                                                                        \
        if (!(cond)) return fail(QB_ERR_INVALID_ARGUMENT, what " must not be null"); \
    } while (0)

std::string read_file(const char* path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qubench::Error(qubench::ErrorKind::Io, std::string("cannot read ") + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

extern "C" {

const char* qb_version(void) { return qubench::tool_version(); }

const char* qb_status_name(qb_status status) {
    switch (status) {
        case QB_OK: return "ok";
        case QB_ERR_INVALID_ARGUMENT: return "invalid argument";
        case QB_ERR_CONFIG: return "config error";
        case QB_ERR_PARSE: return "parse error";
        case QB_ERR_IO: return "i/o error";
        case QB_ERR_UNKNOWN_PRESET: return "unknown preset";
        case QB_ERR_WIDTH_EXCEEDED: return "width exceeded";
        case QB_ERR_LENGTH_MISMATCH: return "length mismatch";
        case QB_ERR_UNROUTED_CIRCUIT: return "unrouted circuit";
        case QB_ERR_DISCONNECTED_GRAPH: return "disconnected graph";
        case QB_ERR_EMPTY_COUNTS: return "empty counts";
        case QB_ERR_MISSING_SCAN_SETTINGS: return "missing scan settings";
        case QB_ERR_UNDEFINED_RATIO: return "undefined ratio";
        case QB_ERR_NO_MATCHING_ROWS: return "no matching rows";
        case QB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* qb_last_error(void) { return g_last_error.c_str(); }

void qb_string_free(char* s) { std::free(s); }

qb_status qb_circuit_parse(const char* text, qb_circuit** out) {
    QB_REQUIRE(text, "text");
    QB_REQUIRE(out, "out");
    *out = nullptr;
    return guarded([&] { *out = new qb_circuit{qubench::parse_circuit(text)}; });
}

qb_status qb_circuit_load(const char* path, qb_circuit** out) {
    QB_REQUIRE(path, "path");
    QB_REQUIRE(out, "out");
    *out = nullptr;
    return guarded([&] { *out = new qb_circuit{qubench::parse_circuit(read_file(path))}; });
}

void qb_circuit_free(qb_circuit* c) { delete c; }

qb_status qb_circuit_to_text(const qb_circuit* c, char** out) {
    QB_REQUIRE(c, "circuit");
    QB_REQUIRE(out, "out");
    return guarded([&] { *out = dup_string(qubench::to_text(c->value)); });
}

qb_status qb_circuit_info(const qb_circuit* c, size_t* n_qubits, size_t* depth, size_t* one_qubit,
                          size_t* two_qubit) {
    QB_REQUIRE(c, "circuit");
    return guarded([&] {
        const auto counts = qubench::gate_counts(c->value);
        if (n_qubits) *n_qubits = c->value.n_qubits();
        if (depth) *depth = qubench::depth(c->value);
        if (one_qubit) *one_qubit = counts.one_qubit;
        if (two_qubit) *two_qubit = counts.two_qubit;
    });
}

qb_status qb_device_resolve(const char* name_or_path, qb_device** out) {
    QB_REQUIRE(name_or_path, "name_or_path");
    QB_REQUIRE(out, "out");
    *out = nullptr;
    return guarded([&] { *out = new qb_device{qubench::resolve_device(name_or_path)}; });
}

void qb_device_free(qb_device* d) { delete d; }

qb_status qb_device_to_json(const qb_device* d, char** out) {
    QB_REQUIRE(d, "device");
    QB_REQUIRE(out, "out");
    return guarded([&] { *out = dup_string(qubench::device_to_json(d->value)); });
}

qb_status qb_execute_counts_json(const qb_circuit* c, const qb_device* d, uint64_t shots, uint64_t seed,
                                 char** out) {
    QB_REQUIRE(c, "circuit");
    QB_REQUIRE(d, "device");
    QB_REQUIRE(out, "out");
    if (shots == 0) return fail(QB_ERR_INVALID_ARGUMENT, "shots must be positive");
    return guarded([&] {
        const auto exec = qubench::execute(c->value, d->value, shots, seed);
        qubench::CountsTable counts(exec.outcomes.n_bits);
        for (const auto& [bits, p] : exec.outcomes.probs) {
            counts.add(bits, static_cast<std::uint64_t>(std::llround(p * static_cast<double>(shots))));
        }
        *out = dup_string(counts.to_json());
    });
}

qb_status qb_route_report_csv(const qb_circuit* c, const qb_device* const* devices, size_t n_devices,
                              char** out) {
    QB_REQUIRE(c, "circuit");
    QB_REQUIRE(out, "out");
    if (n_devices > 0 && devices == nullptr) return fail(QB_ERR_INVALID_ARGUMENT, "devices must not be null");
    return guarded([&] {
        std::vector<qubench::DeviceModel> devs;
        for (size_t i = 0; i < n_devices; ++i) {
            if (devices[i] == nullptr) throw qubench::Error(qubench::ErrorKind::InvalidArgument, "null device");
            devs.push_back(devices[i]->value);
        }
        *out = dup_string(qubench::routing_report_csv(qubench::routing_report(c->value, devs)));
    });
}

qb_status qb_config_parse(const char* json, qb_config** out) {
    QB_REQUIRE(json, "json");
    QB_REQUIRE(out, "out");
    *out = nullptr;
    return guarded([&] { *out = new qb_config{qubench::RunConfig::from_json(json)}; });
}

qb_status qb_config_load(const char* path, qb_config** out) {
    QB_REQUIRE(path, "path");
    QB_REQUIRE(out, "out");
    *out = nullptr;
    return guarded([&] { *out = new qb_config{qubench::RunConfig::load(path)}; });
}

void qb_config_free(qb_config* cfg) { delete cfg; }

qb_status qb_config_set_seed(qb_config* cfg, uint64_t seed) {
    QB_REQUIRE(cfg, "config");
    cfg->value.seed = seed;
    return QB_OK;
}

qb_status qb_config_set_shots(qb_config* cfg, uint64_t shots) {
    QB_REQUIRE(cfg, "config");
    if (shots == 0) return fail(QB_ERR_CONFIG, "shots must be positive");
    cfg->value.shots = shots;
    return QB_OK;
}

qb_status qb_config_set_output_dir(qb_config* cfg, const char* dir) {
    QB_REQUIRE(cfg, "config");
    QB_REQUIRE(dir, "dir");
    return guarded([&] { cfg->value.output_dir = dir; });
}

qb_status qb_config_output_dir(const qb_config* cfg, char** out) {
    QB_REQUIRE(cfg, "config");
    QB_REQUIRE(out, "out");
    return guarded([&] { *out = dup_string(cfg->value.output_dir); });
}

qb_status qb_config_to_json(const qb_config* cfg, char** out) {
    QB_REQUIRE(cfg, "config");
    QB_REQUIRE(out, "out");
    return guarded([&] { *out = dup_string(cfg->value.to_json()); });
}

qb_status qb_run(const qb_config* cfg, qb_archive** out) {
    QB_REQUIRE(cfg, "config");
    QB_REQUIRE(out, "out");
    *out = nullptr;
    return guarded([&] { *out = new qb_archive{qubench::run_experiments(cfg->value)}; });
}

qb_status qb_archive_load(const char* path, qb_archive** out) {
    QB_REQUIRE(path, "path");
    QB_REQUIRE(out, "out");
    *out = nullptr;
    return guarded([&] { *out = new qb_archive{qubench::read_archive(path)}; });
}

qb_status qb_archive_write(const qb_archive* a, const char* path) {
    QB_REQUIRE(a, "archive");
    QB_REQUIRE(path, "path");
    return guarded([&] { qubench::write_archive(a->value, path); });
}

void qb_archive_free(qb_archive* a) { delete a; }

qb_status qb_archive_row_count(const qb_archive* a, size_t* out) {
    QB_REQUIRE(a, "archive");
    QB_REQUIRE(out, "out");
    *out = a->value.rows.size();
    return QB_OK;
}

qb_status qb_archive_to_jsonl(const qb_archive* a, char** out) {
    QB_REQUIRE(a, "archive");
    QB_REQUIRE(out, "out");
    return guarded([&] { *out = dup_string(qubench::archive_to_jsonl(a->value)); });
}

qb_status qb_render_table(const qb_archive* a, const char* table_id, char** out_csv) {
    QB_REQUIRE(a, "archive");
    QB_REQUIRE(table_id, "table_id");
    QB_REQUIRE(out_csv, "out_csv");
    return guarded([&] { *out_csv = dup_string(qubench::render_table(a->value, table_id)); });
}

qb_status qb_emit_plot_data(const qb_archive* a, const char* figure_id, const char* out_dir, char** out_paths) {
    QB_REQUIRE(a, "archive");
    QB_REQUIRE(figure_id, "figure_id");
    QB_REQUIRE(out_dir, "out_dir");
    return guarded([&] {
        const auto paths = qubench::emit_plot_data(a->value, figure_id, out_dir);
        if (out_paths != nullptr) {
            std::string listing;
            for (const auto& p : paths) listing += p.string() + "\n";
            *out_paths = dup_string(listing);
        }
    });
}

}  // extern "C"
