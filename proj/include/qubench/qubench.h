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

/* C interface to the qubench library. Every fallible call returns a
 * qb_status; on failure qb_last_error() describes what went wrong. Strings
 * returned through char** are owned by the caller and released with
 * qb_string_free. */
#ifndef QUBENCH_QUBENCH_H
#define QUBENCH_QUBENCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QB_API __declspec(dllexport)
#else
#define QB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qb_status {
    QB_OK = 0,
    QB_ERR_INVALID_ARGUMENT = 1,
    QB_ERR_CONFIG = 2,
    QB_ERR_PARSE = 3,
    QB_ERR_IO = 4,
    QB_ERR_UNKNOWN_PRESET = 5,
    QB_ERR_WIDTH_EXCEEDED = 6,
    QB_ERR_LENGTH_MISMATCH = 7,
    QB_ERR_UNROUTED_CIRCUIT = 8,
    QB_ERR_DISCONNECTED_GRAPH = 9,
    QB_ERR_EMPTY_COUNTS = 10,
    QB_ERR_MISSING_SCAN_SETTINGS = 11,
    QB_ERR_UNDEFINED_RATIO = 12,
    QB_ERR_NO_MATCHING_ROWS = 13,
    QB_ERR_INTERNAL = 99
} qb_status;

typedef struct qb_circuit qb_circuit;
typedef struct qb_device qb_device;
typedef struct qb_config qb_config;
typedef struct qb_archive qb_archive;

QB_API const char* qb_version(void);
QB_API const char* qb_status_name(qb_status status);
/* Message of the last failure on the calling thread ("" if none). */
QB_API const char* qb_last_error(void);
QB_API void qb_string_free(char* s);

/* Circuits, in the "qubits=N" text format. */
QB_API qb_status qb_circuit_parse(const char* text, qb_circuit** out);
QB_API qb_status qb_circuit_load(const char* path, qb_circuit** out);
QB_API void qb_circuit_free(qb_circuit* c);
QB_API qb_status qb_circuit_to_text(const qb_circuit* c, char** out);
QB_API qb_status qb_circuit_info(const qb_circuit* c, size_t* n_qubits, size_t* depth, size_t* one_qubit,
                                 size_t* two_qubit);

/* Devices: a preset name (IDEAL, ION_FC, SC_GRID20, SC_GRID84) or a JSON file. */
QB_API qb_status qb_device_resolve(const char* name_or_path, qb_device** out);
QB_API void qb_device_free(qb_device* d);
QB_API qb_status qb_device_to_json(const qb_device* d, char** out);

/* Compiles for the device and samples `shots` outcomes, keyed by logical
 * qubit: {"shots": n, "counts": {"0101": c, ...}}. */
QB_API qb_status qb_execute_counts_json(const qb_circuit* c, const qb_device* d, uint64_t shots, uint64_t seed,
                                        char** out);

/* "device,n,depth_before,depth_after,two_qubit_count,added_swaps" CSV. */
QB_API qb_status qb_route_report_csv(const qb_circuit* c, const qb_device* const* devices, size_t n_devices,
                                     char** out);

/* Run configuration (JSON). */
QB_API qb_status qb_config_parse(const char* json, qb_config** out);
QB_API qb_status qb_config_load(const char* path, qb_config** out);
QB_API void qb_config_free(qb_config* cfg);
QB_API qb_status qb_config_set_seed(qb_config* cfg, uint64_t seed);
QB_API qb_status qb_config_set_shots(qb_config* cfg, uint64_t shots);
QB_API qb_status qb_config_set_output_dir(qb_config* cfg, const char* dir);
QB_API qb_status qb_config_output_dir(const qb_config* cfg, char** out);
QB_API qb_status qb_config_to_json(const qb_config* cfg, char** out);

/* Experiments and result archives (JSON lines). */
QB_API qb_status qb_run(const qb_config* cfg, qb_archive** out);
QB_API qb_status qb_archive_load(const char* path, qb_archive** out);
QB_API qb_status qb_archive_write(const qb_archive* a, const char* path);
QB_API void qb_archive_free(qb_archive* a);
QB_API qb_status qb_archive_row_count(const qb_archive* a, size_t* out);
QB_API qb_status qb_archive_to_jsonl(const qb_archive* a, char** out);
/* table_id: chsh, ghz, qft, grover, qaoa. */
QB_API qb_status qb_render_table(const qb_archive* a, const char* table_id, char** out_csv);
/* Writes the series files of one figure; *out_paths lists them, one per line. */
QB_API qb_status qb_emit_plot_data(const qb_archive* a, const char* figure_id, const char* out_dir,
                                   char** out_paths);

#ifdef __cplusplus
}
#endif

#endif /* QUBENCH_QUBENCH_H */
