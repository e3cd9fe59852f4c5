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

/* Exercises the shared library through its C interface only. */
#include "qubench/qubench.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                                        \
    do {                                                                   \
        if (!(cond)) {                                                     \
            fprintf(stderr, "%s:%d: CHECK(%s) failed; last error: %s\n",  \
                    __FILE__, __LINE__, #cond, qb_last_error());           \
            ++failures;                                                    \
        }                                                                  \
    } while (0)

static char* join(const char* dir, const char* name) {
    size_t len = strlen(dir) + strlen(name) + 2;
    char* out = malloc(len);
    snprintf(out, len, "%s/%s", dir, name);
    return out;
}

static void test_circuits(void) {
    qb_circuit* c = NULL;
    size_t n = 0, depth = 0, one = 0, two = 0;
    char* text = NULL;

    CHECK(qb_circuit_parse("qubits=3\nH 0\nCNOT 0,1\nCNOT 1,2\n", &c) == QB_OK);
    CHECK(qb_circuit_info(c, &n, &depth, &one, &two) == QB_OK);
    CHECK(n == 3 && depth == 3 && one == 1 && two == 2);
    CHECK(qb_circuit_to_text(c, &text) == QB_OK);
    CHECK(text != NULL && strncmp(text, "qubits=3\n", 9) == 0);
    qb_string_free(text);
    qb_circuit_free(c);

    c = NULL;
    CHECK(qb_circuit_parse("qubits=2\nH 0\nFROB 1\n", &c) == QB_ERR_PARSE);
    CHECK(c == NULL);
    CHECK(strstr(qb_last_error(), "line 3") != NULL);
    CHECK(qb_circuit_parse(NULL, &c) == QB_ERR_INVALID_ARGUMENT);
    CHECK(qb_circuit_load("/nonexistent/circuit.txt", &c) == QB_ERR_IO);
    CHECK(strcmp(qb_status_name(QB_ERR_PARSE), "parse error") == 0);
}

static void test_devices_and_routing(void) {
    qb_device* ideal = NULL;
    qb_device* grid = NULL;
    qb_device* bogus = NULL;
    qb_circuit* c = NULL;
    char* json = NULL;
    char* csv = NULL;

    CHECK(qb_device_resolve("IDEAL", &ideal) == QB_OK);
    CHECK(qb_device_resolve("SC_GRID20", &grid) == QB_OK);
    CHECK(qb_device_resolve("NO_SUCH_DEVICE", &bogus) == QB_ERR_UNKNOWN_PRESET);
    CHECK(bogus == NULL);
    CHECK(qb_device_to_json(grid, &json) == QB_OK);
    CHECK(json != NULL && strstr(json, "SC_GRID20") != NULL);
    qb_string_free(json);

    CHECK(qb_circuit_parse("qubits=2\nH 0\nCNOT 0,1\n", &c) == QB_OK);
    CHECK(qb_execute_counts_json(c, ideal, 200, 5, &json) == QB_OK);
    CHECK(json != NULL && strstr(json, "\"00\"") != NULL && strstr(json, "\"01\"") == NULL);
    qb_string_free(json);
    qb_circuit_free(c);

    CHECK(qb_circuit_parse("qubits=6\nH 0\nCNOT 0,1\nCNOT 0,2\nCNOT 0,3\nCNOT 0,4\nCNOT 0,5\n", &c) == QB_OK);
    {
        const qb_device* devices[2] = {ideal, grid};
        CHECK(qb_route_report_csv(c, devices, 2, &csv) == QB_OK);
    }
    CHECK(csv != NULL && strncmp(csv, "device,n,depth_before,depth_after,two_qubit_count,added_swaps\n", 62) == 0);
    CHECK(csv != NULL && strstr(csv, "\nIDEAL,6,") != NULL);
    qb_string_free(csv);
    qb_circuit_free(c);

    qb_device_free(ideal);
    qb_device_free(grid);
}

static void test_run_and_archive(const char* work) {
    qb_config* cfg = NULL;
    qb_archive* a = NULL;
    qb_archive* b = NULL;
    qb_archive* a_first = NULL;
    char* text_a = NULL;
    char* text_b = NULL;
    char* table = NULL;
    char* paths = NULL;
    char* out_dir = NULL;
    size_t rows = 0;
    char* archive_path = join(work, "results.jsonl");

    CHECK(qb_config_parse("{\"benchmarks\":[{\"type\":\"bell\"},{\"type\":\"ghz\",\"n\":4}],"
                          "\"devices\":[\"IDEAL\"]}", &cfg) == QB_OK);
    CHECK(qb_config_set_seed(cfg, 99) == QB_OK);
    CHECK(qb_config_set_shots(cfg, 500) == QB_OK);
    CHECK(qb_config_set_shots(cfg, 0) == QB_ERR_CONFIG);
    CHECK(qb_config_set_output_dir(cfg, work) == QB_OK);
    CHECK(qb_config_output_dir(cfg, &out_dir) == QB_OK);
    CHECK(out_dir != NULL && strcmp(out_dir, work) == 0);
    qb_string_free(out_dir);

    CHECK(qb_run(cfg, &a) == QB_OK);
    CHECK(qb_archive_row_count(a, &rows) == QB_OK);
    CHECK(rows == 2);
    CHECK(qb_archive_write(a, archive_path) == QB_OK);
    CHECK(qb_archive_load(archive_path, &b) == QB_OK);
    CHECK(qb_archive_to_jsonl(a, &text_a) == QB_OK);
    CHECK(qb_archive_to_jsonl(b, &text_b) == QB_OK);
    CHECK(text_a != NULL && text_b != NULL && strcmp(text_a, text_b) == 0);
    CHECK(text_a != NULL && strstr(text_a, "\"type\":\"provenance\"") != NULL);

    CHECK(qb_render_table(b, "chsh", &table) == QB_OK);
    CHECK(table != NULL && strncmp(table, "device,S_exp,err,S_ideal,shots\nIDEAL,", 37) == 0);
    qb_string_free(table);
    table = NULL;
    CHECK(qb_render_table(b, "qaoa", &table) == QB_ERR_NO_MATCHING_ROWS);
    CHECK(table == NULL);

    CHECK(qb_emit_plot_data(b, "ghz_vs_n", work, &paths) == QB_OK);
    CHECK(paths != NULL && strstr(paths, "ghz_vs_n__IDEAL.dat") != NULL);
    qb_string_free(paths);

    a_first = a;
    CHECK(qb_archive_load("/nonexistent/results.jsonl", &a) == QB_ERR_IO);

    qb_string_free(text_a);
    qb_string_free(text_b);
    qb_archive_free(a_first);
    qb_archive_free(b);
    qb_config_free(cfg);
    free(archive_path);
}

static void test_config_errors(void) {
    qb_config* cfg = NULL;
    CHECK(qb_config_parse("{\"benchmarks\":[],\"devices\":[\"IDEAL\"]}", &cfg) == QB_ERR_CONFIG);
    CHECK(cfg == NULL);
    CHECK(strlen(qb_last_error()) > 0);
    CHECK(qb_config_parse("{\"benchmarks\":[{\"type\":\"bell\"}],\"devices\":[\"IDEAL\"],\"extra\":true}", &cfg) ==
          QB_ERR_CONFIG);
    CHECK(qb_config_load("/nonexistent/config.json", &cfg) == QB_ERR_IO);
    CHECK(qb_config_set_seed(NULL, 1) == QB_ERR_INVALID_ARGUMENT);
}

int main(int argc, char** argv) {
    const char* work = argc > 1 ? argv[1] : ".";
    CHECK(strlen(qb_version()) > 0);
    test_circuits();
    test_devices_and_routing();
    test_run_and_archive(work);
    test_config_errors();
    if (failures != 0) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    printf("all C API checks passed\n");
    return 0;
}
