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

// qubench command-line front end. Talks to the library only through the C
// interface.

#include "qubench/qubench.h"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitExecution = 3;

struct StringDeleter {
    void operator()(char* s) const { qb_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct Deleter {
    void operator()(qb_circuit* p) const { qb_circuit_free(p); }
    void operator()(qb_device* p) const { qb_device_free(p); }
    void operator()(qb_config* p) const { qb_config_free(p); }
    void operator()(qb_archive* p) const { qb_archive_free(p); }
};
template <typename T>
using Handle = std::unique_ptr<T, Deleter>;

// Bad inputs map to 2, everything that fails while running maps to 3.
int exit_code_for(qb_status s) {
    switch (s) {
        case QB_OK: return 0;
        case QB_ERR_CONFIG:
        case QB_ERR_PARSE:
        case QB_ERR_UNKNOWN_PRESET:
        case QB_ERR_INVALID_ARGUMENT: return kExitConfig;
        default: return kExitExecution;
    }
}

struct Failure {
    int code;
};

void check(qb_status s, const std::string& what) {
    if (s == QB_OK) return;
    std::cerr << "qubench: " << what << ": " << qb_last_error() << " (" << qb_status_name(s) << ")\n";
    throw Failure{exit_code_for(s)};
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first != std::string::npos) out.push_back(item.substr(first, last - first + 1));
    }
    return out;
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed, std::optional<std::uint64_t> shots,
            const std::optional<std::string>& out_dir) {
    qb_config* raw_cfg = nullptr;
    check(qb_config_load(config_path.c_str(), &raw_cfg), "loading " + config_path);
    Handle<qb_config> cfg(raw_cfg);
    if (seed) check(qb_config_set_seed(cfg.get(), *seed), "--seed");
    if (shots) check(qb_config_set_shots(cfg.get(), *shots), "--shots");
    if (out_dir) check(qb_config_set_output_dir(cfg.get(), out_dir->c_str()), "--out");

    qb_archive* raw_archive = nullptr;
    check(qb_run(cfg.get(), &raw_archive), "run");
    Handle<qb_archive> archive(raw_archive);

    char* dir_raw = nullptr;
    check(qb_config_output_dir(cfg.get(), &dir_raw), "output directory");
    OwnedString dir(dir_raw);
    std::string path = dir.get();
    if (!path.empty() && path.back() != '/') path += '/';
    path += "results.jsonl";
    check(qb_archive_write(archive.get(), path.c_str()), "writing " + path);

    std::size_t rows = 0;
    check(qb_archive_row_count(archive.get(), &rows), "row count");
    std::cout << "wrote " << rows << " rows to " << path << "\n";
    return 0;
}

Handle<qb_archive> load_archive(const std::string& path) {
    qb_archive* raw = nullptr;
    check(qb_archive_load(path.c_str(), &raw), "loading " + path);
    return Handle<qb_archive>(raw);
}

int cmd_table(const std::string& archive_path, const std::string& id) {
    auto archive = load_archive(archive_path);
    char* raw = nullptr;
    check(qb_render_table(archive.get(), id.c_str(), &raw), "table " + id);
    OwnedString csv(raw);
    std::cout << csv.get();
    return 0;
}

int cmd_plot_data(const std::string& archive_path, const std::string& id, const std::string& out_dir) {
    auto archive = load_archive(archive_path);
    char* raw = nullptr;
    check(qb_emit_plot_data(archive.get(), id.c_str(), out_dir.c_str(), &raw), "plot-data " + id);
    OwnedString paths(raw);
    std::cout << paths.get();
    return 0;
}

int cmd_route_report(const std::string& circuit_path, const std::string& device_list) {
    qb_circuit* raw_circuit = nullptr;
    check(qb_circuit_load(circuit_path.c_str(), &raw_circuit), "loading " + circuit_path);
    Handle<qb_circuit> circuit(raw_circuit);

    std::vector<Handle<qb_device>> devices;
    std::vector<const qb_device*> views;
    const auto names = split_list(device_list);
    if (names.empty()) {
        std::cerr << "qubench: --devices needs at least one device\n";
        return kExitConfig;
    }
    for (const auto& name : names) {
        qb_device* raw = nullptr;
        check(qb_device_resolve(name.c_str(), &raw), "device " + name);
        devices.emplace_back(raw);
        views.push_back(raw);
    }
    char* raw_csv = nullptr;
    check(qb_route_report_csv(circuit.get(), views.data(), views.size(), &raw_csv), "route-report");
    OwnedString csv(raw_csv);
    std::cout << csv.get();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cross-platform quantum benchmark harness"};
    app.set_version_flag("--version", std::string(qb_version()));
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::optional<std::string> run_out;
    auto* run = app.add_subcommand("run", "Run the experiments of a config file");
    run->add_option("--config", config_path, "Run configuration (JSON)")->required()->check(CLI::ExistingFile);
    run->add_option("--seed", seed, "Override the global seed");
    run->add_option("--shots", shots, "Override the shot count");
    run->add_option("--out", run_out, "Override the output directory");

    std::string archive_path;
    std::string table_id;
    auto* table = app.add_subcommand("table", "Render a results table as CSV");
    table->add_option("archive", archive_path, "results.jsonl")->required();
    table->add_option("--id", table_id, "chsh, ghz, qft, grover or qaoa")->required();

    std::string figure_id;
    std::string plot_out = ".";
    auto* plot = app.add_subcommand("plot-data", "Write plot series files for a figure");
    plot->add_option("archive", archive_path, "results.jsonl")->required();
    plot->add_option("--id", figure_id, "Figure id")->required();
    plot->add_option("--out", plot_out, "Output directory")->capture_default_str();

    std::string circuit_path;
    std::string device_list;
    auto* report = app.add_subcommand("route-report", "Routing overhead of a circuit per device");
    report->add_option("--circuit", circuit_path, "Circuit text file")->required();
    report->add_option("--devices", device_list, "Comma-separated presets or device files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (run->parsed()) return cmd_run(config_path, seed, shots, run_out);
        if (table->parsed()) return cmd_table(archive_path, table_id);
        if (plot->parsed()) return cmd_plot_data(archive_path, figure_id, plot_out);
        if (report->parsed()) return cmd_route_report(circuit_path, device_list);
    } catch (const Failure& f) {
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "qubench: " << e.what() << "\n";
        return kExitExecution;
    }
    return kExitConfig;
}
