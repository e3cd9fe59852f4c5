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

#include "qubench/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace qubench;

namespace {

RunConfig config(const std::string& benchmarks, const std::string& devices, const std::string& extra = "") {
    return RunConfig::from_json(R"({"benchmarks":[)" + benchmarks + R"(],"devices":[)" + devices + "]" + extra + "}");
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no exception";
    return ErrorKind::Io;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("qubench_harness_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(RunConfig, DefaultsAndCanonicalForm) {
    const RunConfig cfg = config(R"({"type":"bell"},{"type":"qft","n":4})", R"("IDEAL")");
    EXPECT_EQ(cfg.shots, 100U);
    EXPECT_EQ(cfg.noisy_seeds, 10U);
    EXPECT_EQ(cfg.benchmarks[1].input, "1010");
    EXPECT_EQ(cfg.benchmarks[1].label(), "qft4");
    const RunConfig again = RunConfig::from_json(cfg.to_json());
    EXPECT_EQ(again.to_json(), cfg.to_json());
    EXPECT_EQ(cfg.hash().size(), 16U);
    EXPECT_EQ(again.hash(), cfg.hash());
    RunConfig other = cfg;
    other.seed = 1;
    EXPECT_NE(other.hash(), cfg.hash());
}

TEST(RunConfig, RejectsInvalidInput) {
    EXPECT_EQ(kind_of([] { RunConfig::from_json("{"); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { config(R"({"type":"bell"})", R"("IDEAL")", R"(,"shots":0)"); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { config(R"({"type":"bell"})", R"("IDEAL")", R"(,"colour":1)"); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { config(R"({"type":"teleport"})", R"("IDEAL")"); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { config(R"({"type":"ghz","n":1})", R"("IDEAL")"); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { config(R"({"type":"ghz","n":21})", R"("IDEAL")"); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { config(R"({"type":"grover","n":4,"marked":"012"})", R"("IDEAL")"); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { config(R"({"type":"qaoa","graph":{"kind":"path","n":4},"penalty":1})", R"("IDEAL")"); }),
              ErrorKind::Config);
    EXPECT_EQ(kind_of([] { config(R"({"type":"qaoa","graph":{"kind":"star","n":4}})", R"("IDEAL")"); }),
              ErrorKind::Config);
    EXPECT_EQ(kind_of([] { config("", R"("IDEAL")"); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { config(R"({"type":"bell"})", ""); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { config(R"({"type":"bell"})", R"("IDEAL")", R"(,"seed":-3)"); }), ErrorKind::Config);
    EXPECT_EQ(kind_of([] { run_experiments(config(R"({"type":"bell"})", R"("NOPE")")); }), ErrorKind::Config);
}

TEST(Run, BellOnIdeal) {
    const ResultsArchive a = run_experiments(config(R"({"type":"bell"})", R"("IDEAL")", R"(,"seed":7)"));
    ASSERT_EQ(a.rows.size(), 1U);
    const auto& row = a.rows[0];
    EXPECT_EQ(row.algorithm, "chsh");
    EXPECT_EQ(row.shots, 100U);
    EXPECT_LE(std::abs(row.value - 2.0 * std::sqrt(2.0)), 3 * row.err);
}

TEST(Run, GhzOnIdealIsExact) {
    const ResultsArchive a = run_experiments(config(R"({"type":"ghz","n":6},{"type":"ghz","n":10})", R"("IDEAL")"));
    ASSERT_EQ(a.rows.size(), 2U);
    for (const auto& row : a.rows) {
        EXPECT_NEAR(row.value, 1.0, 1e-9);
        EXPECT_EQ(row.err, 0.0);
    }
    const std::string table = render_table(a, "ghz");
    EXPECT_EQ(table, "device,n,F_exp,err,F_ideal,shots\nIDEAL,6,1.000,0.000,1.000,exact\nIDEAL,10,1.000,0.000,1.000,exact\n");
    const auto series = plot_data(a, "ghz_vs_n");
    ASSERT_EQ(series.size(), 1U);
    ASSERT_EQ(series[0].points.size(), 2U);
    EXPECT_EQ(series[0].points[0].x, 6.0);
    EXPECT_NEAR(series[0].points[1].y, 1.0, 1e-9);
    EXPECT_EQ(series[0].points[1].err, 0.0);
}

TEST(Run, GroverOnThreeDevices) {
    const auto cfg = config(R"({"type":"grover","n":6})", R"("IDEAL","ION_FC","SC_GRID20")", R"(,"noisy_seeds":1)");
    const ResultsArchive a = run_experiments(cfg);
    EXPECT_EQ(a.rows.size(), 9U);
    const std::string table = render_table(a, "grover");
    EXPECT_EQ(count_lines(table), 10U);
    EXPECT_NE(table.find("IDEAL,6,6,k,"), std::string::npos);
    EXPECT_NE(table.find("SC_GRID20,6,7,k+1,"), std::string::npos);
}

TEST(Run, NoisySeedsAddMedianRows) {
    const auto cfg = config(R"({"type":"ghz","n":3})", R"("IDEAL","ION_FC")", R"(,"noisy_seeds":4,"shots":50)");
    const ResultsArchive a = run_experiments(cfg);
    ASSERT_EQ(a.rows.size(), 1U + 4U + 1U);
    std::size_t summaries = 0;
    for (const auto& r : a.rows) summaries += is_summary_row(r);
    EXPECT_EQ(summaries, 2U);
    std::vector<double> values;
    double median = -1;
    for (const auto& r : a.rows) {
        if (r.device != "ION_FC") continue;
        if (is_summary_row(r)) median = r.value;
        else values.push_back(r.value);
    }
    std::sort(values.begin(), values.end());
    EXPECT_DOUBLE_EQ(median, 0.5 * (values[1] + values[2]));
    EXPECT_EQ(count_lines(render_table(a, "ghz")), 3U);
}

TEST(Run, Deterministic) {
    const auto cfg = config(R"({"type":"bell"},{"type":"qft","n":4},{"type":"qaoa","graph":{"kind":"path","n":6}})",
                            R"("IDEAL","SC_GRID20")", R"(,"noisy_seeds":2,"seed":11)");
    EXPECT_EQ(archive_to_jsonl(run_experiments(cfg)), archive_to_jsonl(run_experiments(cfg)));
    RunConfig other = cfg;
    other.seed = 12;
    EXPECT_NE(archive_to_jsonl(run_experiments(other)), archive_to_jsonl(run_experiments(cfg)));
}

TEST(Run, ErrorsCarryContext) {
    const auto dir = scratch("context");
    const auto device = dir / "tiny.json";
    std::ofstream(device) << R"({"name":"TINY","n_qubits":3,"coupling":"all_to_all"})";
    try {
        run_experiments(config(R"({"type":"ghz","n":6})", "\"" + device.string() + "\""));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WidthExceeded);
        EXPECT_EQ(std::string(e.what()).rfind("ghz6 on TINY: ", 0), 0U) << e.what();
    }
}

TEST(Archive, RoundTripAndProvenance) {
    const auto cfg = config(R"({"type":"grover","n":3},{"type":"qaoa","graph":{"kind":"complete_bipartite","a":2,"b":3}})",
                            R"("IDEAL")");
    const ResultsArchive a = run_experiments(cfg);
    EXPECT_EQ(a.provenance.config_hash, cfg.hash());
    EXPECT_EQ(a.provenance.tool_version, tool_version());
    const std::string text = archive_to_jsonl(a);
    const ResultsArchive b = archive_from_jsonl(text);
    EXPECT_EQ(b.rows, a.rows);
    EXPECT_EQ(b.provenance.config_hash, a.provenance.config_hash);
    EXPECT_EQ(archive_to_jsonl(b), text);

    const auto dir = scratch("archive");
    write_archive(a, dir / "sub" / "results.jsonl");
    EXPECT_EQ(read_archive(dir / "sub" / "results.jsonl").rows, a.rows);

    EXPECT_EQ(kind_of([] { archive_from_jsonl("{\"type\":\"result\"}\n"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { archive_from_jsonl("not json\n"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { archive_from_jsonl(""); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([&] { read_archive(dir / "missing.jsonl"); }), ErrorKind::Io);
}

TEST(Archive, TimestampFromSourceDateEpoch) {
    const auto cfg = config(R"({"type":"bell"})", R"("IDEAL")");
    ::setenv("SOURCE_DATE_EPOCH", "86400", 1);
    const ResultsArchive a = run_experiments(cfg);
    ::unsetenv("SOURCE_DATE_EPOCH");
    ASSERT_TRUE(a.provenance.timestamp.has_value());
    EXPECT_EQ(*a.provenance.timestamp, "1970-01-02T00:00:00Z");
    EXPECT_FALSE(run_experiments(cfg).provenance.timestamp.has_value());
}

TEST(Tables, SchemasAndErrors) {
    const auto cfg = config(R"({"type":"bell"},{"type":"ghz","n":3},{"type":"qft","n":3},{"type":"grover","n":3},)"
                            R"({"type":"qaoa","graph":{"kind":"path","n":10}})",
                            R"("IDEAL")");
    const ResultsArchive a = run_experiments(cfg);
    auto header = [&](std::string_view id) {
        const std::string t = render_table(a, id);
        return t.substr(0, t.find('\n'));
    };
    EXPECT_EQ(header("chsh"), "device,S_exp,err,S_ideal,shots");
    EXPECT_EQ(header("ghz"), "device,n,F_exp,err,F_ideal,shots");
    EXPECT_EQ(header("qft"), "device,n,F_exp,err,depth,F_ideal");
    EXPECT_EQ(header("grover"), "device,n,k,label,P_success,err");
    EXPECT_EQ(header("qaoa"), "device,graph,approx_ratio,err,feasibility_pct,success,mean_hamming");
    EXPECT_NE(render_table(a, "qaoa").find("IDEAL,path10,"), std::string::npos);

    const ResultsArchive bell_only = run_experiments(config(R"({"type":"bell"})", R"("IDEAL")"));
    EXPECT_EQ(kind_of([&] { render_table(bell_only, "qaoa"); }), ErrorKind::NoMatchingRows);
    EXPECT_EQ(kind_of([&] { render_table(bell_only, "tomography"); }), ErrorKind::InvalidArgument);
}

TEST(PlotData, FiguresAndFiles) {
    const auto cfg = config(R"({"type":"bell"},{"type":"qaoa","graph":{"kind":"path","n":10}})", R"("IDEAL","ION_FC")",
                            R"(,"noisy_seeds":1)");
    const ResultsArchive a = run_experiments(cfg);

    const auto bars = plot_data(a, "chsh_bars");
    const auto bound = std::find_if(bars.begin(), bars.end(), [](const PlotSeries& s) { return s.name == "classical_bound"; });
    ASSERT_NE(bound, bars.end());
    for (const auto& p : bound->points) EXPECT_EQ(p.y, 2.0);

    for (const auto& s : plot_data(a, "qaoa_feas_vs_density")) {
        ASSERT_EQ(s.points.size(), 1U);
        EXPECT_DOUBLE_EQ(s.points[0].x, 0.2);
    }

    const auto dir = scratch("plots");
    const auto files = emit_plot_data(a, "qaoa_ar_bars", dir);
    ASSERT_EQ(files.size(), 2U);
    EXPECT_EQ(files[0].filename(), "qaoa_ar_bars__IDEAL.dat");
    std::ifstream in(files[0]);
    std::string line, last;
    while (std::getline(in, line)) last = line;
    std::istringstream fields(last);
    double x = -1, y = -1, err = -1;
    fields >> x >> y >> err;
    EXPECT_EQ(x, 0.0);
    EXPECT_GT(y, 0.0);
    EXPECT_GE(err, 0.0);

    EXPECT_EQ(kind_of([&] { plot_data(a, "ghz_vs_n"); }), ErrorKind::NoMatchingRows);
    EXPECT_EQ(kind_of([&] { plot_data(a, "bloch_sphere"); }), ErrorKind::InvalidArgument);
}

TEST(Seeds, TaskSeedsDiffer) {
    EXPECT_NE(task_seed(1, 0, "IDEAL", 0), task_seed(1, 1, "IDEAL", 0));
    EXPECT_NE(task_seed(1, 0, "IDEAL", 0), task_seed(1, 0, "ION_FC", 0));
    EXPECT_NE(task_seed(1, 0, "IDEAL", 0), task_seed(1, 0, "IDEAL", 1));
    EXPECT_EQ(task_seed(1, 0, "IDEAL", 0), task_seed(1, 0, "IDEAL", 0));
}
