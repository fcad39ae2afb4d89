// Copyright 2026 The qsn Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "commands.hpp"
#include "json.hpp"
#include "n_list.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace qsn::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "qsn");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / ("qsn_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

TEST(NList, Examples) {
    using V = std::vector<std::size_t>;
    EXPECT_EQ(parse_n_list("2,4,8"), (V{2, 4, 8}));
    EXPECT_EQ(parse_n_list("2:10:2"), (V{2, 4, 6, 8, 10}));
    EXPECT_EQ(parse_n_list("2:9:2"), (V{2, 4, 6, 8}));
    EXPECT_EQ(parse_n_list("2,100:300:100"), (V{2, 100, 200, 300}));
    EXPECT_EQ(parse_n_list("7"), (V{7}));
    EXPECT_EQ(parse_n_list("5:5:1"), (V{5}));
}

TEST(NList, RejectsMalformedInput) {
    for (const char* bad : {"", "2,,4", "x", "2:10", "2:10:0", "10:2:2", "-4", "2:10:2:1", "3.5"}) {
        EXPECT_THROW(parse_n_list(bad), std::invalid_argument) << bad;
    }
}

TEST(Threads, ResolveHonoursCap) {
    EXPECT_EQ(resolve_threads(4, nullptr), 4u);
    EXPECT_EQ(resolve_threads(4, "2"), 2u);
    EXPECT_EQ(resolve_threads(1, "8"), 1u);
    EXPECT_EQ(resolve_threads(4, "zero"), 4u);
    EXPECT_EQ(resolve_threads(4, "0"), 4u);
    EXPECT_GE(resolve_threads(0, nullptr), 1u);
    EXPECT_EQ(resolve_threads(0, "1"), 1u);
}

TEST(Report, FormatDoubleRoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, 5.000164329e-4, 0.25, 1e-300}) {
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
}

TEST(CliSweep, MatchesGoldenCsv) {
    const auto r = run({"sweep", "--case", "b", "--n", "2,4", "--m", "10", "--trials", "1000", "--seed", "7"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, read_file(fs::path(QSN_GOLDEN_DIR) / "sweep_b_small.csv"));
}

TEST(CliSweep, CsvAgreesWithLibrary) {
    const auto r = run({"sweep", "--case", "a", "--strategy", "nonlocal", "--n", "3:7:2", "--trials", "200"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], kSweepHeader);

    SamplingPlan plan;
    plan.strategy = StrategyChoice::nonlocal;
    plan.n_values = {3, 5, 7};
    plan.trials = 200;
    const auto rows = run_plan(plan);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string expected = "a,nonlocal," + std::to_string(rows[i].n) + ",200,,0,closed-form," +
                                     format_double(rows[i].mean_perr) + "," + format_double(rows[i].std_error) +
                                     "," + format_double(rows[i].analytic.value);
        EXPECT_EQ(lines[i + 1], expected);
    }
}

TEST(CliSweep, OutputIndependentOfThreads) {
    const std::vector<std::string> base = {"sweep", "--case", "b", "--n", "2:10:2", "--m", "50", "--trials", "3000"};
    std::string reference;
    for (const char* threads : {"1", "4", "8"}) {
        auto args = base;
        args.insert(args.end(), {"--threads", threads});
        const auto r = run(args);
        ASSERT_EQ(r.code, kExitOk);
        if (reference.empty()) {
            reference = r.out;
        }
        EXPECT_EQ(r.out, reference) << threads;
    }
}

TEST(CliSweep, JsonCarriesMetadata) {
    const auto r = run({"sweep", "--case", "b", "--strategy", "local", "--n", "2,4", "--m", "100", "--trials", "50",
                        "--seed", "3", "--format", "json", "-t", "0.5"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("metadata").at("rng"), std::string(kRngAlgorithm));
    EXPECT_EQ(doc.at("metadata").at("seed"), 3);
    EXPECT_EQ(doc.at("metadata").at("M"), 100);
    EXPECT_EQ(doc.at("metadata").at("interaction_time"), 0.5);
    ASSERT_EQ(doc.at("rows").size(), 2u);
    EXPECT_EQ(doc.at("rows")[1].at("N"), 4);
}

TEST(CliSweep, WarnsWhenCascadeUnavailable) {
    const auto r = run({"sweep", "--case", "a", "--strategy", "nonlocal", "--n", "3,4", "--trials", "10", "--backend",
                        "sim-compact"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("N=3"), std::string::npos);
    EXPECT_EQ(r.err.find("N=4"), std::string::npos);
}

TEST(CliSweep, WritesToFile) {
    const fs::path path = scratch_dir() / "sweep.csv";
    const auto r = run({"sweep", "--case", "a", "--n", "2", "--trials", "10", "--out", path.string()});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(split_lines(read_file(path)).size(), 3u);
}

TEST(CliExitCodes, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"sweep", "--n", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"sweep", "--case", "c", "--n", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"sweep", "--case", "a", "--n", "2:x"}).code, kExitUsage);
    EXPECT_EQ(run({"sweep", "--case", "a", "--n", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"sweep", "--case", "b", "--n", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"sweep", "--case", "a", "--n", "2", "--trials", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"sweep", "--case", "a", "--n", "22", "--backend", "sim-dense"}).code, kExitUsage);
    EXPECT_EQ(run({"analytic", "--case", "b", "--n", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    const auto r = run({"sweep", "--case", "a", "--n", "2", "--unknown"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("--trials"), std::string::npos);
}

TEST(CliExitCodes, HelpAndIoFailure) {
    const auto help = run({"sweep", "--help"});
    EXPECT_EQ(help.code, kExitOk);
    EXPECT_NE(help.out.find("--backend"), std::string::npos);
    const auto unwritable = run({"analytic", "--case", "a", "--n", "2", "--out", "/nonexistent-dir/out.csv"});
    EXPECT_EQ(unwritable.code, kExitFailure);
    EXPECT_NE(unwritable.err.find("cannot open"), std::string::npos);
}

TEST(CliAnalytic, Examples) {
    const auto a = run({"analytic", "--case", "a", "--n", "2,4,8"});
    ASSERT_EQ(a.code, kExitOk);
    const auto lines = split_lines(a.out);
    ASSERT_EQ(lines.size(), 7u);
    EXPECT_EQ(lines[0], kAnalyticHeader);
    EXPECT_EQ(lines[1], "a,local,2,,0.25,exact");
    EXPECT_EQ(lines[4], "a,nonlocal,2,,0.25,exact");
    EXPECT_EQ(lines[5], "a,nonlocal,4,,0.125,exact");
    EXPECT_EQ(lines[6], "a,nonlocal,8,,0.0625,exact");

    const auto b = run({"analytic", "--case", "b", "--strategy", "local", "--n", "10", "--m", "10000"});
    ASSERT_EQ(b.code, kExitOk);
    EXPECT_EQ(split_lines(b.out)[1], "b,local,10,10000," + format_double(0.25 + 10.0 * kPi * kPi / 24e8) +
                                         ",leading-order");
}

TEST(CliVerify, DefaultPasses) {
    const auto r = run({"verify", "--n-max", "6", "--draws", "100"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("all"), std::string::npos);
}

TEST(CliVerify, InjectedFaultIsCaughtAndReplays) {
    const fs::path dump = scratch_dir() / "failure.json";
    const auto r = run({"verify", "--n-max", "4", "--draws", "20", "--inject-fault", "unbalanced-splitter",
                        "--failure-out", dump.string()});
    EXPECT_EQ(r.code, kExitFailure);
    ASSERT_TRUE(fs::exists(dump));
    const auto replay = nlohmann::json::parse(read_file(dump));
    EXPECT_EQ(replay.at("fault"), "unbalanced-splitter");

    const auto first = run({"verify", "--replay", dump.string()});
    const auto second = run({"verify", "--replay", dump.string()});
    EXPECT_EQ(first.code, kExitFailure);
    EXPECT_EQ(first.out, second.out);
    EXPECT_NE(first.out.find(replay.at("check").get<std::string>()), std::string::npos);

    // The same inputs without the fault pass.
    auto healed = replay;
    healed["fault"] = "none";
    EXPECT_TRUE(replay_check(healed).passed());
}

TEST(CliVerify, MissingReplayFileFails) {
    EXPECT_EQ(run({"verify", "--replay", "/nonexistent/replay.json"}).code, kExitFailure);
}

TEST(CliVerify, ReportCoversEveryCheck) {
    const auto report = run_verification({4, 10, 1, Fault::none});
    ASSERT_TRUE(report.passed());
    std::set<std::string> checks;
    for (const auto& row : report.rows) {
        checks.insert(row.check);
        EXPECT_TRUE(row.passed);
    }
    EXPECT_EQ(checks, (std::set<std::string>{"w-cascade", "ops-equivalence", "local-paths", "nonlocal-paths",
                                             "same-branch-zero", "local-odd-n"}));
}

TEST(CliBinary, ExitStatusPropagates) {
    const std::string exe = QSN_CLI_PATH;
    const fs::path dump = scratch_dir() / "binary_failure.json";
    const int ok = std::system((exe + " analytic --case a --n 2 > /dev/null").c_str());
    ASSERT_TRUE(WIFEXITED(ok));
    EXPECT_EQ(WEXITSTATUS(ok), kExitOk);
    const int usage = std::system((exe + " sweep --case a > /dev/null 2>&1").c_str());
    EXPECT_EQ(WEXITSTATUS(usage), kExitUsage);
    const int fault = std::system((exe + " verify --n-max 2 --draws 5 --inject-fault unbalanced-splitter --failure-out " +
                                   dump.string() + " > /dev/null")
                                      .c_str());
    EXPECT_EQ(WEXITSTATUS(fault), kExitFailure);
}

}  // namespace
}  // namespace qsn::cli
