// Copyright 2026 The magnonic Authors
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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "gtest/gtest.h"

namespace fs = std::filesystem;
using magnonic::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result Invoke(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path TempFile(const std::string &name) {
    return fs::temp_directory_path() / ("magnonic_cli_" + std::to_string(::getpid()) + "_" + name);
}

std::string ReadFile(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

using Table = std::vector<std::vector<std::string>>;

Table ParseCsv(const std::string &text) {
    Table rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

constexpr int kLambda = 7;
constexpr int kIndicator = 5;
constexpr int kMinS = 9;
constexpr int kChainOk = 11;

}  // namespace

TEST(CliFormat, ShortestRoundTrips) {
    for (double x : {0.1, 1.0 / 3.0, 1e-300, -2.5, 0.75, 123456789.125}) {
        EXPECT_EQ(std::strtod(magnonic::cli::shortest(x).c_str(), nullptr), x);
    }
    EXPECT_EQ(magnonic::cli::shortest(0.5), "0.5");
    EXPECT_EQ(magnonic::cli::shortest(-0.0), "0");
}

TEST(CliFormat, CsvHeaderAndRow) {
    EXPECT_EQ(magnonic::cli::csv_header(),
              "model,family_params,n,boundary,k_index,indicator_abs,sigma_z_mean_abs,lambda,global_G,min_S,max_S,"
              "chain_ok\n");
    magnonic::cli::CsvRow row;
    row.model = "ghz";
    row.family_params = "p=0.75";
    row.n = 5;
    row.boundary = "none";
    row.indicator_abs = 0.5;
    row.chain_ok = true;
    EXPECT_EQ(magnonic::cli::format_csv_row(row), "ghz,p=0.75,5,none,0,0.5,0,0,0,0,0,true\n");
    row.family_params = "a,b";
    EXPECT_NE(magnonic::cli::format_csv_row(row).find("\"a,b\""), std::string::npos);
}

TEST(CliGrid, RangesAndLists) {
    using magnonic::cli::parse_grid;
    const std::vector<double> alpha = parse_grid("0.05:0.50:0.05");
    ASSERT_EQ(alpha.size(), 10u);
    EXPECT_EQ(alpha[2], 0.15);
    EXPECT_EQ(alpha[9], 0.5);
    EXPECT_EQ(parse_grid("0.25:1.5:0.25").size(), 6u);
    EXPECT_EQ(parse_grid("0.25,0.5,1.0"), (std::vector<double>{0.25, 0.5, 1.0}));
    EXPECT_EQ(parse_grid("3"), (std::vector<double>{3.0}));
    EXPECT_EQ(parse_grid("1:1:0.5"), (std::vector<double>{1.0}));
}

TEST(CliGrid, EmptyOrMalformedIsUsageError) {
    using magnonic::cli::parse_grid;
    using magnonic::cli::UsageError;
    for (const char *bad : {"", "1:0:0.1", "0:1:0", "0:1:-0.1", "0:1", "a:b:c", "1,,2", "nan", "0:1:0.1:2"}) {
        EXPECT_THROW(parse_grid(bad), UsageError) << bad;
    }
}

TEST(CliReport, GhzCounterexample) {
    const fs::path csv = TempFile("ghz.csv");
    const Result r = Invoke({"report", "--kind", "ghz", "--n", "5", "--p", "0.75", "--out", csv.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("Lambda                0.5\n"), std::string::npos);
    EXPECT_NE(r.out.find("1 - G                 0.25\n"), std::string::npos);
    EXPECT_NE(r.out.find("<= Lambda: PASS"), std::string::npos);
    EXPECT_NE(r.out.find("1 - G: violated"), std::string::npos);

    const Table t = ParseCsv(ReadFile(csv));
    ASSERT_EQ(t.size(), 6u);
    for (std::size_t i = 1; i < t.size(); ++i) {
        ASSERT_EQ(t[i].size(), 12u);
        EXPECT_EQ(t[i][0], "ghz");
        EXPECT_EQ(t[i][4], std::to_string(i - 1));
        EXPECT_NEAR(std::stod(t[i][kIndicator]), 0.5, 1e-12);
        EXPECT_NEAR(std::stod(t[i][kLambda]), 0.5, 1e-12);
        EXPECT_EQ(t[i][kChainOk], "true");
    }
    fs::remove(csv);
}

TEST(CliReport, DickeHalfFillingAndProduct) {
    const fs::path csv = TempFile("dicke.csv");
    Result r = Invoke({"report", "--kind", "dicke", "--n", "16", "--m", "8", "--out", csv.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    Table t = ParseCsv(ReadFile(csv));
    ASSERT_EQ(t.size(), 17u);
    EXPECT_EQ(t[1][kLambda], "0");
    EXPECT_NEAR(std::stod(t[1][kIndicator]), 0.0, 1e-12);

    r = Invoke({"report", "--kind", "product", "--n", "10", "--out", csv.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    t = ParseCsv(ReadFile(csv));
    ASSERT_EQ(t.size(), 11u);
    EXPECT_EQ(t[1][1], "bits=0000000000");
    EXPECT_EQ(t[1][kLambda], "1");
    EXPECT_NEAR(std::stod(t[1][kIndicator]), 1.0, 1e-12);
    fs::remove(csv);
}

TEST(CliReport, StabilizerKindsAndGround) {
    Result r = Invoke({"report", "--kind", "cluster", "--n", "8", "--graph", "path"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("boundary      open"), std::string::npos);
    EXPECT_NE(r.out.find("8 checked"), std::string::npos);

    r = Invoke({"report", "--kind", "toric", "--lx", "2", "--ly", "2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("sites         8"), std::string::npos);

    r = Invoke({"report", "--kind", "ground", "--model", "heisenberg", "--n", "6"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("degenerate    yes"), std::string::npos);
    EXPECT_NE(r.out.find("representative |0...0>: energy -6, Lambda 1, indicator 1"), std::string::npos);

    r = Invoke({"report", "--kind", "ground", "--model", "xy", "--n", "6", "--gamma", "0.5", "--B", "0.5", "--boundary",
             "open"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("boundary      open"), std::string::npos);
}

TEST(CliReport, DumpAmplitudes) {
    const Result r = Invoke({"report", "--kind", "product", "--bits", "10", "--dump-amplitudes"});
    EXPECT_EQ(r.code, 0) << r.err;
    // Site 1 set: basis index 1.
    EXPECT_NE(r.out.find("index,re,im\n0,0,0\n1,1,0\n2,0,0\n3,0,0\n"), std::string::npos);
    EXPECT_EQ(Invoke({"report", "--kind", "product", "--n", "13", "--dump-amplitudes"}).code, 2);
}

TEST(CliReport, UsageErrors) {
    EXPECT_EQ(Invoke({}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "ghz", "--n", "5", "--p", "0.75", "--bogus"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "unknown", "--n", "3"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "dicke", "--n", "4"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "dicke", "--n", "4", "--m", "5"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "ghz", "--n", "5", "--p", "1.5"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "product", "--bits", "0120"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "product", "--n", "21"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "product", "--n", "6", "--cap", "5"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "product", "--n", "6", "--cap", "31"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "product", "--n", "6", "--tol", "-1"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "ground", "--model", "ising", "--n", "6"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "cluster", "--n", "2", "--graph", "ring"}).code, 2);
    EXPECT_EQ(Invoke({"report", "--kind", "ghz", "--n", "5", "--p", "0.75", "--boundary", "twisted"}).code, 2);
    EXPECT_EQ(Invoke({"--help"}).code, 0);
}

TEST(CliSweep, DickeLambdaIsOneMinusTwoAlpha) {
    const Result r = Invoke({"sweep", "--model", "dicke", "--n", "16", "--m", "1:8:1"});
    EXPECT_EQ(r.code, 0) << r.err;
    const Table t = ParseCsv(r.out);
    ASSERT_EQ(t.size(), 9u);
    for (int m = 1; m <= 8; ++m) {
        const double alpha = m / 16.0;
        EXPECT_NEAR(std::stod(t[m][kLambda]), 1.0 - 2.0 * alpha, 1e-12);
        EXPECT_NEAR(std::stod(t[m][kIndicator]), 1.0 - 2.0 * alpha, 1e-12);
    }
}

TEST(CliSweep, DickeAlphaGridRoundsToLatticeFilling) {
    const Result r = Invoke({"sweep", "--model", "dicke", "--n", "16", "--alpha", "0.05:0.50:0.05"});
    EXPECT_EQ(r.code, 0) << r.err;
    const Table t = ParseCsv(r.out);
    ASSERT_EQ(t.size(), 11u);
    for (std::size_t i = 1; i < t.size(); ++i) {
        const std::string &params = t[i][1];
        const double alpha_eff = std::stod(params.substr(params.find("alpha_eff=") + 10));
        EXPECT_NEAR(std::stod(t[i][kLambda]), 1.0 - 2.0 * alpha_eff, 1e-12);
    }
    EXPECT_EQ(t[3][1], "alpha=0.15;m=2;alpha_eff=0.125");
}

TEST(CliSweep, IsingLambdaRisesWithField) {
    const Result r = Invoke({"sweep", "--model", "ising", "--n", "10", "--B", "0.05:3.0:0.25"});
    EXPECT_EQ(r.code, 0) << r.err;
    const Table t = ParseCsv(r.out);
    ASSERT_EQ(t.size(), 13u);
    EXPECT_LT(std::stod(t[1][kLambda]), 0.1);
    EXPECT_GT(std::stod(t.back()[kLambda]), 0.9);
    for (std::size_t i = 2; i < t.size(); ++i) {
        EXPECT_GT(std::stod(t[i][kLambda]), std::stod(t[i - 1][kLambda]));
    }
}

TEST(CliSweep, XyGridStaysEntangled) {
    const Result r = Invoke({"sweep", "--model", "xy", "--n", "10", "--gamma", "0.25,0.5,1.0", "--B", "0.25:1.5:0.25"});
    EXPECT_EQ(r.code, 0) << r.err;
    const Table t = ParseCsv(r.out);
    ASSERT_EQ(t.size(), 19u);
    EXPECT_EQ(t[1][1], "gamma=0.25;B=0.25");
    EXPECT_EQ(t[2][1], "gamma=0.25;B=0.5");
    for (std::size_t i = 1; i < t.size(); ++i) {
        EXPECT_GT(std::stod(t[i][kMinS]), 0.0) << t[i][1];
        EXPECT_EQ(t[i][kChainOk], "true");
    }
}

TEST(CliSweep, UsageErrors) {
    EXPECT_EQ(Invoke({"sweep", "--model", "ghz", "--n", "4", "--p", "0.9:0.1:0.1"}).code, 2);
    EXPECT_EQ(Invoke({"sweep", "--model", "ghz", "--n", "4"}).code, 2);
    EXPECT_EQ(Invoke({"sweep", "--model", "dicke", "--n", "4", "--m", "1:2:1", "--alpha", "0.5"}).code, 2);
    EXPECT_EQ(Invoke({"sweep", "--model", "dicke", "--n", "4", "--m", "0.5"}).code, 2);
    EXPECT_EQ(Invoke({"sweep", "--model", "ising", "--n", "4", "--B", "-1"}).code, 2);
    EXPECT_EQ(Invoke({"sweep", "--model", "ghz", "--n", "4", "--p", "0.5", "--k", "4"}).code, 2);
    EXPECT_EQ(Invoke({"sweep", "--model", "potts", "--n", "4"}).code, 2);
}

TEST(CliDeterminism, ByteIdenticalCsv) {
    const fs::path a = TempFile("det_a.csv");
    const fs::path b = TempFile("det_b.csv");
    const std::vector<std::vector<std::string>> commands = {
        {"verify", "--n", "6", "--samples", "50", "--seed", "42"},
        {"sweep", "--model", "ghz", "--n", "6", "--p", "0:1:0.125", "--k", "2"},
        {"sweep", "--model", "ising", "--n", "6", "--B", "0.5,1,2", "--seed", "7"},
    };
    for (std::vector<std::string> cmd : commands) {
        cmd.push_back("--out");
        cmd.push_back(a.string());
        ASSERT_EQ(Invoke(cmd).code, 0);
        cmd.back() = b.string();
        ASSERT_EQ(Invoke(cmd).code, 0);
        const std::string first = ReadFile(a);
        EXPECT_FALSE(first.empty());
        EXPECT_EQ(first, ReadFile(b));
        EXPECT_EQ(first.find('\r'), std::string::npos);
    }
    fs::remove(a);
    fs::remove(b);
}

TEST(CliVerify, PropertyRunsPass) {
    Result r = Invoke({"verify", "--n", "8", "--samples", "1000", "--seed", "42"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("chain violations   0\n"), std::string::npos);
    EXPECT_NE(r.out.find("cross violations   0\n"), std::string::npos);

    r = Invoke({"verify", "--n", "2", "--samples", "100"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("chain violations   0\n"), std::string::npos);
}

TEST(CliVerify, SeedsChangeSamples) {
    const Result a = Invoke({"verify", "--n", "4", "--samples", "3", "--seed", "1"});
    const Result b = Invoke({"verify", "--n", "4", "--samples", "3", "--seed", "2"});
    EXPECT_NE(a.out, b.out);
}

TEST(CliVerify, CounterexampleIsExpectedFail) {
    const fs::path csv = TempFile("ce.csv");
    const Result r = Invoke({"verify", "--n", "5", "--samples", "10", "--counterexample", "--out", csv.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("indicator          0.5\n"), std::string::npos);
    EXPECT_NE(r.out.find("1 - G              0.25\n"), std::string::npos);
    EXPECT_NE(r.out.find("violated (expected-fail"), std::string::npos);
    const Table t = ParseCsv(ReadFile(csv));
    ASSERT_EQ(t.size(), 12u);
    EXPECT_EQ(t.back()[0], "ghz");
    fs::remove(csv);
}

TEST(CliVerify, UsageErrors) {
    EXPECT_EQ(Invoke({"verify", "--samples", "10"}).code, 2);
    EXPECT_EQ(Invoke({"verify", "--n", "4", "--samples", "0"}).code, 2);
    EXPECT_EQ(Invoke({"verify", "--n", "25", "--samples", "1"}).code, 2);
}
