// Copyright 2026 The addcodes Authors
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

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

#include "test_util.hpp"

using addcodes::testing::data_path;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result r;
    r.code = addcodes::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string golden_path(const std::string &name) { return std::string(ADDCODES_GOLDEN_DIR) + "/" + name; }

// Set ADDCODES_UPDATE_GOLDEN=1 to rewrite the files from the current output.
void expect_golden(const std::string &name, const std::string &text) {
    const std::string path = golden_path(name);
    if (const char *update = std::getenv("ADDCODES_UPDATE_GOLDEN"); update && *update == '1') {
        std::ofstream(path) << text;
    }
    std::ifstream in(path);
    ASSERT_TRUE(in) << "missing golden file " << path;
    std::stringstream want;
    want << in.rdbuf();
    ASSERT_EQ(nlohmann::json::parse(text), nlohmann::json::parse(want.str())) << name;
    ASSERT_EQ(text, want.str()) << name;
}

}  // namespace

TEST(cli, duality_count) {
    const auto r = run({"duality", "count", "--p", "3", "--e", "2"});
    ASSERT_EQ(r.code, 0);
    ASSERT_NE(r.out.find("48"), std::string::npos);
    ASSERT_NE(r.out.find("18"), std::string::npos);
    expect_golden("duality_count_3_2.json", run({"duality", "count", "--p", "3", "--e", "2", "--format", "json"}).out);
}

TEST(cli, duality_list_classify_table) {
    const auto list = run({"duality", "list", "--p", "2", "--e", "2"});
    ASSERT_EQ(list.code, 0);
    ASSERT_EQ(std::count(list.out.begin(), list.out.end(), '\n'), 6);
    const auto skew = run({"duality", "list", "--p", "3", "--e", "2", "--class", "skew", "--format", "json"});
    ASSERT_EQ(skew.code, 0);
    ASSERT_EQ(nlohmann::json::parse(skew.out)["dualities"].size(), 2u);
    const auto cls = run({"duality", "classify", "--duality", "name:A4"});
    ASSERT_NE(cls.out.find("SkewSymmetric"), std::string::npos);
    expect_golden("duality_table_m1.json", run({"duality", "table", "--duality", "name:M1", "--format", "json"}).out);
    const auto file = run({"duality", "classify", "--duality", "file:" + data_path("a4.duality")});
    ASSERT_EQ(file.code, 0);
}

TEST(cli, validate_table) {
    const auto good = run({"duality", "validate-table", "--table", data_path("d1.table")});
    ASSERT_EQ(good.code, 0);
    const auto bad = run({"duality", "validate-table", "--table", data_path("n1.table"), "--format", "json"});
    ASSERT_EQ(bad.code, 1);
    const auto j = nlohmann::json::parse(bad.out);
    ASSERT_FALSE(j["valid"].get<bool>());
    ASSERT_FALSE(j["diagnostics"].empty());
    ASSERT_EQ(run({"duality", "validate-table", "--table", data_path("n2.table")}).code, 1);
}

TEST(cli, code_check) {
    const auto r = run({"code", "check", "--duality", "name:M1", "--gen", data_path("example1.gen")});
    ASSERT_EQ(r.code, 0);
    ASSERT_NE(r.out.find("ACD: yes"), std::string::npos);
    const auto no = run({"code", "check", "--duality", "name:M1", "--gen", data_path("example2.gen")});
    ASSERT_NE(no.out.find("ACD: no"), std::string::npos);
    ASSERT_NE(no.out.find("self-dual: yes"), std::string::npos);
    expect_golden("code_check_m1_example1.json",
                  run({"code", "check", "--duality", "name:M1", "--gen", data_path("example1.gen"), "--format", "json"}).out);
}

TEST(cli, code_dual_and_mindist) {
    const auto dual = run({"code", "dual", "--duality", "name:M1", "--gen", data_path("example1.gen")});
    ASSERT_EQ(dual.code, 0);
    std::istringstream in(dual.out);
    const auto file = addcodes::read_generator(in);
    const auto got = addcodes::AdditiveCode::from_rows(file.rows, file.spec, file.n);
    const auto want = addcodes::AdditiveCode::from_rows(
        addcodes::testing::rows_of(addcodes::testing::f9(), {{"00", "01"}, {"11", "10"}}));
    ASSERT_EQ(got, want);
    const auto md = run({"code", "mindist", "--gen", data_path("t1_n4_k4.gen"), "--format", "json"});
    ASSERT_EQ(nlohmann::json::parse(md.out)["d"], 3);
}

TEST(cli, construct_subcommands) {
    expect_golden("construct_bound_m1_3_1.json",
                  run({"construct", "bound", "--duality", "name:M1", "--n", "3", "--s", "1", "--format", "json"}).out);
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"construct", "length1", "--duality", "name:D1"},
             {"construct", "acd1", "--duality", "name:M1", "--gen", data_path("acd1.gen")},
             {"construct", "acd2", "--duality", "name:M2", "--gen", data_path("acd2.gen")},
             {"construct", "n2n2", "--duality", "name:D1", "--n", "4"},
             {"construct", "f4", "--duality", "name:D2", "--n", "6", "--k", "2"}}) {
        const auto r = run(args);
        ASSERT_EQ(r.code, 0) << args[1] << ": " << r.err;
    }
    ASSERT_EQ(run({"construct", "f4", "--duality", "name:D1", "--n", "5", "--k", "3"}).code, 2);
    ASSERT_EQ(run({"construct", "acd1", "--duality", "name:M1", "--gen", data_path("example2.gen")}).code, 2);
}

TEST(cli, search_subcommands) {
    expect_golden("search_exhaustive_d1_2_2.json",
                  run({"search", "exhaustive", "--duality", "name:D1", "--n", "2", "--k", "2", "--format", "json"}).out);
    const auto text = run({"search", "exhaustive", "--duality", "name:D1", "--n", "2", "--k", "2"});
    ASSERT_EQ(text.out.substr(0, text.out.find('\n')), "n=2 k=2 d=2 [ExhaustiveProven]");
    const auto over = run({"search", "exhaustive", "--duality", "name:M1", "--n", "4", "--k", "4", "--budget", "100"});
    ASSERT_EQ(over.code, 2);
    ASSERT_NE(over.err.find("budget"), std::string::npos);
    const auto a = run({"search", "random", "--duality", "name:D1", "--n", "5", "--k", "6", "--trials", "2000", "--seed",
                        "5", "--jobs", "1", "--format", "json"});
    const auto b = run({"search", "random", "--duality", "name:D1", "--n", "5", "--k", "6", "--trials", "2000", "--seed",
                        "5", "--jobs", "4", "--format", "json"});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(a.out, b.out);
}

TEST(cli, search_writes_witnesses) {
    const auto dir = std::filesystem::temp_directory_path() / "addcodes_cli_test";
    std::filesystem::remove_all(dir);
    const auto r = run({"search", "exhaustive", "--duality", "name:D1", "--n", "3", "--k", "2", "--out", dir.string()});
    ASSERT_EQ(r.code, 0);
    std::size_t files = 0;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        const auto file = addcodes::read_generator_file(entry.path().string());
        ASSERT_EQ(file.n, 3u);
        ++files;
    }
    ASSERT_EQ(files, 1u);
    std::filesystem::remove_all(dir);
}

TEST(cli, search_table) {
    const auto r = run({"search", "table", "--name", "table2", "--n-max", "3"});
    ASSERT_EQ(r.code, 0);
    std::size_t pass_lines = 0;
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);) pass_lines += line.rfind("PASS ", 0) == 0;
    ASSERT_EQ(pass_lines, 12u);
    expect_golden("search_table_table2_2.json",
                  run({"search", "table", "--name", "table2", "--n-max", "2", "--mode", "exhaustive", "--format", "json"}).out);
    const auto skipped = run({"search", "table", "--name", "table2", "--n-max", "2", "--mode", "exhaustive", "--budget", "5"});
    ASSERT_EQ(skipped.code, 1);
}

TEST(cli, ci_mode_requires_seed) {
    ::setenv("ADDCODES_CI", "1", 1);
    const auto r = run({"search", "random", "--duality", "name:D1", "--n", "3", "--k", "2", "--trials", "10"});
    const auto seeded =
        run({"search", "random", "--duality", "name:D1", "--n", "3", "--k", "2", "--trials", "10", "--seed", "4"});
    ::unsetenv("ADDCODES_CI");
    ASSERT_EQ(r.code, 2);
    ASSERT_EQ(seeded.code, 0);
}

TEST(cli, verify_identities) {
    const auto r = run({"verify-identities", "--instances", "40", "--seed", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const auto &check : j["checks"]) ASSERT_EQ(check["failures"], 0);
}

TEST(cli, usage_errors) {
    ASSERT_EQ(run({}).code, 2);
    ASSERT_EQ(run({"bogus"}).code, 2);
    ASSERT_EQ(run({"duality", "count", "--p", "4", "--e", "1"}).code, 2);
    ASSERT_EQ(run({"code", "check", "--duality", "name:Q", "--gen", data_path("example1.gen")}).code, 2);
    ASSERT_EQ(run({"code", "check", "--duality", "name:D1", "--gen", data_path("example1.gen")}).code, 2);
    ASSERT_EQ(run({"code", "check", "--duality", "name:M1", "--gen", data_path("missing.gen")}).code, 2);
    ASSERT_EQ(run({"search", "exhaustive", "--duality", "name:D1", "--n", "2", "--k", "2", "--format", "xml"}).code, 2);
    const auto r = run({"duality", "classify"});
    ASSERT_EQ(r.code, 2);
    ASSERT_FALSE(r.err.empty());
}
