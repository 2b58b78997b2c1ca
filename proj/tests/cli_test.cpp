// Copyright 2026 The gfoart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

namespace gfoart::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gfoart_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, ScaffoldThenValidate) {
  const auto bike = path("bike.ttl");
  auto s = run_cli({"scaffold", "Bike", "--requirements", "-o", bike});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_TRUE(s.out.empty());
  auto v = run_cli({"validate", bike, "--profile", "artifact"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_EQ(v.out, "OK: 0 violations\n");
  EXPECT_TRUE(v.err.empty());
}

TEST_F(CliTest, ScaffoldToStdout) {
  auto s = run_cli({"scaffold", "Chair", "--space"});
  EXPECT_EQ(s.code, kExitOk);
  EXPECT_NE(s.out.find(":chair1 a gfo:MOB ."), std::string::npos);
}

TEST_F(CliTest, BareArtifactJson) {
  const auto bare = write("bare.ttl", ":x1 a gfo:Artifact .\n");
  auto v = run_cli({"validate", bare, "--format", "json"});
  EXPECT_EQ(v.code, kExitViolations);
  auto j = nlohmann::json::parse(v.out);
  bool found = false;
  for (const auto& e : j["violations"]) {
    if (e["axiom"] == "A4") {
      found = true;
      EXPECT_EQ(e["witnesses"], nlohmann::json::parse(R"([{"x":"x1"}])"));
    }
  }
  EXPECT_TRUE(found);
}

TEST_F(CliTest, JsonMatchesReportSchema) {
  for (const char* name :
       {"bike.ttl", "bare-artifact.ttl", "constitution-symmetric.ttl"}) {
    auto v = run_cli({"validate", testing::corpus(name), "--profile", "all",
                      "--format", "json"});
    auto j = nlohmann::json::parse(v.out);
    ASSERT_TRUE(j.is_object());
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys,
              (std::vector<std::string>{"counts", "profiles", "violations"}));
    EXPECT_TRUE(j["profiles"].is_array());
    for (const auto& e : j["violations"]) {
      EXPECT_EQ(e.size(), 4u);
      EXPECT_TRUE(e["axiom"].is_string());
      EXPECT_TRUE(e["citation"].is_string());
      EXPECT_TRUE(e["message"].is_string());
      ASSERT_TRUE(e["witnesses"].is_array());
      EXPECT_FALSE(e["witnesses"].empty());
      for (const auto& w : e["witnesses"]) {
        ASSERT_TRUE(w.is_object());
        for (const auto& [k, val] : w.items()) EXPECT_TRUE(val.is_string());
      }
    }
    EXPECT_EQ(j["counts"].size(), 2u);
    EXPECT_TRUE(j["counts"]["axioms_checked"].is_number_unsigned());
    EXPECT_EQ(j["counts"]["violated"], j["violations"].size());
  }
}

TEST_F(CliTest, AxiomsSpaceProfile) {
  auto a = run_cli({"axioms", "--profile", "space"});
  EXPECT_EQ(a.code, kExitOk);
  std::istringstream lines(a.out);
  std::vector<std::string> ids;
  for (std::string line; std::getline(lines, line);) {
    ids.push_back(line.substr(0, line.find('\t')));
    EXPECT_NE(line.find('"'), std::string::npos);
  }
  EXPECT_EQ(ids, (std::vector<std::string>{"M1", "M2", "M3", "M4", "M5", "M6",
                                           "M7", "M8", "M9", "M13", "M15"}));
}

TEST_F(CliTest, AxiomsJson) {
  auto a = run_cli({"axioms", "--profile", "constitution", "--format", "json"});
  auto j = nlohmann::json::parse(a.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["axiom"], "C1");
  EXPECT_EQ(j[0]["citation"], "§7");
}

TEST_F(CliTest, UsageErrors) {
  auto f = run_cli({"frobnicate"});
  EXPECT_EQ(f.code, kExitUsage);
  EXPECT_NE(f.err.find("Usage"), std::string::npos);
  EXPECT_TRUE(f.out.empty());
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"validate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"query", testing::corpus("bike.ttl")}).code, kExitUsage);
  EXPECT_EQ(run_cli({"validate", path("missing.ttl")}).code, kExitUsage);
  EXPECT_EQ(run_cli({"validate", testing::corpus("bike.ttl"), "--profile",
                     "geometry"})
                .code,
            kExitUsage);
  EXPECT_EQ(run_cli({"validate", testing::corpus("bike.ttl"), "--format",
                     "xml"})
                .code,
            kExitUsage);
  EXPECT_EQ(run_cli({"scaffold", ""}).code, kExitUsage);
  EXPECT_EQ(run_cli({"oracle", "--max-size", "13"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"oracle", "--require", "Artifact(?x)"}).code, kExitUsage);
}

TEST_F(CliTest, HelpExitsZero) {
  auto h = run_cli({"--help"});
  EXPECT_EQ(h.code, kExitOk);
  EXPECT_NE(h.out.find("validate"), std::string::npos);
}

TEST_F(CliTest, ParseDiagnosticsExitTwo) {
  auto v = run_cli({"validate", testing::corpus("malformed.ttl")});
  EXPECT_EQ(v.code, kExitDiagnostics);
  EXPECT_TRUE(v.out.empty());
  EXPECT_NE(v.err.find("malformed.ttl:5:1: syntax:"), std::string::npos);
  EXPECT_NE(v.err.find("missing-role"), std::string::npos);
  EXPECT_NE(v.err.find("unknown-predicate"), std::string::npos);
}

TEST_F(CliTest, ExitCodeContractOnCorpus) {
  const std::vector<std::tuple<std::string, std::string, int>> cases = {
      {"bike.ttl", "artifact,requirements,constitution", kExitOk},
      {"chair.ttl", "all", kExitOk},
      {"bare-artifact.ttl", "artifact", kExitViolations},
      {"fish-environment.ttl", "space", kExitOk},
      {"constitution-reflexive.ttl", "constitution", kExitViolations},
      {"constitution-symmetric.ttl", "constitution", kExitViolations},
      {"int1-pass.ttl", "integration", kExitOk},
      {"int1-fail.ttl", "integration", kExitViolations},
      {"malformed.ttl", "all", kExitDiagnostics},
  };
  for (const auto& [file, profiles, code] : cases) {
    for (const char* format : {"text", "json"}) {
      auto v = run_cli({"validate", testing::corpus(file), "--profile",
                        profiles, "--format", format});
      EXPECT_EQ(v.code, code) << file << " " << format << "\n" << v.err;
      if (code != kExitDiagnostics && std::string(format) == "json") {
        EXPECT_NO_THROW(nlohmann::json::parse(v.out)) << file;
      }
    }
  }
}

TEST_F(CliTest, VerboseShowsFormula) {
  auto v = run_cli({"validate", testing::corpus("constitution-reflexive.ttl"),
                    "-v"});
  EXPECT_EQ(v.code, kExitViolations);
  EXPECT_NE(v.out.find("C1 formula: ∀x (consists_of(x, x) → ¬consists_of(x, "
                       "x))"),
            std::string::npos)
      << v.out;
}

TEST_F(CliTest, Query) {
  auto q = run_cli({"query", testing::corpus("bike.ttl"),
                    "Artifact(?x), is-instance-of(?x, ?K)"});
  EXPECT_EQ(q.code, kExitOk);
  EXPECT_EQ(q.out, "K=Bike, x=bike1\n");
  auto j = run_cli({"query", testing::corpus("bike.ttl"),
                    "hasMember(?Q, ?p)", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out).size(), 3u);
  auto ground = run_cli({"query", testing::corpus("bike.ttl"),
                         "Artifact(bike1)"});
  EXPECT_EQ(ground.out, "true\n");
  EXPECT_EQ(run_cli({"query", testing::corpus("bike.ttl"), "Nope(?x)"}).code,
            kExitUsage);
  EXPECT_EQ(run_cli({"query", testing::corpus("malformed.ttl"), "MOB(?x)"})
                .code,
            kExitDiagnostics);
}

TEST_F(CliTest, Oracle) {
  auto o = run_cli({"oracle", "--profile", "artifact,requirements,constitution",
                    "--require", "Artifact(x1)", "--max-size", "12"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out.rfind("verdict: satisfiable\nbound: 12\n", 0), 0u);
  auto u = run_cli({"oracle", "--profile", "constitution", "--require",
                    "consists_of(a,a)", "--max-size", "3", "--format", "json"});
  EXPECT_EQ(u.code, kExitViolations);
  auto j = nlohmann::json::parse(u.out);
  EXPECT_EQ(j["verdict"], "unsatisfiable-up-to-bound");
  EXPECT_TRUE(j["witness"].is_null());
}

TEST_F(CliTest, OracleBoundFromEnvironment) {
  ::setenv("GFOART_MAX_SIZE", "2", 1);
  auto o = run_cli({"oracle", "--profile", "artifact", "--require",
                    "Artifact(x1)"});
  EXPECT_NE(o.out.find("bound: 2\n"), std::string::npos);
  ::setenv("GFOART_MAX_SIZE", "40", 1);
  EXPECT_EQ(run_cli({"oracle"}).code, kExitUsage);
  ::setenv("GFOART_MAX_SIZE", "abc", 1);
  EXPECT_EQ(run_cli({"oracle"}).code, kExitUsage);
  // The flag wins over the environment.
  auto flag = run_cli({"oracle", "--max-size", "3"});
  EXPECT_NE(flag.out.find("bound: 3\n"), std::string::npos);
  ::unsetenv("GFOART_MAX_SIZE");
}

TEST_F(CliTest, StrictFlag) {
  const auto file = write(
      "spec.ttl",
      "@prefix gfo: <https://example.org/gfo-artifact#> .\n"
      ":i a gfo:IntendToBuildSpec ; gfo:agent :s ; gfo:object :x ;\n"
      "    gfo:model :m ; gfo:design :d ; gfo:kind :K .\n");
  EXPECT_EQ(run_cli({"validate", file}).code, kExitOk);
  auto v = run_cli({"validate", file, "--strict"});
  EXPECT_EQ(v.code, kExitViolations);
  EXPECT_EQ(v.out.rfind("A9S:", 0), 0u);
}

}  // namespace
}  // namespace gfoart::cli
