//  Copyright 2026 The partlogic Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Runs the installed command-line binary and checks output and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Run cli(const std::string& args) {
  const auto err_path = std::filesystem::temp_directory_path() /
                        ("partlogic_cli_err_" + std::to_string(::getpid()));
  const std::string cmd =
      std::string("'") + PARTLOGIC_CLI + "' " + args + " 2>'" + err_path.string() + "'";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  std::filesystem::remove(err_path);
  return r;
}

nlohmann::json json_of(const std::string& s) { return nlohmann::json::parse(s); }

TEST(Cli, EvalExamples) {
  auto r = cli(R"(eval "p & q" --logic partition --n 3 --assign p="0,1|2" --assign q="0|1,2")");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0,1,2\n");
  r = cli(R"(eval "p | ~p" --logic subset --n 3 --assign p="0")");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{0,1,2}\n");
  r = cli(R"(eval "p -> p" --logic partition --n 3 --assign p="0,1|2")");
  EXPECT_EQ(r.out, "0|1|2\n");
  r = cli(R"(eval "p | q" --logic partition --n 3 --names a,b,c --assign p="a|b,c" --assign q="a,b|c")");
  EXPECT_EQ(r.out, "a|b|c\n");
}

TEST(Cli, EvalErrors) {
  auto r = cli(R"(eval "p &" --n 3)");
  EXPECT_EQ(r.code, 2);
  const auto e = json_of(r.err);
  EXPECT_EQ(e["error"], "SyntaxError");
  EXPECT_EQ(e["position"], 3);
  r = cli(R"(eval "p & q" --n 3 --assign p="0")");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json_of(r.err)["error"], "UnboundVariable");
  r = cli(R"(eval "p" --logic partition --n 3 --assign p="0,1|1,2")");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json_of(r.err)["error"], "OverlappingBlocks");
  r = cli(R"(eval "p" --n 3 --assign p)");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, TautExamples) {
  auto r = cli(R"(taut "p | ~p" --logic subset)");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("valid", 0), 0u);
  r = cli(R"(taut "p | ~p" --logic partition --max-n 3)");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find(R"(p="0,1|2")"), std::string::npos) << r.out;
  r = cli(R"(taut "p -> p" --logic partition --max-n 4)");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "valid (up to n=4)\n");
  r = cli(R"(taut "p -> q" --json)");
  EXPECT_EQ(r.code, 1);
  const auto j = json_of(r.out);
  EXPECT_EQ(j["counterexample"]["assignment"]["p"], "1");
  EXPECT_EQ(j["counterexample"]["assignment"]["q"], "0");
  r = cli(R"(taut "p & q & r & s" --logic partition --max-n 4)");
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(json_of(r.err)["error"], "ResourceLimit");
}

TEST(Cli, TautJsonRoundTripsThroughEval) {
  auto r = cli(R"(taut "p | ~p" --logic partition --max-n 3 --json)");
  ASSERT_EQ(r.code, 1);
  const auto j = json_of(r.out);
  const std::string p = j["counterexample"]["assignment"]["p"];
  const std::string n = std::to_string(j["counterexample"]["n"].get<int>());
  r = cli(R"(eval "p | ~p" --logic partition --n )" + n + R"( --assign p=")" + p + "\"");
  EXPECT_EQ(r.out, j["counterexample"]["value"].get<std::string>() + "\n");
}

TEST(Cli, LatticeExamples) {
  auto j = json_of(cli("lattice --kind partition --n 3 --json").out);
  EXPECT_EQ(j["nodes"].size(), 5u);
  EXPECT_EQ(j["edges"].size(), 6u);
  j = json_of(cli("lattice --kind subset --n 3 --json").out);
  EXPECT_EQ(j["nodes"].size(), 8u);
  EXPECT_EQ(j["edges"].size(), 12u);
  j = json_of(cli("lattice --kind partition --n 1").out);
  EXPECT_EQ(j["nodes"].size(), 1u);
  EXPECT_EQ(j["edges"].size(), 0u);
  const auto dot = cli("lattice --kind partition --n 3 --dot");
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(cli("lattice --n 11").code, 4);
  EXPECT_EQ(cli("lattice --n 3 --dot --json").code, 2);
}

TEST(Cli, SimExamples) {
  auto r = cli(R"(sim generate --k 3 --events "1=0,2=1,3=0")");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r.out);
  EXPECT_EQ(j["final"]["block"], nlohmann::json::array({"010"}));
  r = cli("sim select --k 3 --fitness peak@010");
  ASSERT_EQ(r.code, 0) << r.err;
  j = json_of(r.out);
  EXPECT_EQ(j["final"]["survivors"], nlohmann::json::array({"010"}));
  r = cli(R"(sim identify --n 3 --pairs "0-1")");
  EXPECT_EQ(json_of(r.out)["final"], "0,1|2");
  r = cli(R"(sim create --n 3 --elements "1,1")");
  EXPECT_EQ(json_of(r.out)["final"], "{1}");
  r = cli(R"(sim twentyq --k 3 --answers "0,1,0")");
  EXPECT_EQ(json_of(r.out)["final"]["block"], nlohmann::json::array({"010"}));
  r = cli(R"(sim generate --k 3 --events "1=0,1=1")");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json_of(r.err)["error"], "AlreadySet");
  EXPECT_EQ(cli(R"(sim generate --k 3 --events "1=0,1=1" --overwrite)").code, 0);
}

TEST(Cli, FitnessFile) {
  const auto path = std::filesystem::temp_directory_path() / "partlogic_fitness.txt";
  std::ofstream(path) << "# scores\n00 1\n01 1\n10 4\n11 1\n";
  auto r = cli("sim select --k 2 --fitness '" + path.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r.out)["final"]["survivors"], nlohmann::json::array({"10"}));
  std::filesystem::remove(path);
  EXPECT_EQ(cli("sim select --k 2 --fitness /nonexistent/file").code, 2);
}

TEST(Cli, CompareExamples) {
  auto r = cli("compare --k 3 --target 010");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r.out)["agreement"], true);
  r = cli("compare --k 1 --target 1");
  EXPECT_EQ(json_of(r.out)["agreement"], true);
  r = cli("compare --k 3 --target 999");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(cli("compare --k 3 --target 010 --margin 0").code, 3);
}

TEST(Cli, ConfigFileAndFlagPrecedence) {
  const auto path = std::filesystem::temp_directory_path() / "partlogic_test.ini";
  std::ofstream(path) << "max-lattice-n = 2\n";
  EXPECT_EQ(cli("--config '" + path.string() + "' lattice --n 3").code, 4);
  EXPECT_EQ(cli("--config '" + path.string() + "' --max-lattice-n 3 lattice --n 3").code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("eval").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

}  // namespace
