// Copyright 2026 The stabrank Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "stabrank/cli.hpp"

using namespace stabrank;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "stabrank");
  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
  return (std::filesystem::temp_directory_path() / ("stabrank_cli_test_" + name)).string();
}

void write_file(const std::string &path, const std::string &text) { std::ofstream(path) << text; }

}  // namespace

TEST(Cli, DecomposeTTenGivesEighteenTerms) {
  Result r = run({"decompose", "t", "-m", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json j = r.parsed();
  EXPECT_EQ(j.at("n"), 10);
  EXPECT_EQ(j.at("terms").size(), 18u);
  EXPECT_EQ(j.at("target").at("kind"), "t");
}

TEST(Cli, DecomposeThenVerifyRoundTrips) {
  const std::vector<std::vector<std::string>> cases = {
      {"t", "-m", "7"},
      {"f", "-m", "4"},
      {"cat", "-m", "6", "--family", "r", "--theta", "0.9"},
      {"rz", "-m", "5", "--theta", "-0.4"},
      {"code", "--rm", "1", "3"},
      {"symmetric", "-m", "4", "--amplitudes", "0.2,0.1,0.7,-0.3"},
      {"t", "--ell", "2"},
  };
  int i = 0;
  for (auto args : cases) {
    std::string path = temp_path("rt" + std::to_string(i++) + ".json");
    args.insert(args.begin(), "decompose");
    args.push_back("-o");
    args.push_back(path);
    Result d = run(args);
    ASSERT_EQ(d.code, kExitOk) << d.out << d.err;
    Result v = run({"verify", path});
    EXPECT_EQ(v.code, kExitOk) << v.out;
    EXPECT_NEAR(v.parsed().at("fidelity").get<double>(), 1.0, 1e-9);
  }
}

TEST(Cli, VerifyReportsCorruptedFile) {
  std::string path = temp_path("corrupt.json");
  ASSERT_EQ(run({"decompose", "t", "-m", "6", "-o", path}).code, kExitOk);
  json j = json::parse(std::ifstream(path));
  j["terms"][1]["coeff"]["re"] = j["terms"][1]["coeff"]["re"].get<double>() + 0.5;
  std::ofstream(path) << j.dump();
  Result v = run({"verify", path});
  EXPECT_EQ(v.code, kExitVerification);
  EXPECT_LT(v.parsed().at("fidelity").get<double>(), 1.0 - 1e-6);
  EXPECT_TRUE(v.parsed().contains("error"));
}

TEST(Cli, VerifyAgainstDenseFile) {
  std::string path = temp_path("one.json");
  ASSERT_EQ(run({"decompose", "t", "-m", "1", "-o", path}).code, kExitOk);
  std::string amps = temp_path("amps.json");
  write_file(amps, R"({"amplitudes": [[0.7071067811865476, 0], [0.5, 0.5]]})");
  Result v = run({"verify", path, "--against", "dense-file", "--dense", amps});
  EXPECT_EQ(v.code, kExitOk) << v.out;
  write_file(amps, R"({"amplitudes": [[1, 0], [0, 0]]})");
  EXPECT_EQ(run({"verify", path, "--against", "dense-file", "--dense", amps}).code, kExitVerification);
}

TEST(Cli, SimulateAmplitudeAndProbability) {
  std::string circ = temp_path("bell.txt");
  write_file(circ, "qubits 2\n# bell pair\nH 0\nCX 0 1\nT 1\n");
  Result a = run({"simulate", "amp", "--circuit", circ, "--bitstring", "00", "--dense-cap", "10"});
  ASSERT_EQ(a.code, kExitOk) << a.out;
  EXPECT_NEAR(a.parsed().at("amplitude").at("re").get<double>(), 1 / std::sqrt(2.0), 1e-12);
  Result p = run({"simulate", "prob", "--circuit", circ, "--bitstring", "1", "--marginal", "0", "--dense-cap", "10"});
  ASSERT_EQ(p.code, kExitOk) << p.out;
  EXPECT_NEAR(p.parsed().at("probability").get<double>(), 0.5, 1e-12);
  Result c = run({"simulate", "cost", "--circuit", circ});
  EXPECT_EQ(c.parsed().at("cost").at("m"), 1);
}

TEST(Cli, SimulateRejectsBadCircuitFile) {
  std::string circ = temp_path("bad.txt");
  write_file(circ, "qubits 2\nFOO 0\n");
  Result r = run({"simulate", "amp", "--circuit", circ, "--bitstring", "00"});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_EQ(r.parsed().at("error").at("type"), "io");
}

TEST(Cli, SimulateRefusesHugeMarginal) {
  std::string circ = temp_path("wide.txt");
  write_file(circ, "qubits 23\nH 0\n");
  Result r = run({"simulate", "prob", "--circuit", circ, "--bitstring", "0", "--marginal", "0"});
  EXPECT_EQ(r.code, kExitCap);
  EXPECT_NE(r.out.find("use smaller marginal"), std::string::npos);
}

TEST(Cli, SpectrumAndCertificates) {
  Result s = run({"spectrum", "--state", "cat5", "--zero-count"});
  ASSERT_EQ(s.code, kExitOk);
  EXPECT_EQ(s.parsed().at("zero_count"), 782);
  Result c5 = run({"certify", "cat5"});
  EXPECT_EQ(c5.code, kExitOk);
  EXPECT_TRUE(c5.parsed().at("pass").get<bool>());
  Result c3 = run({"certify", "cat3"});
  EXPECT_EQ(c3.code, kExitOk);
}

TEST(Cli, SpectrumOfDecompositionFile) {
  std::string path = temp_path("cat3.json");
  ASSERT_EQ(run({"decompose", "cat", "-m", "3", "-o", path}).code, kExitOk);
  Result s = run({"spectrum", "--state", "file", "--file", path, "--summary"});
  ASSERT_EQ(s.code, kExitOk) << s.out;
  EXPECT_FALSE(s.parsed().contains("values"));
  EXPECT_TRUE(s.parsed().contains("abs_buckets"));
}

TEST(Cli, BoundFromGeneratorFile) {
  std::string gen = temp_path("rep6.txt");
  write_file(gen, "111111\n");
  Result b = run({"bound", "--generator", gen, "--chi", "3"});
  ASSERT_EQ(b.code, kExitOk) << b.out;
  EXPECT_NEAR(b.parsed().at("bound").get<double>(), std::log2(3.0) / 4, 1e-12);
}

TEST(Cli, Table1Passes) {
  Result t = run({"table1"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_EQ(t.parsed().at("rows").size(), 7u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"decompose", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"decompose", "t"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", temp_path("missing.json")}).code, kExitIo);
  std::string path = temp_path("big.json");
  ASSERT_EQ(run({"decompose", "t", "-m", "26", "-o", path}).code, kExitOk);
  Result big = run({"verify", path});
  EXPECT_EQ(big.code, kExitCap);
  EXPECT_EQ(big.parsed().at("error").at("code"), kExitCap);
  EXPECT_EQ(run({"--threads", "2", "table1"}).code, kExitOk);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}
