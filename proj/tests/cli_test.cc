// Copyright 2026 The Interp Authors.
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

#include "interp/cli.h"

#include <filesystem>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "interp/io.h"

namespace interp {
namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "interp");
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("interp_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& contents) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << contents;
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, BnQueryException) {
  const CliRun r = run({"bn-query", "2", "3", "5"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("expected interpolation count: 10"), std::string::npos);
  EXPECT_NE(r.out.find("no (exception)"), std::string::npos);
  EXPECT_NE(r.out.find("obstruction bound: 9"), std::string::npos);
}

TEST_F(CliTest, BnQueryJson) {
  const CliRun r = run({"--json", "bn-query", "0", "3", "4", "--characteristic", "2"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("nb_interpolation"), "fails");
  EXPECT_EQ(j.at("nb_char0"), "satisfies");
  EXPECT_EQ(run({"bn-query", "0", "3", "4", "--characteristic", "4"}).status, kExitUsage);
}

TEST_F(CliTest, Count) {
  EXPECT_EQ(run({"count", "--kind", "plane", "--degree", "3"}).out, "9\n");
  EXPECT_EQ(run({"count", "--kind", "plane", "--degree", "3", "--genus", "0"}).out, "8\n");
  EXPECT_EQ(run({"count", "--kind", "hypersurface", "--degree", "2", "--num-vars", "3"}).out,
            "9\n");
  EXPECT_EQ(run({"count", "--kind", "graph", "--degree", "3"}).out, "4\n");
  const CliRun bad_genus = run({"count", "--kind", "plane", "--degree", "3", "--genus", "2"});
  EXPECT_EQ(bad_genus.status, kExitDomainError);
  EXPECT_NE(bad_genus.err.find("genus 2"), std::string::npos);
  EXPECT_EQ(run({"count", "--kind", "sphere", "--degree", "3"}).status, kExitUsage);
}

TEST_F(CliTest, UsageErrorsNameTheFlag) {
  const CliRun r = run({"rs-encode", "--p", "100", "--message", "1", "--k", "1"});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("--p"), std::string::npos);
  EXPECT_EQ(run({}).status, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(run({"rs-encode", "--p", "101", "--message", "1", "--k", "3"}).status, kExitUsage);
  EXPECT_EQ(run({"--help"}).status, kExitOk);
}

TEST_F(CliTest, FitFromFile) {
  const std::string pts = write("pts.csv", "# field=rational\n1,0\n2,0\n3,0\n0,1\n0,2\n");
  const CliRun r = run({"fit", "--points", pts, "--basis", "conic", "--out", path("fit.json")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("kernel dimension 1"), std::string::npos);
  EXPECT_NE(r.out.find("curve 1: x*y"), std::string::npos);
  std::ifstream in(path("fit.json"));
  const Json j = Json::parse(in);
  EXPECT_EQ(j.at("kernel_dim"), 1);
  EXPECT_EQ(polynomial_from_json(j.at("curves")[0], Field::rational()).to_string(), "x*y");

  const CliRun js = run({"--json", "fit", pts, "--basis", "plane", "--degree", "2"});
  EXPECT_EQ(Json::parse(js.out).at("design_rank"), 5);
}

TEST_F(CliTest, FitRejectsMalformedFile) {
  const std::string pts = write("bad.csv", "1,2\n");
  EXPECT_EQ(run({"fit", pts, "--basis", "conic"}).status, kExitDomainError);
  const std::string wrong_dim = write("dim.csv", "# field=rational\n1,2,3\n");
  EXPECT_EQ(run({"fit", wrong_dim, "--basis", "conic"}).status, kExitDomainError);
  EXPECT_EQ(run({"fit", path("missing.csv"), "--basis", "conic"}).status, kExitUsage);
}

TEST_F(CliTest, EncodeCorruptDecodePipeline) {
  const CliRun enc = run({"rs-encode", "--p", "101", "--message", "3,1,4,1", "--k", "2", "--out",
                       path("cw.json")});
  ASSERT_EQ(enc.status, kExitOk) << enc.err;
  const Codeword sent = codeword_from_json(Json::parse(enc.out));
  EXPECT_EQ(sent.pairs.size(), 6u);

  const CliRun cor = run({"rs-corrupt", path("cw.json"), "--index", "2", "--value", "0", "--out",
                       path("bad.json")});
  ASSERT_EQ(cor.status, kExitOk) << cor.err;

  const CliRun dec = run({"rs-decode", path("bad.json")});
  ASSERT_EQ(dec.status, kExitOk) << dec.err;
  EXPECT_NE(dec.out.find("message: 3,1,4,1"), std::string::npos);
  EXPECT_NE(dec.out.find("corrected index: 2"), std::string::npos);

  const CliRun dec_json = run({"--json", "rs-decode", path("bad.json")});
  const Json j = Json::parse(dec_json.out);
  EXPECT_EQ(j.at("status"), "decoded");
  EXPECT_EQ(j.at("message"), Json::parse(R"(["3","1","4","1"])"));

  const CliRun noop = run({"--json", "rs-corrupt", path("cw.json"), "--index", "0", "--value",
                        sent.pairs[0].second.to_string()});
  EXPECT_TRUE(Json::parse(noop.out).at("no_op").get<bool>());
  EXPECT_EQ(run({"rs-corrupt", path("cw.json"), "--index", "9", "--value", "0"}).status,
            kExitDomainError);
}

TEST_F(CliTest, DetectedErrorIsASuccessfulAnalysis) {
  run({"rs-encode", "--p", "101", "--message", "5,6", "--k", "1", "--out", path("cw.json")});
  run({"rs-corrupt", path("cw.json"), "--index", "0", "--value", "1", "--out", path("bad.json")});
  const CliRun dec = run({"rs-decode", path("bad.json")});
  EXPECT_EQ(dec.status, kExitOk);
  EXPECT_NE(dec.out.find("status: detected_error"), std::string::npos);
}

TEST_F(CliTest, MalformedCodewordFile) {
  EXPECT_EQ(run({"rs-decode", write("x.json", "{not json")}).status, kExitDomainError);
  EXPECT_EQ(run({"rs-decode", write("y.json", R"({"n":1,"k":0,"p":101,"pairs":[]})")}).status,
            kExitDomainError);
}

TEST_F(CliTest, RsDemoRecoversMessage) {
  const CliRun r = run({"rs-demo", "--p", "101", "--n", "4", "--seed", "1"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("error detected: yes"), std::string::npos);
  EXPECT_NE(r.out.find("recovered original: yes"), std::string::npos);
  const CliRun j = run({"--json", "rs-demo", "--p", "101", "--n", "4", "--seed", "1"});
  EXPECT_TRUE(Json::parse(j.out).at("recovered").get<bool>());
  EXPECT_EQ(run({"rs-demo", "--p", "5", "--n", "4"}).status, kExitDomainError);
}

TEST_F(CliTest, VerifyAndTable) {
  const CliRun v = run({"--json", "verify", "--suite", "conic", "--trials", "10"});
  ASSERT_EQ(v.status, kExitOk) << v.err;
  const SuiteReport rep = suite_report_from_json(Json::parse(v.out));
  EXPECT_EQ(rep.at_count.pass, 10u);
  EXPECT_EQ(rep.seed, kDefaultSeed);

  const CliRun small = run({"verify", "--suite", "plane", "--degree", "2", "--prime", "7"});
  EXPECT_EQ(small.status, kExitOk);
  EXPECT_NE(small.err.find("warning"), std::string::npos);

  const CliRun t = run({"bn-table", "--g-max", "1", "--r-max", "3", "--d-max", "2"});
  ASSERT_EQ(t.status, kExitOk);
  EXPECT_EQ(std::count(t.out.begin(), t.out.end(), '\n'), 1 + 2 * 2 * 2);
  const CliRun tf = run({"bn-table", "--g-max", "6", "--r-max", "5", "--d-max", "10", "--out",
                      path("t.csv")});
  EXPECT_EQ(tf.out, "wrote 280 rows to " + path("t.csv") + "\n");
}

TEST_F(CliTest, DeterministicOutput) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"rs-demo", "--p", "1000003", "--n", "6", "--seed", "7"},
        std::vector<std::string>{"--json", "verify", "--suite", "graph(2)", "--prime", "11",
                                 "--trials", "30", "--seed", "3"}}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.status, b.status);
  }
}

}  // namespace
}  // namespace interp
