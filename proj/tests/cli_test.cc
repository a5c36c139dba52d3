// Copyright 2026 The hankelmatch Authors
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

#include "commands.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "hankelmatch/wfa.h"
#include "test_util.h"

namespace hankelmatch::cli {
namespace {

using testing::error_code_of;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("hankelmatch_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                 ->current_test_info()
                                                 ->name()));
    std::filesystem::create_directories(dir_);
    std::ofstream(path("fig1.txt")) << "\naab\nb\nbb\nc\nca\ncb\n";
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  RunConfig config(const std::string& sub) const {
    RunConfig cfg;
    cfg.subcommand = sub;
    cfg.inputs = {path("fig1.txt")};
    return cfg;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::filesystem::path dir_;
};

TEST(ParseStrategy, NamesAndMultiples) {
  EXPECT_EQ(parse_strategy("fast-matching").kind, Strategy::kFastMatching);
  const StrategySpec rc = parse_strategy("random-cuts:2.5");
  EXPECT_EQ(rc.kind, Strategy::kRandomCuts);
  EXPECT_DOUBLE_EQ(*rc.multiple, 2.5);
  EXPECT_EQ(error_code_of([] { parse_strategy("bogus"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_code_of([] { parse_strategy("matching:2"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_code_of([] { parse_strategy("random-cuts:x"); }), ErrorCode::kInvalidArgument);
}

TEST_F(CliTest, ValidationRunsFirst) {
  RunConfig cfg = config("train");
  cfg.out = path("m.wfa");
  cfg.svd = SvdKind::kRandomized;
  EXPECT_EQ(error_code_of([&] { cfg.validate(); }), ErrorCode::kInvalidArgument);
  cfg.svd = SvdKind::kDense;
  cfg.proj_dim = 4;
  EXPECT_EQ(error_code_of([&] { cfg.validate(); }), ErrorCode::kInvalidArgument);
  cfg.proj_dim.reset();
  cfg.strategies = {"length"};
  EXPECT_EQ(error_code_of([&] { cfg.validate(); }), ErrorCode::kInvalidArgument);
  cfg.strategies = {"matching", "full"};
  EXPECT_EQ(error_code_of([&] { cfg.validate(); }), ErrorCode::kInvalidArgument);
  cfg.strategies = {"matching"};
  cfg.validate();
}

TEST_F(CliTest, TrainFigure1) {
  RunConfig cfg = config("train");
  cfg.out = path("m.wfa");
  cfg.states = 5;
  cfg.hankel_out = path("h.txt");
  cfg.graph_out = path("g.txt");
  std::ostringstream out;
  ASSERT_EQ(cmd_train(cfg, out), 0);
  const std::string report = out.str();
  EXPECT_NE(report.find("block 5x5\n"), std::string::npos);
  EXPECT_NE(report.find("struct_rank 5\n"), std::string::npos);
  EXPECT_NE(report.find("num_rank 5\n"), std::string::npos);
  EXPECT_NE(report.find("states 5\n"), std::string::npos);
  EXPECT_EQ(load_model(cfg.out).num_states(), 5u);
  EXPECT_EQ(slurp(cfg.hankel_out).rfind("HANKEL v1 5 5 ", 0), 0u);
  EXPECT_EQ(slurp(cfg.graph_out).rfind("GRAPH v1 9 9 18", 0), 0u);
}

TEST_F(CliTest, LengthZeroForcesOneState) {
  RunConfig cfg = config("train");
  cfg.out = path("m.wfa");
  cfg.strategies = {"length"};
  cfg.max_len = 0;
  cfg.states = 4;
  std::ostringstream out;
  ASSERT_EQ(cmd_train(cfg, out), 0);
  EXPECT_NE(out.str().find("block 1x1\n"), std::string::npos);
  EXPECT_NE(out.str().find("states 1\n"), std::string::npos);
}

TEST_F(CliTest, RandomCutsIsReproducible) {
  RunConfig cfg = config("train");
  cfg.strategies = {"random-cuts"};
  cfg.size = 5;
  cfg.seed = 7;
  std::ostringstream out;
  cfg.out = path("a.wfa");
  ASSERT_EQ(cmd_train(cfg, out), 0);
  cfg.out = path("b.wfa");
  ASSERT_EQ(cmd_train(cfg, out), 0);
  EXPECT_EQ(slurp(path("a.wfa")), slurp(path("b.wfa")));
}

TEST_F(CliTest, RandomizedSvd) {
  RunConfig cfg = config("train");
  cfg.out = path("m.wfa");
  cfg.strategies = {"full"};
  cfg.svd = SvdKind::kRandomized;
  cfg.proj_dim = 8;
  std::ostringstream out;
  ASSERT_EQ(cmd_train(cfg, out), 0);
  EXPECT_NE(out.str().find("states 5\n"), std::string::npos);
}

TEST_F(CliTest, TrainErrorsNameTheStage) {
  RunConfig cfg = config("train");
  cfg.inputs = {path("missing.txt")};
  cfg.out = path("m.wfa");
  std::ostringstream out;
  try {
    cmd_train(cfg, out);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
    EXPECT_EQ(std::string(e.what()).rfind("load: ", 0), 0u);
  }
}

TEST_F(CliTest, EvalMetrics) {
  RunConfig train = config("train");
  train.out = path("m.wfa");
  std::ostringstream sink;
  ASSERT_EQ(cmd_train(train, sink), 0);

  RunConfig cfg = config("eval");
  cfg.model = train.out;
  std::ostringstream out;
  ASSERT_EQ(cmd_eval(cfg, out), 0);
  std::istringstream in(out.str());
  std::string metric, name, value_key, events_key;
  double value = 0.0;
  std::size_t events = 0;
  in >> metric >> name >> value_key >> value >> events_key >> events;
  EXPECT_EQ(name, "bpc");
  EXPECT_GT(value, 0.0);
  EXPECT_TRUE(std::isfinite(value));
  EXPECT_EQ(events, 18u);

  cfg.metric = Metric::kRank;
  std::ostringstream rank;
  ASSERT_EQ(cmd_eval(cfg, rank), 0);
  EXPECT_EQ(rank.str().rfind("metric rank value ", 0), 0u);

  std::ofstream(path("other.txt")) << "xyz\n";
  cfg.eval_input = path("other.txt");
  EXPECT_EQ(error_code_of([&] { cmd_eval(cfg, out); }), ErrorCode::kAlphabetMismatch);
}

TEST_F(CliTest, CompareFigure1) {
  RunConfig cfg = config("compare");
  cfg.strategies = {"full", "matching"};
  cfg.csv = path("t.csv");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_compare(cfg, out, err), 0);
  EXPECT_TRUE(err.str().empty());
  std::istringstream csv(slurp(cfg.csv));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "strategy,size_p,size_s,struct_rank,num_rank,sel_sec,svd_sec,recover_sec,bpc");
  std::getline(csv, line);
  EXPECT_EQ(line.rfind("full,9,9,5,5,", 0), 0u);
  std::getline(csv, line);
  EXPECT_EQ(line.rfind("matching,5,5,5,5,", 0), 0u);
}

TEST_F(CliTest, CompareSurvivesFailingRow) {
  // No empty string in this corpus, so the 1x1 length-0 block is zero.
  std::ofstream(path("noeps.txt")) << "ab\nba\n";
  RunConfig cfg = config("compare");
  cfg.inputs = {path("noeps.txt")};
  cfg.strategies = {"length", "matching"};
  cfg.max_len = 0;
  cfg.csv = path("t.csv");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_compare(cfg, out, err), 0);
  EXPECT_NE(err.str().find("row length: error[E_RANK]"), std::string::npos);
  EXPECT_NE(out.str().find("failed"), std::string::npos);
  EXPECT_NE(slurp(cfg.csv).find("\nmatching,"), std::string::npos);
}

TEST_F(CliTest, CompareSingleRowAndMultiples) {
  RunConfig cfg = config("compare");
  cfg.strategies = {"random-cuts:1"};
  std::ostringstream out, err;
  ASSERT_EQ(cmd_compare(cfg, out, err), 0);
  std::size_t lines = 0;
  for (char c : out.str()) lines += c == '\n';
  EXPECT_EQ(lines, 2u);
}

TEST_F(CliTest, BenchMatching) {
  RunConfig cfg;
  cfg.subcommand = "bench-matching";
  cfg.alphabet_sizes = {2};
  cfg.mean_lengths = {5};
  cfg.counts = {1, 200};
  cfg.repetitions = 2;
  cfg.csv = path("bench.csv");
  std::ostringstream out;
  ASSERT_EQ(cmd_bench_matching(cfg, out), 0);
  const std::string text = out.str();
  EXPECT_NE(text.find("count 1 reps 2"), std::string::npos);
  EXPECT_EQ(text.find("equal no"), std::string::npos);
  EXPECT_NE(text.find("SUMMARY grid_points 2"), std::string::npos);
  EXPECT_NE(text.find("all_equal yes"), std::string::npos);
}

TEST_F(CliTest, ProbeWmp) {
  RunConfig cfg;
  cfg.subcommand = "probe-wmp";
  cfg.generator = "diagonal";
  cfg.trials = 3;
  cfg.size = 4;
  std::ostringstream out;
  ASSERT_EQ(cmd_probe_wmp(cfg, out), 0);
  EXPECT_EQ(out.str().rfind("TRIAL 0 struct 4 num_full 4 num_sub 4", 0), 0u);
  EXPECT_NE(out.str().find("SUMMARY trials 3 mean_gap 0 max_gap 0"), std::string::npos);
}

}  // namespace
}  // namespace hankelmatch::cli
