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

#include "hankelmatch/eval.h"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "hankelmatch/synthetic.h"
#include "test_util.h"

namespace hankelmatch {
namespace {

using testing::error_code_of;

WeightedAutomaton uniform_model(const Alphabet& alphabet) {
  const Eigen::VectorXd one = Eigen::VectorXd::Ones(1);
  const double w = 1.0 / static_cast<double>(alphabet.size() + 1);
  std::vector<Eigen::MatrixXd> ops(alphabet.size(), Eigen::MatrixXd::Constant(1, 1, w));
  return WeightedAutomaton(alphabet, one, one, ops);
}

WeightedAutomaton ab_chain() {
  Eigen::VectorXd a0 = Eigen::VectorXd::Zero(3), ainf = Eigen::VectorXd::Zero(3);
  a0(0) = 1.0;
  ainf(2) = 1.0;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3), b = Eigen::MatrixXd::Zero(3, 3);
  a(0, 1) = 1.0;
  b(1, 2) = 1.0;
  return WeightedAutomaton(Alphabet({"a", "b"}), a0, ainf, {a, b});
}

TEST(BitsPerCharacter, UniformModelIsLogOfEvents) {
  const Alphabet a = testing::abc();
  const Dataset d = testing::dataset_of(a, {"abc", "", "ccab", "abc"});
  const MetricReport r = bits_per_character(uniform_model(a), d, 3);
  EXPECT_EQ(r.value, 2.0);
  EXPECT_EQ(r.events, 4u + 1u + 5u + 4u);
  EXPECT_EQ(r.degenerate_events, 0u);
}

TEST(BitsPerCharacter, PerfectPredictorIsZero) {
  const WeightedAutomaton wa = ab_chain();
  const Dataset d = testing::dataset_of(wa.alphabet(), {"ab", "ab"});
  EXPECT_EQ(bits_per_character(wa, d, SIZE_MAX).value, 0.0);
  EXPECT_EQ(rank_score(wa, d, SIZE_MAX).value, 1.0);
}

TEST(BitsPerCharacter, FiniteOnAdversarialModels) {
  const WeightedAutomaton chain = ab_chain();
  const Dataset d = testing::dataset_of(chain.alphabet(), {"ba", "aab", "", "bbbb"});
  const MetricReport r = bits_per_character(chain, d, SIZE_MAX);
  EXPECT_TRUE(std::isfinite(r.value));
  EXPECT_GT(r.degenerate_events, 0u);
  // A zero-probability event costs -log2(floor).
  EXPECT_LE(r.value, -std::log2(kProbabilityFloor) + 1e-9);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const WeightedAutomaton wa = testing::random_wa(3, 2, seed);
    const Dataset rd = sample_corpus(random_pfa(2, 2, 0.3, seed), 20, 10, seed);
    EXPECT_TRUE(std::isfinite(bits_per_character(wa, rd, 2).value));
    EXPECT_TRUE(std::isfinite(bits_per_character(wa, rd, SIZE_MAX).value));
  }
}

TEST(BitsPerCharacter, WindowedEqualsIncrementalWhenWide) {
  const WeightedAutomaton wa = random_pfa(3, 2, 0.2, 5);
  const Dataset d = sample_corpus(wa, 50, 12, 6);
  const double incremental = bits_per_character(wa, d, SIZE_MAX).value;
  // A window equal to the longest sequence never truncates, but is computed
  // from scratch only for longer sequences; here both paths coincide.
  EXPECT_NEAR(bits_per_character(wa, d, 1000).value, incremental, 1e-12);
  const double short_window = bits_per_character(wa, d, 1).value;
  EXPECT_TRUE(std::isfinite(short_window));
}

TEST(BitsPerCharacter, WindowTruncatesContext) {
  const WeightedAutomaton wa = ab_chain();
  const Dataset d = testing::dataset_of(wa.alphabet(), {"ab"});
  // With window 0 every prediction sees the start state.
  const MetricReport r = bits_per_character(wa, d, 0);
  EXPECT_GT(r.value, 0.0);
  EXPECT_TRUE(std::isfinite(r.value));
}

TEST(BitsPerCharacter, Errors) {
  const WeightedAutomaton wa = ab_chain();
  const Dataset other = testing::dataset_of(testing::abc(), {"ab"});
  EXPECT_EQ(error_code_of([&] { bits_per_character(wa, other, 1); }),
            ErrorCode::kAlphabetMismatch);
  DatasetBuilder empty(DatasetFormat::kChar, wa.alphabet());
  EXPECT_EQ(error_code_of([&] { bits_per_character(wa, empty.build(), 1); }),
            ErrorCode::kEmptyInput);
}

TEST(RankScore, UniformTiesFavourLowerIds) {
  const Alphabet a = testing::abc();
  const Dataset d = testing::dataset_of(a, {"a", "c"});
  // "a": a is rank 1, stop rank 4. "c": c rank 3, stop rank 4.
  const MetricReport r = rank_score(uniform_model(a), d, 5);
  const double expected = (1.0 + 1.0 / std::log2(5.0) + 1.0 / std::log2(4.0) +
                           1.0 / std::log2(5.0)) / 4.0;
  EXPECT_NEAR(r.value, expected, 1e-15);
  EXPECT_NEAR(rank_score(uniform_model(a), d, 5, 1).value, 0.25, 1e-15);
}

TEST(Probe, DiagonalHasNoGap) {
  ProbeConfig config;
  config.generator = ProbeGenerator::kDiagonal;
  config.diagonal_size = 7;
  const WmpProbeReport r = wmp_probe(config, 5, 1);
  ASSERT_EQ(r.trials.size(), 5u);
  for (const auto& t : r.trials) {
    EXPECT_EQ(t.structural_rank, 7u);
    EXPECT_EQ(t.numeric_full, 7u);
    EXPECT_EQ(t.numeric_sub, 7u);
    EXPECT_TRUE(t.wmp_spot_check);
  }
  EXPECT_EQ(r.max_gap, 0u);
}

TEST(Probe, RankOrderingHolds) {
  for (auto gen : {ProbeGenerator::kRandomSequences, ProbeGenerator::kRandomAutomaton}) {
    ProbeConfig config;
    config.generator = gen;
    const WmpProbeReport r = wmp_probe(config, 8, 3);
    for (const auto& t : r.trials) {
      EXPECT_LE(t.numeric_sub, t.numeric_full);
      EXPECT_LE(t.numeric_full, t.structural_rank);
    }
  }
}

TEST(Probe, ReportFormat) {
  const WmpProbeReport r = summarize_probe({{3, 3, 3, 2, 2, true}, {4, 4, 4, 4, 3, false}});
  EXPECT_DOUBLE_EQ(r.mean_gap, 0.5);
  EXPECT_EQ(r.max_gap, 1u);
  EXPECT_DOUBLE_EQ(r.mean_sub_gap, 0.5);
  std::ostringstream out;
  r.write(out);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("TRIAL 0 struct 3 num_full 2 num_sub 2", 0), 0u);
  EXPECT_NE(text.find("\nTRIAL 1 struct 4 num_full 4 num_sub 3"), std::string::npos);
  EXPECT_NE(text.find("\nSUMMARY trials 2 mean_gap 0.5 max_gap 1"), std::string::npos);
}

TEST(Probe, GeneratorNames) {
  EXPECT_EQ(parse_probe_generator("random-wa"), ProbeGenerator::kRandomAutomaton);
  EXPECT_EQ(error_code_of([] { parse_probe_generator("moon"); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace hankelmatch
