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

#include "hankelmatch/basis.h"

#include <set>

#include <gtest/gtest.h>

#include "hankelmatch/synthetic.h"
#include "test_util.h"

namespace hankelmatch {
namespace {

std::set<Sequence> as_set(const std::vector<Sequence>& v) { return {v.begin(), v.end()}; }

TEST(RandomCuts, DeterministicAndObserved) {
  const TargetFunction f = empirical_probability(random_corpus({3, 6.0, 0.5, 300}, 1));
  const auto observed = observed_prefixes_suffixes(f);
  const std::set<Sequence> all_p = as_set(observed.prefixes);
  const std::set<Sequence> all_s = as_set(observed.suffixes);
  const Basis b1 = random_cuts_basis(f, 20, 7);
  const Basis b2 = random_cuts_basis(f, 20, 7);
  EXPECT_EQ(b1, b2);
  EXPECT_GE(b1.rows() + b1.cols(), 40u);
  for (const auto& p : b1.prefixes()) EXPECT_TRUE(all_p.count(p));
  for (const auto& s : b1.suffixes()) EXPECT_TRUE(all_s.count(s));
  EXPECT_NE(random_cuts_basis(f, 20, 8), b1);
  const Basis uniform = random_cuts_basis(f, 20, 7, CutSampling::kUniform);
  EXPECT_GE(uniform.rows() + uniform.cols(), 40u);
}

TEST(RandomCuts, StopsWhenCutsRunOut) {
  const TargetFunction f = testing::figure1_target();
  const Basis b = random_cuts_basis(f, 100, 1);
  EXPECT_EQ(b.rows(), 9u);
  EXPECT_EQ(b.cols(), 9u);
}

TEST(LengthBasis, Figure1) {
  const TargetFunction f = testing::figure1_target();
  const Basis zero = length_basis(f, 0);
  EXPECT_EQ(zero.rows(), 1u);
  EXPECT_EQ(zero.cols(), 1u);
  const Alphabet a = testing::abc();
  const Basis one = length_basis(f, 1);
  const std::set<Sequence> short_words = {a.parse(""), a.parse("a"), a.parse("b"),
                                          a.parse("c")};
  EXPECT_EQ(as_set(one.prefixes()), short_words);
  EXPECT_EQ(as_set(one.suffixes()), short_words);
}

TEST(HighNormBasis, Figure1PicksEmptyFirst) {
  const TargetFunction f = testing::figure1_target();
  const Basis one = high_norm_basis(f, 1);
  ASSERT_EQ(one.rows(), 1u);
  EXPECT_TRUE(one.prefixes()[0].empty());
  EXPECT_TRUE(one.suffixes()[0].empty());
  const Basis all = high_norm_basis(f, 50);
  EXPECT_EQ(all.rows(), 9u);
  EXPECT_EQ(all.cols(), 9u);
}

TEST(HighNormBasis, TiesGoToCanonicalOrder) {
  const Alphabet a({"a", "b"});
  // Rows eps and "a" both have norm 1; "a" precedes eps canonically.
  const TargetFunction f(a, {{a.parse("a"), 1.0}});
  const Basis b = high_norm_basis(f, 1);
  EXPECT_EQ(b.prefixes()[0], a.parse("a"));
  EXPECT_EQ(b.suffixes()[0], a.parse("a"));
}

TEST(HighNormBasis, HeavierRowWins) {
  const Alphabet a({"a", "b"});
  const TargetFunction f(a, {{a.parse("ab"), 3.0}, {a.parse("bb"), 1.0}, {a.parse("b"), 2.0}});
  // Row norms: eps 14, a 9, ab 9, b 5, bb 1.
  const Basis b = high_norm_basis(f, 2);
  EXPECT_EQ(as_set(b.prefixes()), (std::set<Sequence>{a.parse(""), a.parse("ab")}));
}

}  // namespace
}  // namespace hankelmatch
