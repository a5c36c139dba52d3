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

#include "hankelmatch/sequence.h"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_util.h"

namespace hankelmatch {
namespace {

using testing::abc;
using testing::seq;

TEST(CanonicalOrder, LongerFirstThenLexicographic) {
  const Alphabet a = abc();
  EXPECT_TRUE(canonical_less(seq(a, "aab"), seq(a, "ab")));
  EXPECT_TRUE(canonical_less(seq(a, "ab"), seq(a, "ba")));
  EXPECT_TRUE(canonical_less(seq(a, "a"), seq(a, "")));
  EXPECT_FALSE(canonical_less(seq(a, "ab"), seq(a, "ab")));
}

TEST(ShortlexOrder, ShorterFirst) {
  const Alphabet a = abc();
  EXPECT_TRUE(shortlex_less(seq(a, ""), seq(a, "a")));
  EXPECT_TRUE(shortlex_less(seq(a, "cc"), seq(a, "aaa")));
  EXPECT_TRUE(shortlex_less(seq(a, "ab"), seq(a, "ac")));
}

TEST(SequenceHash, ViewAndVectorAgree) {
  const Sequence s{1, 2, 3};
  SequenceHash h;
  EXPECT_EQ(h(s), h(SequenceView(s)));
  SequenceMap<int> m;
  m.emplace(s, 4);
  const Symbol raw[] = {1, 2, 3};
  EXPECT_EQ(m.find(SequenceView(raw))->second, 4);
}

TEST(CutIndex, Figure1Tables) {
  const auto f = testing::figure1_target();
  const CutIndex index = build_cut_index(f.support());
  EXPECT_EQ(index.prefixes.size(), 9u);
  EXPECT_EQ(index.suffixes.size(), 9u);
  EXPECT_EQ(index.num_strings(), 7u);
  // eps is the last id on both sides.
  EXPECT_EQ(index.prefixes.length(8), 0u);
  EXPECT_EQ(index.suffixes.length(8), 0u);
  const Alphabet a = abc();
  EXPECT_EQ(index.prefixes.sequence(0), seq(a, "aab"));
  EXPECT_TRUE(index.prefixes.find(seq(a, "aa")).has_value());
  EXPECT_FALSE(index.prefixes.find(seq(a, "ab")).has_value());
  EXPECT_TRUE(index.suffixes.find(seq(a, "ab")).has_value());
  EXPECT_FALSE(index.suffixes.find(seq(a, "aa")).has_value());
}

TEST(CutIndex, EmptySupport) {
  const CutIndex index = build_cut_index({});
  EXPECT_EQ(index.num_strings(), 0u);
  EXPECT_EQ(index.prefixes.size(), 0u);
}

TEST(CutIndex, RandomSupportsMatchBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto support = testing::random_support(rng, 3, 25, 7);
    const CutIndex index = build_cut_index(support);

    std::set<Sequence> prefixes;
    std::set<Sequence> suffixes;
    for (const auto& w : support) {
      for (std::size_t i = 0; i <= w.size(); ++i) {
        prefixes.emplace(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        suffixes.emplace(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
      }
    }
    std::vector<Sequence> expect_p(prefixes.begin(), prefixes.end());
    std::vector<Sequence> expect_s(suffixes.begin(), suffixes.end());
    auto less = [](const Sequence& x, const Sequence& y) { return canonical_less(x, y); };
    std::sort(expect_p.begin(), expect_p.end(), less);
    std::sort(expect_s.begin(), expect_s.end(), less);
    ASSERT_EQ(index.prefixes.materialize(), expect_p);
    ASSERT_EQ(index.suffixes.materialize(), expect_s);

    for (std::size_t k = 0; k < support.size(); ++k) {
      const auto ps = index.prefixes_of(k);
      const auto ss = index.suffixes_of(k);
      ASSERT_EQ(ps.size(), support[k].size() + 1);
      for (std::size_t i = 0; i < ps.size(); ++i) {
        Sequence joined = index.prefixes.sequence(ps[i]);
        const Sequence tail = index.suffixes.sequence(ss[i]);
        ASSERT_EQ(joined.size(), i);
        joined.insert(joined.end(), tail.begin(), tail.end());
        ASSERT_EQ(joined, support[k]);
      }
    }
  }
}

}  // namespace
}  // namespace hankelmatch
