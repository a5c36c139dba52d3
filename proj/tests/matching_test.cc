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

#include "hankelmatch/matching.h"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "hankelmatch/synthetic.h"
#include "test_util.h"

namespace hankelmatch {
namespace {

using testing::error_code_of;

std::set<Sequence> as_set(const std::vector<Sequence>& v) { return {v.begin(), v.end()}; }

TEST(Graph, Figure1Shape) {
  const PrefixSuffixGraph g = build_graph(testing::figure1_target());
  EXPECT_EQ(g.num_prefixes(), 9u);
  EXPECT_EQ(g.num_suffixes(), 9u);
  EXPECT_EQ(g.num_edges(), 18u);
  ASSERT_TRUE(g.has_origins());
  for (std::uint32_t p = 0; p < g.num_prefixes(); ++p) {
    for (std::size_t e = g.edge_begin(p); e < g.edge_end(p); ++e) {
      Sequence joined = g.prefix(p);
      const Sequence s = g.suffix(g.edge_suffix(e));
      joined.insert(joined.end(), s.begin(), s.end());
      const EdgeOrigin o = g.origin(e);
      EXPECT_EQ(joined, testing::figure1_target().support()[o.string_id]);
      EXPECT_EQ(o.cut, g.prefix(p).size());
    }
  }
}

TEST(Graph, EmptySupportRejected) {
  EXPECT_EQ(error_code_of([] { build_graph(TargetFunction(testing::abc(), {})); }),
            ErrorCode::kEmptyInput);
}

TEST(Matching, Figure1BothEngines) {
  const PrefixSuffixGraph g = build_graph(testing::figure1_target());
  for (const Matching& m : {augmenting_path_matching(g), hankel_fast_matching(g)}) {
    EXPECT_TRUE(is_valid_matching(g, m));
    EXPECT_EQ(m.size(), 5u);
    EXPECT_FALSE(has_augmenting_path(g, m));
  }
  EXPECT_EQ(structural_rank(g), 5u);
}

TEST(Matching, Figure1BasisMatchesPaper) {
  const PrefixSuffixGraph g = build_graph(testing::figure1_target());
  const Basis b = matching_basis(g, augmenting_path_matching(g));
  const Alphabet a = testing::abc();
  auto parse_all = [&](std::initializer_list<const char*> words) {
    std::set<Sequence> out;
    for (const char* w : words) out.insert(a.parse(w));
    return out;
  };
  EXPECT_EQ(as_set(b.prefixes()), parse_all({"", "a", "aa", "aab", "c"}));
  EXPECT_EQ(as_set(b.suffixes()), parse_all({"", "b", "ab", "aab", "a"}));
}

TEST(Matching, AgreesWithBruteForceOnSmallGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t np = 1 + rng() % 8;
    const std::size_t ns = 1 + rng() % 8;
    testing::EdgeList edges;
    for (std::uint32_t p = 0; p < np; ++p) {
      for (std::uint32_t s = 0; s < ns; ++s) {
        if (rng() % 3 == 0) edges.emplace_back(p, s);
      }
    }
    const auto g = PrefixSuffixGraph::from_edges(np, ns, edges);
    const Matching m = augmenting_path_matching(g);
    ASSERT_TRUE(is_valid_matching(g, m));
    ASSERT_EQ(m.size(), testing::brute_force_matching(np, ns, edges));
  }
}

TEST(Matching, FastEngineAgreesOnSupports) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto support = testing::random_support(rng, 1 + rng() % 3, 1 + rng() % 12, 4);
    const auto g = PrefixSuffixGraph::from_support(support);
    MatchingStats base_stats, fast_stats;
    const Matching base = augmenting_path_matching(g, &base_stats);
    const Matching fast = hankel_fast_matching(g, &fast_stats);
    ASSERT_TRUE(is_valid_matching(g, fast));
    ASSERT_EQ(base.size(), fast.size());
    ASSERT_FALSE(has_augmenting_path(g, fast));
    if (g.num_prefixes() <= 8 && g.num_suffixes() <= 8) {
      testing::EdgeList edges;
      for (std::uint32_t p = 0; p < g.num_prefixes(); ++p) {
        for (auto s : g.neighbors(p)) edges.emplace_back(p, s);
      }
      ASSERT_EQ(base.size(),
                testing::brute_force_matching(g.num_prefixes(), g.num_suffixes(), edges));
    }
  }
}

TEST(Matching, FastEngineAgreesOnCorpora) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Dataset d = random_corpus({4, 8.0, 0.5, 2000}, seed);
    const TargetFunction f = empirical_probability(d);
    const auto g = build_graph(f);
    MatchingStats stats;
    const Matching fast = hankel_fast_matching(g, &stats);
    EXPECT_EQ(fast.size(), augmenting_path_matching(g).size());
    EXPECT_GT(stats.shifted_additions, 0u);
    EXPECT_TRUE(is_valid_matching(g, fast));
  }
}

TEST(Matching, FastEngineNeedsOrigins) {
  const testing::EdgeList edges = {{0, 0}};
  const auto g = PrefixSuffixGraph::from_edges(1, 1, edges);
  EXPECT_EQ(error_code_of([&] { hankel_fast_matching(g); }), ErrorCode::kMissingOrigin);
}

TEST(Matching, WarmStartAndInvalidInitial) {
  const testing::EdgeList edges = {{0, 0}, {0, 1}, {1, 0}};
  const auto g = PrefixSuffixGraph::from_edges(2, 2, edges);
  Matching start = Matching::empty(g);
  start.match_of_prefix[0] = 0;
  start.match_of_suffix[0] = 0;
  EXPECT_EQ(augmenting_path_matching(g, start).size(), 2u);

  Matching bad = Matching::empty(g);
  bad.match_of_prefix[1] = 1;  // not an edge, and not mirrored
  EXPECT_EQ(error_code_of([&] { augmenting_path_matching(g, bad); }),
            ErrorCode::kInconsistentMatching);
  EXPECT_EQ(error_code_of([&] { matching_basis(g, bad); }), ErrorCode::kInconsistentMatching);
}

TEST(Matching, SingleStringAndEmptyString) {
  const std::vector<Sequence> only_eps = {Sequence{}};
  const auto g = PrefixSuffixGraph::from_support(only_eps);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(hankel_fast_matching(g).size(), 1u);
  // The |w|+1 cuts of a single string are pairwise disjoint edges.
  const std::vector<Sequence> one = {Sequence{0, 1, 0}};
  EXPECT_EQ(structural_rank(PrefixSuffixGraph::from_support(one)), 4u);
}

TEST(StructuralRank, PatternOverload) {
  const SparseMatrix m(3, 3, {{0, 0, 1.0}, {1, 0, 1.0}, {2, 0, 1.0}, {2, 2, 1.0}});
  EXPECT_EQ(structural_rank(m), 2u);
}

TEST(Graph, TextDump) {
  std::ostringstream out;
  write_graph(out, build_graph(testing::figure1_target()));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "GRAPH v1 9 9 18");
  std::size_t edges = 0;
  while (std::getline(in, line)) edges += line.rfind("E ", 0) == 0;
  EXPECT_EQ(edges, 18u);
}

}  // namespace
}  // namespace hankelmatch
