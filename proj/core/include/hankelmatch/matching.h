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

// Prefix-suffix bipartite graphs and maximum matching.
//
// The graph has one left vertex per distinct prefix of the support and one
// right vertex per distinct suffix; prefix p and suffix s are adjacent iff
// ps is in the support. Its maximum matching cardinality is the structural
// rank of the full Hankel block, and the matched vertices form a square
// sub-block of full structural rank.
//
// Two engines are provided. augmenting_path_matching is the textbook
// depth-first augmenting path search, started from every prefix in
// canonical (longest first) order. hankel_fast_matching runs the same
// search but, after each augmentation, greedily matches the "shifted" cuts
// of every string whose cut entered the matching: if (w[0,i), w[i,|w|)) was
// added, each (w[0,j), w[j,|w|)) with j < i is an edge too, and is matched
// when both of its endpoints are still free.

#ifndef HANKELMATCH_MATCHING_H_
#define HANKELMATCH_MATCHING_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hankelmatch/corpus.h"
#include "hankelmatch/hankel.h"
#include "hankelmatch/sequence.h"

namespace hankelmatch {

struct EdgeOrigin {
  std::uint32_t string_id;  // index into the target function's support
  std::uint32_t cut;        // prefix length

  friend bool operator==(const EdgeOrigin&, const EdgeOrigin&) = default;
};

class PrefixSuffixGraph {
 public:
  // Graph of a support, with sequence tables and per-edge origins.
  static PrefixSuffixGraph from_support(std::span<const Sequence> support);
  // Bare bipartite graph, no sequences and no origins.
  static PrefixSuffixGraph from_edges(
      std::size_t num_prefixes, std::size_t num_suffixes,
      std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);
  // Sparsity pattern of a matrix: rows are prefixes, columns suffixes.
  static PrefixSuffixGraph from_pattern(const SparseMatrix& m);

  std::size_t num_prefixes() const { return row_begin_.size() - 1; }
  std::size_t num_suffixes() const { return num_suffixes_; }
  std::size_t num_edges() const { return adjacency_.size(); }

  // Suffix ids adjacent to a prefix, ascending. Edge ids of these are
  // edge_begin(p) + position.
  std::span<const std::uint32_t> neighbors(std::uint32_t prefix) const {
    return {adjacency_.data() + row_begin_[prefix],
            row_begin_[prefix + 1] - row_begin_[prefix]};
  }
  std::size_t edge_begin(std::uint32_t prefix) const { return row_begin_[prefix]; }
  std::size_t edge_end(std::uint32_t prefix) const { return row_begin_[prefix + 1]; }
  std::uint32_t edge_suffix(std::size_t edge) const { return adjacency_[edge]; }
  std::optional<std::size_t> find_edge(std::uint32_t prefix, std::uint32_t suffix) const;

  bool has_origins() const { return !origin_.empty(); }
  EdgeOrigin origin(std::size_t edge) const { return origin_.at(edge); }

  // Present only for graphs built from a support.
  bool has_sequences() const { return cuts_.has_value(); }
  const CutIndex& cuts() const;
  Sequence prefix(std::uint32_t id) const { return cuts().prefixes.sequence(id); }
  Sequence suffix(std::uint32_t id) const { return cuts().suffixes.sequence(id); }

 private:
  PrefixSuffixGraph() = default;

  std::size_t num_suffixes_ = 0;
  std::vector<std::size_t> row_begin_{0};
  std::vector<std::uint32_t> adjacency_;
  std::vector<EdgeOrigin> origin_;
  std::optional<CutIndex> cuts_;
};

// Target function overload: vertices are (P_T, S_T) in canonical order.
PrefixSuffixGraph build_graph(const TargetFunction& f);

// Text dump: "GRAPH v1 |P| |S| |E|" then "E p s string cut" per edge.
void write_graph(std::ostream& out, const PrefixSuffixGraph& g);

struct Matching {
  static constexpr std::uint32_t kNone = UINT32_MAX;

  std::vector<std::uint32_t> match_of_prefix;
  std::vector<std::uint32_t> match_of_suffix;

  static Matching empty(const PrefixSuffixGraph& g);
  std::size_t size() const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const;
};

// True iff the arrays are mutually consistent and every pair is an edge.
bool is_valid_matching(const PrefixSuffixGraph& g, const Matching& m);

struct MatchingStats {
  std::size_t searches = 0;           // augmenting path searches started
  std::size_t augmentations = 0;      // successful searches
  std::size_t shifted_additions = 0;  // edges added by the shifted-cut pass
};

Matching augmenting_path_matching(const PrefixSuffixGraph& g,
                                  MatchingStats* stats = nullptr);
// Continues from a given (valid) matching.
Matching augmenting_path_matching(const PrefixSuffixGraph& g, Matching initial,
                                  MatchingStats* stats = nullptr);

// Requires edge origins (kMissingOrigin otherwise).
Matching hankel_fast_matching(const PrefixSuffixGraph& g,
                              MatchingStats* stats = nullptr);

std::size_t structural_rank(const PrefixSuffixGraph& g);
std::size_t structural_rank(const SparseMatrix& m);

// Alternating BFS from every free prefix; true iff some augmenting path
// exists, i.e. the matching is not maximum.
bool has_augmenting_path(const PrefixSuffixGraph& g, const Matching& m);

// Matched prefixes and suffixes, each in canonical order.
Basis matching_basis(const PrefixSuffixGraph& g, const Matching& m);

}  // namespace hankelmatch

#endif  // HANKELMATCH_MATCHING_H_
