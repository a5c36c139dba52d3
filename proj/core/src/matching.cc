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
#include <deque>
#include <ostream>

#include "hankelmatch/error.h"

namespace hankelmatch {
namespace {

constexpr std::uint32_t kNone = Matching::kNone;

// Depth-first augmenting path search with an explicit stack. Visited marks
// live on suffixes and are version-stamped, so starting a new search costs
// O(1) instead of clearing an array.
class AugmentingSearch {
 public:
  AugmentingSearch(const PrefixSuffixGraph& g, Matching& m)
      : g_(g), m_(m), stamp_(g.num_suffixes(), 0) {}

  // Tries to augment from a free prefix. On success the matching is updated
  // and added() lists the edge ids that entered it.
  bool run(std::uint32_t root) {
    if (++current_ == 0) {
      std::ranges::fill(stamp_, 0);
      current_ = 1;
    }
    stack_.clear();
    stack_.push_back({root, g_.edge_begin(root)});
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (top.next == g_.edge_end(top.prefix)) {
        stack_.pop_back();
        continue;
      }
      const std::uint32_t s = g_.edge_suffix(top.next++);
      if (stamp_[s] == current_) continue;
      stamp_[s] = current_;
      const std::uint32_t owner = m_.match_of_suffix[s];
      if (owner == kNone) {
        flip();
        return true;
      }
      stack_.push_back({owner, g_.edge_begin(owner)});
    }
    return false;
  }

  std::span<const std::size_t> added() const { return added_; }

 private:
  struct Frame {
    std::uint32_t prefix;
    std::size_t next;  // next edge id to try
  };

  // Each frame's last tried edge is the path edge leaving that prefix.
  void flip() {
    added_.clear();
    for (const Frame& f : stack_) {
      const std::size_t e = f.next - 1;
      const std::uint32_t s = g_.edge_suffix(e);
      m_.match_of_prefix[f.prefix] = s;
      m_.match_of_suffix[s] = f.prefix;
      added_.push_back(e);
    }
  }

  const PrefixSuffixGraph& g_;
  Matching& m_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t current_ = 0;
  std::vector<Frame> stack_;
  std::vector<std::size_t> added_;
};

}  // namespace

PrefixSuffixGraph PrefixSuffixGraph::from_support(std::span<const Sequence> support) {
  PrefixSuffixGraph g;
  CutIndex cuts = build_cut_index(support);
  const std::size_t np = cuts.prefixes.size();
  g.num_suffixes_ = cuts.suffixes.size();

  struct Slot {
    std::uint32_t suffix;
    EdgeOrigin origin;
  };
  std::vector<std::size_t> degree(np + 1, 0);
  for (std::uint32_t p : cuts.cut_prefix) ++degree[p + 1];
  for (std::size_t i = 0; i < np; ++i) degree[i + 1] += degree[i];
  std::vector<Slot> slots(cuts.cut_prefix.size());
  std::vector<std::size_t> fill(degree.begin(), degree.end() - 1);
  for (std::uint32_t k = 0; k < cuts.num_strings(); ++k) {
    const auto ps = cuts.prefixes_of(k);
    const auto ss = cuts.suffixes_of(k);
    for (std::uint32_t i = 0; i < ps.size(); ++i) {
      slots[fill[ps[i]]++] = {ss[i], {k, i}};
    }
  }

  // Sort each row by suffix id; repeated support strings would produce the
  // same cell twice, keep the first witness.
  g.row_begin_.assign(1, 0);
  g.row_begin_.reserve(np + 1);
  g.adjacency_.reserve(slots.size());
  g.origin_.reserve(slots.size());
  for (std::size_t p = 0; p < np; ++p) {
    auto first = slots.begin() + static_cast<std::ptrdiff_t>(degree[p]);
    auto last = slots.begin() + static_cast<std::ptrdiff_t>(degree[p + 1]);
    std::stable_sort(first, last,
                     [](const Slot& a, const Slot& b) { return a.suffix < b.suffix; });
    for (auto it = first; it != last; ++it) {
      if (it != first && it->suffix == (it - 1)->suffix) continue;
      g.adjacency_.push_back(it->suffix);
      g.origin_.push_back(it->origin);
    }
    g.row_begin_.push_back(g.adjacency_.size());
  }
  g.cuts_ = std::move(cuts);
  return g;
}

PrefixSuffixGraph PrefixSuffixGraph::from_edges(
    std::size_t num_prefixes, std::size_t num_suffixes,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  PrefixSuffixGraph g;
  g.num_suffixes_ = num_suffixes;
  std::vector<std::vector<std::uint32_t>> rows(num_prefixes);
  for (auto [p, s] : edges) {
    if (p >= num_prefixes || s >= num_suffixes) {
      throw Error(ErrorCode::kDimension, "edge endpoint out of range");
    }
    rows[p].push_back(s);
  }
  g.row_begin_.assign(1, 0);
  for (auto& row : rows) {
    std::ranges::sort(row);
    const auto dup = std::ranges::unique(row);
    row.erase(dup.begin(), dup.end());
    g.adjacency_.insert(g.adjacency_.end(), row.begin(), row.end());
    g.row_begin_.push_back(g.adjacency_.size());
  }
  return g;
}

PrefixSuffixGraph PrefixSuffixGraph::from_pattern(const SparseMatrix& m) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(m.nnz());
  for (const auto& t : m.entries()) edges.emplace_back(t.row, t.col);
  return from_edges(m.rows(), m.cols(), edges);
}

std::optional<std::size_t> PrefixSuffixGraph::find_edge(std::uint32_t prefix,
                                                        std::uint32_t suffix) const {
  const auto row = neighbors(prefix);
  const auto it = std::ranges::lower_bound(row, suffix);
  if (it == row.end() || *it != suffix) return std::nullopt;
  return edge_begin(prefix) + static_cast<std::size_t>(it - row.begin());
}

const CutIndex& PrefixSuffixGraph::cuts() const {
  if (!cuts_) throw Error(ErrorCode::kMissingOrigin, "graph has no sequence tables");
  return *cuts_;
}

PrefixSuffixGraph build_graph(const TargetFunction& f) {
  if (f.support_size() == 0) throw Error(ErrorCode::kEmptyInput, "empty support");
  return PrefixSuffixGraph::from_support(f.support());
}

void write_graph(std::ostream& out, const PrefixSuffixGraph& g) {
  out << "GRAPH v1 " << g.num_prefixes() << ' ' << g.num_suffixes() << ' '
      << g.num_edges() << '\n';
  for (std::uint32_t p = 0; p < g.num_prefixes(); ++p) {
    for (std::size_t e = g.edge_begin(p); e < g.edge_end(p); ++e) {
      out << "E " << p << ' ' << g.edge_suffix(e);
      if (g.has_origins()) {
        const auto o = g.origin(e);
        out << ' ' << o.string_id << ' ' << o.cut;
      }
      out << '\n';
    }
  }
  if (!out) throw Error(ErrorCode::kIo, "write failure");
}

Matching Matching::empty(const PrefixSuffixGraph& g) {
  return {std::vector<std::uint32_t>(g.num_prefixes(), kNone),
          std::vector<std::uint32_t>(g.num_suffixes(), kNone)};
}

std::size_t Matching::size() const {
  return static_cast<std::size_t>(std::ranges::count_if(
      match_of_prefix, [](std::uint32_t s) { return s != kNone; }));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Matching::pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 0; p < match_of_prefix.size(); ++p) {
    if (match_of_prefix[p] != kNone) out.emplace_back(p, match_of_prefix[p]);
  }
  return out;
}

bool is_valid_matching(const PrefixSuffixGraph& g, const Matching& m) {
  if (m.match_of_prefix.size() != g.num_prefixes() ||
      m.match_of_suffix.size() != g.num_suffixes()) {
    return false;
  }
  for (std::uint32_t p = 0; p < g.num_prefixes(); ++p) {
    const std::uint32_t s = m.match_of_prefix[p];
    if (s == kNone) continue;
    if (s >= g.num_suffixes() || m.match_of_suffix[s] != p) return false;
    if (!g.find_edge(p, s)) return false;
  }
  for (std::uint32_t s = 0; s < g.num_suffixes(); ++s) {
    const std::uint32_t p = m.match_of_suffix[s];
    if (p == kNone) continue;
    if (p >= g.num_prefixes() || m.match_of_prefix[p] != s) return false;
  }
  return true;
}

Matching augmenting_path_matching(const PrefixSuffixGraph& g, MatchingStats* stats) {
  return augmenting_path_matching(g, Matching::empty(g), stats);
}

Matching augmenting_path_matching(const PrefixSuffixGraph& g, Matching initial,
                                  MatchingStats* stats) {
  if (!is_valid_matching(g, initial)) {
    throw Error(ErrorCode::kInconsistentMatching, "initial matching is not valid");
  }
  Matching m = std::move(initial);
  MatchingStats local;
  AugmentingSearch search(g, m);
  for (std::uint32_t p = 0; p < g.num_prefixes(); ++p) {
    if (m.match_of_prefix[p] != kNone) continue;
    ++local.searches;
    if (search.run(p)) ++local.augmentations;
  }
  if (stats != nullptr) *stats = local;
  return m;
}

Matching hankel_fast_matching(const PrefixSuffixGraph& g, MatchingStats* stats) {
  if (!g.has_origins() || !g.has_sequences()) {
    throw Error(ErrorCode::kMissingOrigin,
                "fast matching needs a graph built from a support");
  }
  const CutIndex& cuts = g.cuts();
  Matching m = Matching::empty(g);
  MatchingStats local;
  AugmentingSearch search(g, m);
  for (std::uint32_t p = 0; p < g.num_prefixes(); ++p) {
    if (m.match_of_prefix[p] != kNone) continue;
    ++local.searches;
    if (!search.run(p)) continue;
    ++local.augmentations;
    // One level only: shifted cuts of the edges this augmentation added.
    for (std::size_t e : search.added()) {
      const EdgeOrigin o = g.origin(e);
      const auto ps = cuts.prefixes_of(o.string_id);
      const auto ss = cuts.suffixes_of(o.string_id);
      for (std::uint32_t j = 0; j < o.cut; ++j) {
        const std::uint32_t sp = ps[j];
        const std::uint32_t ssuf = ss[j];
        if (m.match_of_prefix[sp] == kNone && m.match_of_suffix[ssuf] == kNone) {
          m.match_of_prefix[sp] = ssuf;
          m.match_of_suffix[ssuf] = sp;
          ++local.shifted_additions;
        }
      }
    }
  }
  if (stats != nullptr) *stats = local;
  return m;
}

std::size_t structural_rank(const PrefixSuffixGraph& g) {
  return augmenting_path_matching(g).size();
}

std::size_t structural_rank(const SparseMatrix& m) {
  return structural_rank(PrefixSuffixGraph::from_pattern(m));
}

bool has_augmenting_path(const PrefixSuffixGraph& g, const Matching& m) {
  std::vector<bool> seen_prefix(g.num_prefixes(), false);
  std::vector<bool> seen_suffix(g.num_suffixes(), false);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t p = 0; p < g.num_prefixes(); ++p) {
    if (m.match_of_prefix[p] == kNone) {
      seen_prefix[p] = true;
      queue.push_back(p);
    }
  }
  while (!queue.empty()) {
    const std::uint32_t p = queue.front();
    queue.pop_front();
    for (std::uint32_t s : g.neighbors(p)) {
      if (seen_suffix[s] || m.match_of_prefix[p] == s) continue;
      seen_suffix[s] = true;
      const std::uint32_t owner = m.match_of_suffix[s];
      if (owner == kNone) return true;
      if (!seen_prefix[owner]) {
        seen_prefix[owner] = true;
        queue.push_back(owner);
      }
    }
  }
  return false;
}

Basis matching_basis(const PrefixSuffixGraph& g, const Matching& m) {
  if (!is_valid_matching(g, m)) {
    throw Error(ErrorCode::kInconsistentMatching, "matching does not belong to graph");
  }
  std::vector<Sequence> prefixes;
  std::vector<Sequence> suffixes;
  for (std::uint32_t p = 0; p < g.num_prefixes(); ++p) {
    if (m.match_of_prefix[p] != kNone) prefixes.push_back(g.prefix(p));
  }
  for (std::uint32_t s = 0; s < g.num_suffixes(); ++s) {
    if (m.match_of_suffix[s] != kNone) suffixes.push_back(g.suffix(s));
  }
  if (prefixes.empty()) {
    throw Error(ErrorCode::kInconsistentMatching, "empty matching has no basis");
  }
  return Basis(std::move(prefixes), std::move(suffixes));
}

}  // namespace hankelmatch
