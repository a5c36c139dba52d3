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
#include <numeric>
#include <utility>

namespace hankelmatch {
namespace {

constexpr std::uint64_t child_key(std::uint32_t node, Symbol s) {
  return (static_cast<std::uint64_t>(node) << 32) | s;
}

}  // namespace

std::size_t SequenceHash::operator()(SequenceView s) const noexcept {
  // FNV-1a over 32-bit symbols, finished with a 64-bit mixer.
  std::uint64_t h = 1469598103934665603ULL ^ s.size();
  for (Symbol x : s) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

bool SequenceEqual::operator()(SequenceView a, SequenceView b) const noexcept {
  return std::ranges::equal(a, b);
}

bool canonical_less(SequenceView a, SequenceView b) noexcept {
  if (a.size() != b.size()) return a.size() > b.size();
  return std::ranges::lexicographical_compare(a, b);
}

bool shortlex_less(SequenceView a, SequenceView b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::ranges::lexicographical_compare(a, b);
}

Sequence SequenceTable::sequence(std::size_t id) const {
  Sequence out;
  out.reserve(length_[id]);
  for (auto node = static_cast<std::uint32_t>(id); node != root_;
       node = parent_[node]) {
    out.push_back(symbol_[node]);
  }
  // Walking up a prefix trie yields symbols last-to-first.
  if (growth_ == Growth::kAppend) std::ranges::reverse(out);
  return out;
}

std::vector<Sequence> SequenceTable::materialize() const {
  std::vector<Sequence> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(sequence(i));
  return out;
}

std::uint32_t SequenceTable::child(std::uint32_t node, Symbol s) const {
  auto it = children_.find(child_key(node, s));
  return it == children_.end() ? kNone : it->second;
}

std::optional<std::uint32_t> SequenceTable::find(SequenceView s) const {
  if (root_ == kNone) return std::nullopt;
  std::uint32_t node = root_;
  if (growth_ == Growth::kAppend) {
    for (Symbol x : s) {
      node = child(node, x);
      if (node == kNone) return std::nullopt;
    }
  } else {
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      node = child(node, *it);
      if (node == kNone) return std::nullopt;
    }
  }
  return node;
}

SequenceTableBuilder::SequenceTableBuilder(SequenceTable::Growth growth)
    : growth_(growth) {
  parent_.push_back(SequenceTable::kNone);
  symbol_.push_back(0);
  length_.push_back(0);
}

std::uint32_t SequenceTableBuilder::extend(std::uint32_t node, Symbol s) {
  auto [it, inserted] = children_.try_emplace(
      child_key(node, s), static_cast<std::uint32_t>(length_.size()));
  if (inserted) {
    parent_.push_back(node);
    symbol_.push_back(s);
    length_.push_back(length_[node] + 1);
  }
  return it->second;
}

SequenceTable SequenceTableBuilder::finish(std::vector<std::uint32_t>* remap) && {
  const std::size_t n = length_.size();
  const std::uint32_t max_len = *std::ranges::max_element(length_);

  std::vector<std::vector<std::uint32_t>> levels(max_len + 1);
  for (std::uint32_t v = 0; v < n; ++v) levels[length_[v]].push_back(v);

  // Rank within a level, computed one level at a time from the parent's rank.
  // Parents are strictly shorter, so their ranks are final by then.
  std::vector<std::uint32_t> rank(n, 0);
  const bool append = growth_ == SequenceTable::Growth::kAppend;
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    auto& level = levels[len];
    std::ranges::sort(level, [&](std::uint32_t a, std::uint32_t b) {
      const auto ka = append ? std::pair(rank[parent_[a]], symbol_[a])
                             : std::pair(symbol_[a], rank[parent_[a]]);
      const auto kb = append ? std::pair(rank[parent_[b]], symbol_[b])
                             : std::pair(symbol_[b], rank[parent_[b]]);
      return ka < kb;
    });
    for (std::uint32_t r = 0; r < level.size(); ++r) rank[level[r]] = r;
  }

  std::vector<std::uint32_t> level_offset(max_len + 1, 0);
  std::uint32_t acc = 0;
  for (std::uint32_t len = max_len + 1; len-- > 0;) {
    level_offset[len] = acc;
    acc += static_cast<std::uint32_t>(levels[len].size());
  }

  std::vector<std::uint32_t> to_canonical(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    to_canonical[v] = level_offset[length_[v]] + rank[v];
  }

  SequenceTable table;
  table.growth_ = growth_;
  table.root_ = to_canonical[0];
  table.parent_.resize(n);
  table.symbol_.resize(n);
  table.length_.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint32_t c = to_canonical[v];
    table.parent_[c] =
        parent_[v] == SequenceTable::kNone ? SequenceTable::kNone
                                           : to_canonical[parent_[v]];
    table.symbol_[c] = symbol_[v];
    table.length_[c] = length_[v];
  }
  table.children_.reserve(children_.size());
  for (const auto& [key, v] : children_) {
    const auto parent = static_cast<std::uint32_t>(key >> 32);
    const auto s = static_cast<Symbol>(key & 0xffffffffULL);
    table.children_.emplace(child_key(to_canonical[parent], s), to_canonical[v]);
  }
  if (remap != nullptr) *remap = std::move(to_canonical);
  return table;
}

CutIndex build_cut_index(std::span<const Sequence> strings) {
  SequenceTableBuilder prefixes(SequenceTable::Growth::kAppend);
  SequenceTableBuilder suffixes(SequenceTable::Growth::kPrepend);

  CutIndex index;
  index.offsets.reserve(strings.size() + 1);
  index.offsets.push_back(0);
  if (strings.empty()) return index;  // no cuts, so not even eps
  std::size_t total = 0;
  for (const auto& w : strings) total += w.size() + 1;
  index.cut_prefix.resize(total);
  index.cut_suffix.resize(total);

  std::size_t base = 0;
  for (const auto& w : strings) {
    const std::size_t len = w.size();
    std::uint32_t p = SequenceTableBuilder::root();
    index.cut_prefix[base] = p;
    for (std::size_t i = 0; i < len; ++i) {
      p = prefixes.extend(p, w[i]);
      index.cut_prefix[base + i + 1] = p;
    }
    std::uint32_t s = SequenceTableBuilder::root();
    index.cut_suffix[base + len] = s;
    for (std::size_t i = len; i-- > 0;) {
      s = suffixes.extend(s, w[i]);
      index.cut_suffix[base + i] = s;
    }
    base += len + 1;
    index.offsets.push_back(base);
  }

  std::vector<std::uint32_t> prefix_map;
  std::vector<std::uint32_t> suffix_map;
  index.prefixes = std::move(prefixes).finish(&prefix_map);
  index.suffixes = std::move(suffixes).finish(&suffix_map);
  for (auto& id : index.cut_prefix) id = prefix_map[id];
  for (auto& id : index.cut_suffix) id = suffix_map[id];
  return index;
}

}  // namespace hankelmatch
