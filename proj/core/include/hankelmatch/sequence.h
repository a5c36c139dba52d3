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

// Symbol sequences and the interned prefix/suffix tables shared by the
// Hankel, matching and basis-selection code.

#ifndef HANKELMATCH_SEQUENCE_H_
#define HANKELMATCH_SEQUENCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace hankelmatch {

using Symbol = std::uint32_t;
using Sequence = std::vector<Symbol>;
using SequenceView = std::span<const Symbol>;

struct SequenceHash {
  using is_transparent = void;
  std::size_t operator()(SequenceView s) const noexcept;
  std::size_t operator()(const Sequence& s) const noexcept {
    return (*this)(SequenceView(s));
  }
};

struct SequenceEqual {
  using is_transparent = void;
  bool operator()(SequenceView a, SequenceView b) const noexcept;
};

template <typename V>
using SequenceMap = std::unordered_map<Sequence, V, SequenceHash, SequenceEqual>;

// Canonical order used for every prefix/suffix listing: longer sequences
// first, equal lengths compared lexicographically by symbol id.
bool canonical_less(SequenceView a, SequenceView b) noexcept;

// Shortlex order (shorter first, then lexicographic). Used for target
// function entries.
bool shortlex_less(SequenceView a, SequenceView b) noexcept;

// An interned, immutable set of sequences stored as a trie. Ids are dense and
// follow canonical order, so id 0 is a longest member and the empty
// sequence is last.
//
// A prefix table grows sequences by appending (node = parent . symbol); a
// suffix table grows them by prepending (node = symbol . parent). Either way
// a node and all of its ancestors are members, which is exactly the shape of
// the prefix (resp. suffix) closure of a set of strings.
class SequenceTable {
 public:
  enum class Growth { kAppend, kPrepend };

  static constexpr std::uint32_t kNone = UINT32_MAX;

  SequenceTable() = default;

  Growth growth() const { return growth_; }
  std::size_t size() const { return length_.size(); }
  std::size_t length(std::size_t id) const { return length_[id]; }
  Sequence sequence(std::size_t id) const;
  std::vector<Sequence> materialize() const;
  std::optional<std::uint32_t> find(SequenceView s) const;

 private:
  friend class SequenceTableBuilder;

  std::uint32_t child(std::uint32_t node, Symbol s) const;

  Growth growth_ = Growth::kAppend;
  std::uint32_t root_ = kNone;
  std::vector<std::uint32_t> parent_;
  std::vector<Symbol> symbol_;
  std::vector<std::uint32_t> length_;
  std::unordered_map<std::uint64_t, std::uint32_t> children_;
};

class SequenceTableBuilder {
 public:
  explicit SequenceTableBuilder(SequenceTable::Growth growth);

  static constexpr std::uint32_t root() { return 0; }
  std::uint32_t extend(std::uint32_t node, Symbol s);
  std::size_t size() const { return length_.size(); }

  // Builds the canonical table. remap[builder id] gives the canonical id.
  SequenceTable finish(std::vector<std::uint32_t>* remap) &&;

 private:
  SequenceTable::Growth growth_;
  std::vector<std::uint32_t> parent_;
  std::vector<Symbol> symbol_;
  std::vector<std::uint32_t> length_;
  std::unordered_map<std::uint64_t, std::uint32_t> children_;
};

// Every cut of every string in a list: cut i of string k splits it into
// prefix [0, i) and suffix [i, len). Tables hold the distinct prefixes and
// suffixes; cut_prefix/cut_suffix give their ids per cut.
struct CutIndex {
  SequenceTable prefixes;
  SequenceTable suffixes;
  std::vector<std::size_t> offsets;  // size strings+1; cuts of k at [offsets[k], offsets[k+1])
  std::vector<std::uint32_t> cut_prefix;
  std::vector<std::uint32_t> cut_suffix;

  std::size_t num_strings() const { return offsets.size() - 1; }
  std::span<const std::uint32_t> prefixes_of(std::size_t k) const {
    return {cut_prefix.data() + offsets[k], offsets[k + 1] - offsets[k]};
  }
  std::span<const std::uint32_t> suffixes_of(std::size_t k) const {
    return {cut_suffix.data() + offsets[k], offsets[k + 1] - offsets[k]};
  }
};

CutIndex build_cut_index(std::span<const Sequence> strings);

}  // namespace hankelmatch

#endif  // HANKELMATCH_SEQUENCE_H_
