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

// Datasets, alphabets and the sparse target functions learned from them.

#ifndef HANKELMATCH_CORPUS_H_
#define HANKELMATCH_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hankelmatch/sequence.h"

namespace hankelmatch {

// Ordered set of symbol tokens with dense ids 0..size-1.
class Alphabet {
 public:
  Alphabet() = default;
  // Throws kInvalidArgument on duplicate tokens.
  explicit Alphabet(std::vector<std::string> tokens);

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(Symbol id) const { return tokens_.at(id); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::optional<Symbol> find(std::string_view token) const;

  // Returns the id of token, appending it if new.
  Symbol intern(std::string_view token);

  // Renders a sequence. Single-character alphabets without whitespace
  // concatenate tokens; anything else joins them with single spaces.
  std::string render(SequenceView s) const;
  // Inverse of render. Throws kAlphabetMismatch on unknown tokens.
  Sequence parse(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  bool concatenates() const;

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> index_;
};

enum class DatasetFormat { kChar, kToken, kSpice };

DatasetFormat parse_dataset_format(std::string_view name);
std::string_view format_name(DatasetFormat format);

struct Dataset {
  Alphabet alphabet;
  // Distinct sequences in first-occurrence order, each with its count.
  std::vector<std::pair<Sequence, std::uint64_t>> sequences;

  std::uint64_t total_count() const;
};

// Accumulates sequences from one or more sources, merging duplicates.
class DatasetBuilder {
 public:
  explicit DatasetBuilder(DatasetFormat format);
  // Symbols are resolved against a fixed alphabet; unknown ones are errors.
  DatasetBuilder(DatasetFormat format, Alphabet fixed);

  void add_file(const std::filesystem::path& path);
  void add_stream(std::istream& in);
  void add(Sequence s, std::uint64_t count = 1);

  Dataset build() const;

 private:
  Symbol resolve(std::string_view token);
  void add_spice(std::istream& in);

  DatasetFormat format_;
  bool fixed_ = false;
  Alphabet alphabet_;
  SequenceMap<std::size_t> slot_;
  std::vector<std::pair<Sequence, std::uint64_t>> sequences_;
};

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format);
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const Alphabet& fixed);

// Sparse map from sequences to reals. Zero values are never stored, so the
// support is exactly the set of entries. Entries are kept in shortlex order.
class TargetFunction {
 public:
  TargetFunction() = default;
  // Drops exact zeros. Throws on duplicate sequences or out-of-range symbols.
  TargetFunction(Alphabet alphabet,
                 std::vector<std::pair<Sequence, double>> entries);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t support_size() const { return support_.size(); }
  std::span<const Sequence> support() const { return support_; }
  std::span<const double> values() const { return values_; }

  // f(x); zero off the support.
  double operator()(SequenceView x) const;
  bool contains(SequenceView x) const { return index_.find(x) != index_.end(); }

 private:
  Alphabet alphabet_;
  std::vector<Sequence> support_;
  std::vector<double> values_;
  std::unordered_map<Sequence, std::size_t, SequenceHash, SequenceEqual> index_;
};

// f(x) = count(x) / total.
TargetFunction empirical_probability(const Dataset& d);

// Expected number of occurrences of each substring of length 1..max_length
// in a sequence drawn from the dataset; f(eps) counts |w|+1 empty matches.
TargetFunction substring_expectation(const Dataset& d, std::size_t max_length);

struct PrefixSuffixSets {
  std::vector<Sequence> prefixes;
  std::vector<Sequence> suffixes;
};

// All distinct prefixes and suffixes of the support, in canonical order.
PrefixSuffixSets observed_prefixes_suffixes(const TargetFunction& f);

}  // namespace hankelmatch

#endif  // HANKELMATCH_CORPUS_H_
