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

#include "hankelmatch/corpus.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hankelmatch/error.h"

namespace hankelmatch {
namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_ascii_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_ascii_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Splits a line into Unicode scalar values, each as its UTF-8 bytes.
std::vector<std::string_view> split_utf8(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const auto lead = static_cast<unsigned char>(line[i]);
    std::size_t width = 0;
    if (lead < 0x80) {
      width = 1;
    } else if ((lead & 0xE0) == 0xC0 && lead >= 0xC2) {
      width = 2;
    } else if ((lead & 0xF0) == 0xE0) {
      width = 3;
    } else if ((lead & 0xF8) == 0xF0 && lead <= 0xF4) {
      width = 4;
    } else {
      throw Error(ErrorCode::kParse, "invalid UTF-8 lead byte");
    }
    if (i + width > line.size()) {
      throw Error(ErrorCode::kParse, "truncated UTF-8 sequence");
    }
    for (std::size_t k = 1; k < width; ++k) {
      if ((static_cast<unsigned char>(line[i + k]) & 0xC0) != 0x80) {
        throw Error(ErrorCode::kParse, "invalid UTF-8 continuation byte");
      }
    }
    out.push_back(line.substr(i, width));
    i += width;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse,
                std::string("expected non-negative integer for ") + what +
                    ", got '" + std::string(text) + "'");
  }
  return value;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) {
  for (auto& t : tokens) {
    if (index_.contains(t)) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate alphabet token '" + t + "'");
    }
    index_.emplace(t, static_cast<Symbol>(tokens_.size()));
    tokens_.push_back(std::move(t));
  }
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::intern(std::string_view token) {
  std::string key(token);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  const auto id = static_cast<Symbol>(tokens_.size());
  index_.emplace(key, id);
  tokens_.push_back(std::move(key));
  return id;
}

bool Alphabet::concatenates() const {
  return std::ranges::all_of(tokens_, [](const std::string& t) {
    if (t.empty() || is_ascii_space(t[0])) return false;
    try {
      return split_utf8(t).size() == 1;
    } catch (const Error&) {
      return false;
    }
  });
}

std::string Alphabet::render(SequenceView s) const {
  const bool concat = concatenates();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!concat && i > 0) out.push_back(' ');
    out += token(s[i]);
  }
  return out;
}

Sequence Alphabet::parse(std::string_view text) const {
  const auto pieces = concatenates() ? split_utf8(text) : split_whitespace(text);
  Sequence out;
  out.reserve(pieces.size());
  for (auto piece : pieces) {
    auto id = find(piece);
    if (!id) {
      throw Error(ErrorCode::kAlphabetMismatch,
                  "unknown symbol '" + std::string(piece) + "'");
    }
    out.push_back(*id);
  }
  return out;
}

DatasetFormat parse_dataset_format(std::string_view name) {
  if (name == "char") return DatasetFormat::kChar;
  if (name == "token") return DatasetFormat::kToken;
  if (name == "spice") return DatasetFormat::kSpice;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown dataset format '" + std::string(name) + "'");
}

std::string_view format_name(DatasetFormat format) {
  switch (format) {
    case DatasetFormat::kChar:
      return "char";
    case DatasetFormat::kToken:
      return "token";
    case DatasetFormat::kSpice:
      return "spice";
  }
  return "?";
}

std::uint64_t Dataset::total_count() const {
  std::uint64_t total = 0;
  for (const auto& [s, c] : sequences) total += c;
  return total;
}

DatasetBuilder::DatasetBuilder(DatasetFormat format) : format_(format) {}

DatasetBuilder::DatasetBuilder(DatasetFormat format, Alphabet fixed)
    : format_(format), fixed_(true), alphabet_(std::move(fixed)) {}

Symbol DatasetBuilder::resolve(std::string_view token) {
  if (!fixed_) return alphabet_.intern(token);
  auto id = alphabet_.find(token);
  if (!id) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "symbol '" + std::string(token) + "' is not in the alphabet");
  }
  return *id;
}

void DatasetBuilder::add(Sequence s, std::uint64_t count) {
  if (count == 0) return;
  for (Symbol x : s) {
    if (x >= alphabet_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "symbol id out of range");
    }
  }
  auto [it, inserted] = slot_.try_emplace(s, sequences_.size());
  if (inserted) {
    sequences_.emplace_back(std::move(s), count);
  } else {
    sequences_[it->second].second += count;
  }
}

void DatasetBuilder::add_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  }
  add_stream(in);
}

void DatasetBuilder::add_stream(std::istream& in) {
  if (format_ == DatasetFormat::kSpice) {
    add_spice(in);
    return;
  }
  std::string line;
  while (std::getline(in, line)) {
    strip_cr(line);
    const auto pieces = format_ == DatasetFormat::kChar ? split_utf8(line)
                                                        : split_whitespace(line);
    Sequence s;
    s.reserve(pieces.size());
    for (auto piece : pieces) s.push_back(resolve(piece));
    add(std::move(s));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failure");
}

void DatasetBuilder::add_spice(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kParse, "malformed spice header: missing");
  }
  strip_cr(line);
  const auto header = split_whitespace(line);
  if (header.size() != 2) {
    throw Error(ErrorCode::kParse, "malformed spice header: expected 'N K'");
  }
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  try {
    n = parse_uint(header[0], "sequence count");
    k = parse_uint(header[1], "alphabet size");
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed spice header: ") + e.what());
  }

  // Spice symbols are their own decimal ids, so the alphabet is 0..K-1.
  std::vector<Symbol> id_to_symbol(k);
  for (std::uint64_t i = 0; i < k; ++i) {
    id_to_symbol[i] = resolve(std::to_string(i));
  }

  for (std::uint64_t row = 0; row < n; ++row) {
    if (!std::getline(in, line)) {
      throw Error(ErrorCode::kParse, "spice file ends after " +
                                         std::to_string(row) + " of " +
                                         std::to_string(n) + " sequences");
    }
    strip_cr(line);
    const auto fields = split_whitespace(line);
    if (fields.empty()) {
      throw Error(ErrorCode::kParse, "empty spice line " + std::to_string(row + 2));
    }
    const std::uint64_t len = parse_uint(fields[0], "sequence length");
    if (fields.size() != len + 1) {
      throw Error(ErrorCode::kParse, "spice line " + std::to_string(row + 2) +
                                         " declares " + std::to_string(len) +
                                         " symbols but has " +
                                         std::to_string(fields.size() - 1));
    }
    Sequence s;
    s.reserve(len);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const std::uint64_t id = parse_uint(fields[i], "symbol id");
      if (id >= k) {
        throw Error(ErrorCode::kParse, "symbol id " + std::to_string(id) +
                                           " out of range for alphabet size " +
                                           std::to_string(k));
      }
      s.push_back(id_to_symbol[id]);
    }
    add(std::move(s));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failure");
}

Dataset DatasetBuilder::build() const {
  Dataset d;
  d.alphabet = alphabet_;
  d.sequences = sequences_;
  return d;
}

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format) {
  DatasetBuilder builder(format);
  builder.add_file(path);
  return builder.build();
}

Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const Alphabet& fixed) {
  DatasetBuilder builder(format, fixed);
  builder.add_file(path);
  return builder.build();
}

TargetFunction::TargetFunction(Alphabet alphabet,
                               std::vector<std::pair<Sequence, double>> entries)
    : alphabet_(std::move(alphabet)) {
  std::erase_if(entries, [](const auto& e) { return e.second == 0.0; });
  std::ranges::sort(entries, [](const auto& a, const auto& b) {
    return shortlex_less(a.first, b.first);
  });
  support_.reserve(entries.size());
  values_.reserve(entries.size());
  index_.reserve(entries.size());
  for (auto& [s, v] : entries) {
    for (Symbol x : s) {
      if (x >= alphabet_.size()) {
        throw Error(ErrorCode::kAlphabetMismatch,
                    "target function symbol outside its alphabet");
      }
    }
    if (!index_.emplace(s, support_.size()).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate target function entry");
    }
    support_.push_back(std::move(s));
    values_.push_back(v);
  }
}

double TargetFunction::operator()(SequenceView x) const {
  auto it = index_.find(x);
  return it == index_.end() ? 0.0 : values_[it->second];
}

TargetFunction empirical_probability(const Dataset& d) {
  const std::uint64_t total = d.total_count();
  if (total == 0) throw Error(ErrorCode::kEmptyInput, "empty dataset");
  std::vector<std::pair<Sequence, double>> entries;
  entries.reserve(d.sequences.size());
  for (const auto& [s, c] : d.sequences) {
    entries.emplace_back(s, static_cast<double>(c) / static_cast<double>(total));
  }
  return TargetFunction(d.alphabet, std::move(entries));
}

TargetFunction substring_expectation(const Dataset& d, std::size_t max_length) {
  if (max_length < 1) {
    throw Error(ErrorCode::kInvalidArgument, "substring length bound must be >= 1");
  }
  const std::uint64_t total = d.total_count();
  if (total == 0) throw Error(ErrorCode::kEmptyInput, "empty dataset");

  // Integer occurrence counts first so the division happens once per entry.
  SequenceMap<std::uint64_t> counts;
  std::uint64_t empty = 0;
  for (const auto& [w, c] : d.sequences) {
    empty += c * (w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::size_t longest = std::min(max_length, w.size() - i);
      for (std::size_t len = 1; len <= longest; ++len) {
        const SequenceView piece(w.data() + i, len);
        auto it = counts.find(piece);
        if (it == counts.end()) {
          counts.emplace(Sequence(piece.begin(), piece.end()), c);
        } else {
          it->second += c;
        }
      }
    }
  }

  std::vector<std::pair<Sequence, double>> entries;
  entries.reserve(counts.size() + 1);
  const auto denom = static_cast<double>(total);
  entries.emplace_back(Sequence{}, static_cast<double>(empty) / denom);
  for (auto& [s, c] : counts) {
    entries.emplace_back(s, static_cast<double>(c) / denom);
  }
  return TargetFunction(d.alphabet, std::move(entries));
}

PrefixSuffixSets observed_prefixes_suffixes(const TargetFunction& f) {
  const CutIndex index = build_cut_index(f.support());
  return {index.prefixes.materialize(), index.suffixes.materialize()};
}

}  // namespace hankelmatch
