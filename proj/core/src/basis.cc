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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hankelmatch/error.h"

namespace hankelmatch {
namespace {

constexpr std::size_t kStallFactor = 50;

std::vector<Sequence> canonical(std::set<std::uint32_t> ids, const SequenceTable& table) {
  // Table ids are already canonical, so the ordered set yields canonical order.
  std::vector<Sequence> out;
  out.reserve(ids.size());
  for (std::uint32_t id : ids) out.push_back(table.sequence(id));
  return out;
}

std::vector<std::uint32_t> top_k(const std::vector<double>& score, std::size_t k) {
  std::vector<std::uint32_t> order(score.size());
  std::iota(order.begin(), order.end(), 0u);
  std::ranges::stable_sort(order, [&](std::uint32_t a, std::uint32_t b) {
    return score[a] > score[b];
  });
  order.resize(std::min(k, order.size()));
  std::ranges::sort(order);
  return order;
}

}  // namespace

Basis random_cuts_basis(const TargetFunction& f, std::size_t k, std::uint64_t seed,
                        CutSampling sampling) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "block size must be >= 1");
  if (f.support_size() == 0) throw Error(ErrorCode::kEmptyInput, "empty support");
  const CutIndex cuts = build_cut_index(f.support());

  std::vector<double> weights(f.support_size(), 1.0);
  if (sampling == CutSampling::kFrequency) {
    std::ranges::transform(f.values(), weights.begin(),
                           [](double v) { return std::abs(v); });
  }
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick_string(weights.begin(), weights.end());

  std::set<std::uint32_t> prefixes;
  std::set<std::uint32_t> suffixes;
  std::size_t stalled = 0;
  while (prefixes.size() + suffixes.size() < 2 * k && stalled < kStallFactor * k) {
    const std::size_t w = pick_string(rng);
    const auto ps = cuts.prefixes_of(w);
    std::uniform_int_distribution<std::size_t> pick_cut(0, ps.size() - 1);
    const std::size_t cut = pick_cut(rng);
    const bool grew_p = prefixes.insert(ps[cut]).second;
    const bool grew_s = suffixes.insert(cuts.suffixes_of(w)[cut]).second;
    stalled = (grew_p || grew_s) ? 0 : stalled + 1;
  }
  return Basis(canonical(std::move(prefixes), cuts.prefixes),
               canonical(std::move(suffixes), cuts.suffixes));
}

Basis length_basis(const TargetFunction& f, std::size_t max_length) {
  auto sets = observed_prefixes_suffixes(f);
  auto too_long = [&](const Sequence& s) { return s.size() > max_length; };
  std::erase_if(sets.prefixes, too_long);
  std::erase_if(sets.suffixes, too_long);
  return Basis(std::move(sets.prefixes), std::move(sets.suffixes));
}

Basis high_norm_basis(const TargetFunction& f, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "block size must be >= 1");
  if (f.support_size() == 0) throw Error(ErrorCode::kEmptyInput, "empty support");
  const CutIndex cuts = build_cut_index(f.support());

  // Each non-zero of the full Hankel is one cut of one support string.
  std::vector<double> row(cuts.prefixes.size(), 0.0);
  std::vector<double> col(cuts.suffixes.size(), 0.0);
  const auto values = f.values();
  for (std::size_t w = 0; w < cuts.num_strings(); ++w) {
    const double sq = values[w] * values[w];
    for (std::uint32_t p : cuts.prefixes_of(w)) row[p] += sq;
    for (std::uint32_t s : cuts.suffixes_of(w)) col[s] += sq;
  }

  std::vector<Sequence> prefixes;
  std::vector<Sequence> suffixes;
  for (std::uint32_t id : top_k(row, k)) prefixes.push_back(cuts.prefixes.sequence(id));
  for (std::uint32_t id : top_k(col, k)) suffixes.push_back(cuts.suffixes.sequence(id));
  return Basis(std::move(prefixes), std::move(suffixes));
}

}  // namespace hankelmatch
