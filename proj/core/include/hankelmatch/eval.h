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

// Next-symbol metrics and the structural-vs-numeric rank probe.

#ifndef HANKELMATCH_EVAL_H_
#define HANKELMATCH_EVAL_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hankelmatch/corpus.h"
#include "hankelmatch/hankel.h"
#include "hankelmatch/wfa.h"

namespace hankelmatch {

struct MetricReport {
  double value = 0.0;
  std::uint64_t events = 0;             // predictions, weighted by counts
  std::uint64_t degenerate_events = 0;  // predictions that fell back to uniform
};

// Mean -log2 P(next | last `window` symbols) over every symbol and every
// end-of-sequence event. Probabilities are floored at kProbabilityFloor.
MetricReport bits_per_character(const WeightedAutomaton& wa, const Dataset& d,
                                std::size_t window,
                                std::size_t horizon = kDefaultHorizon);

inline constexpr std::size_t kDefaultTopK = 5;

// Mean of 1/log2(r+1) where r is the rank of the true next event among
// symbols and stop (0 when r > top_k). Ties go to the lower id; stop sorts
// after every symbol.
MetricReport rank_score(const WeightedAutomaton& wa, const Dataset& d,
                        std::size_t window, std::size_t top_k = kDefaultTopK,
                        std::size_t horizon = kDefaultHorizon);

enum class ProbeGenerator {
  kRandomSequences,  // empirical distribution of a random corpus
  kRandomAutomaton,  // empirical distribution of strings sampled from a random PFA
  kDiagonal,         // diagonal matrices with random non-zero entries
};

ProbeGenerator parse_probe_generator(std::string_view name);

struct ProbeConfig {
  ProbeGenerator generator = ProbeGenerator::kRandomSequences;
  std::size_t alphabet_size = 3;
  double mean_length = 4.0;
  std::size_t num_sequences = 40;
  std::size_t automaton_states = 3;
  std::size_t max_length = 12;
  std::size_t diagonal_size = 12;
  double tolerance = kDefaultRankTolerance;
  std::size_t spot_checks = 10;
};

struct ProbeTrial {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t structural_rank = 0;
  std::size_t numeric_full = 0;
  std::size_t numeric_sub = 0;
  // Every sampled submatrix with at least structural_rank rows and columns
  // had numeric rank equal to its structural rank.
  bool wmp_spot_check = false;
};

struct WmpProbeReport {
  std::vector<ProbeTrial> trials;
  double mean_gap = 0.0;      // structural - numeric_full
  std::size_t max_gap = 0;
  double mean_sub_gap = 0.0;  // numeric_full - numeric_sub
  std::size_t max_sub_gap = 0;

  // "TRIAL i struct s num_full r1 num_sub r2" lines and a SUMMARY line.
  void write(std::ostream& out) const;
};

// One trial on a given matrix: structural rank via matching, numeric rank
// of the whole matrix and of the matched sub-block, plus spot checks.
ProbeTrial probe_matrix(const SparseMatrix& h, std::uint64_t seed,
                        double tolerance = kDefaultRankTolerance,
                        std::size_t spot_checks = 10);

WmpProbeReport summarize_probe(std::vector<ProbeTrial> trials);

// Trial i uses seed + i.
WmpProbeReport wmp_probe(const ProbeConfig& config, std::size_t trials,
                         std::uint64_t seed);

}  // namespace hankelmatch

#endif  // HANKELMATCH_EVAL_H_
