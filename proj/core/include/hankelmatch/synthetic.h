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

// Seeded generators for synthetic corpora and automata.

#ifndef HANKELMATCH_SYNTHETIC_H_
#define HANKELMATCH_SYNTHETIC_H_

#include <cstdint>

#include "hankelmatch/corpus.h"
#include "hankelmatch/wfa.h"

namespace hankelmatch {

// "a", "b", ... for up to 26 symbols, decimal ids beyond that.
Alphabet letter_alphabet(std::size_t size);

struct CorpusSpec {
  std::size_t alphabet_size = 4;
  double mean_length = 8.0;
  double length_variance = 0.5;
  std::size_t num_sequences = 1000;
};

// Lengths drawn from N(mean, variance) rounded to the nearest integer and
// clamped to >= 1; symbols uniform.
Dataset random_corpus(const CorpusSpec& spec, std::uint64_t seed);

// Random probabilistic automaton: alpha0 is a distribution, and for every
// state the outgoing weights sum_a,j A_a(i, j) plus alpha_inf(i) sum to 1.
// Stop probabilities are drawn around stop_probability.
WeightedAutomaton random_pfa(std::size_t states, std::size_t alphabet_size,
                             double stop_probability, std::uint64_t seed);

// Samples strings from a probabilistic automaton (see random_pfa); strings
// are cut at max_length.
Dataset sample_corpus(const WeightedAutomaton& pfa, std::size_t count,
                      std::size_t max_length, std::uint64_t seed);

// Every string over the alphabet of length <= max_length, shortlex order.
std::vector<Sequence> all_strings(std::size_t alphabet_size, std::size_t max_length);

}  // namespace hankelmatch

#endif  // HANKELMATCH_SYNTHETIC_H_
