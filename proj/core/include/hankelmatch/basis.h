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

// Baseline basis-selection strategies. All of them return sub-bases of the
// full block (P_T, S_T), each side in canonical order.

#ifndef HANKELMATCH_BASIS_H_
#define HANKELMATCH_BASIS_H_

#include <cstdint>

#include "hankelmatch/corpus.h"
#include "hankelmatch/hankel.h"

namespace hankelmatch {

enum class CutSampling {
  kFrequency,  // support strings drawn proportionally to |f(x)|
  kUniform,
};

// Samples a support string and a uniform cut of it, adding the prefix and the
// suffix, until |P| + |S| >= 2k. Gives up after 50k consecutive draws that
// add nothing (the block is saturated).
Basis random_cuts_basis(const TargetFunction& f, std::size_t k, std::uint64_t seed,
                        CutSampling sampling = CutSampling::kFrequency);

// Prefixes and suffixes of length <= max_length.
Basis length_basis(const TargetFunction& f, std::size_t max_length);

// The k rows and k columns of the full Hankel with the largest Euclidean
// norm; ties go to the canonically smaller sequence.
Basis high_norm_basis(const TargetFunction& f, std::size_t k);

}  // namespace hankelmatch

#endif  // HANKELMATCH_BASIS_H_
