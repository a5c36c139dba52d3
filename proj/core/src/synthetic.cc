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

#include "hankelmatch/synthetic.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hankelmatch/error.h"

namespace hankelmatch {

Alphabet letter_alphabet(std::size_t size) {
  std::vector<std::string> tokens;
  tokens.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    tokens.push_back(size <= 26 ? std::string(1, static_cast<char>('a' + i))
                                : std::to_string(i));
  }
  return Alphabet(std::move(tokens));
}

Dataset random_corpus(const CorpusSpec& spec, std::uint64_t seed) {
  if (spec.alphabet_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet size must be positive");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> length(spec.mean_length,
                                          std::sqrt(spec.length_variance));
  std::uniform_int_distribution<Symbol> symbol(
      0, static_cast<Symbol>(spec.alphabet_size - 1));

  DatasetBuilder builder(DatasetFormat::kToken, letter_alphabet(spec.alphabet_size));
  for (std::size_t i = 0; i < spec.num_sequences; ++i) {
    const auto len = static_cast<std::size_t>(std::max(1.0, std::round(length(rng))));
    Sequence s(len);
    for (auto& x : s) x = symbol(rng);
    builder.add(std::move(s));
  }
  return builder.build();
}

WeightedAutomaton random_pfa(std::size_t states, std::size_t alphabet_size,
                             double stop_probability, std::uint64_t seed) {
  if (states == 0 || alphabet_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "automaton needs states and symbols");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::uniform_real_distribution<double> jitter(0.5, 1.5);

  const auto n = static_cast<Eigen::Index>(states);
  Eigen::VectorXd alpha0(n);
  for (Eigen::Index i = 0; i < n; ++i) alpha0(i) = unit(rng);
  alpha0 /= alpha0.sum();

  Eigen::VectorXd alpha_inf(n);
  std::vector<Eigen::MatrixXd> transitions(alphabet_size, Eigen::MatrixXd(n, n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double stop = std::clamp(stop_probability * jitter(rng), 0.01, 0.99);
    double mass = 0.0;
    for (auto& a : transitions) {
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) = unit(rng);
        mass += a(i, j);
      }
    }
    for (auto& a : transitions) a.row(i) *= (1.0 - stop) / mass;
    alpha_inf(i) = stop;
  }
  return WeightedAutomaton(letter_alphabet(alphabet_size), std::move(alpha0),
                           std::move(alpha_inf), std::move(transitions));
}

Dataset sample_corpus(const WeightedAutomaton& pfa, std::size_t count,
                      std::size_t max_length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(pfa.num_states());
  const std::size_t k = pfa.alphabet().size();

  std::vector<double> init(pfa.alpha0().data(), pfa.alpha0().data() + n);
  std::discrete_distribution<std::size_t> start(init.begin(), init.end());
  // Per state: outcome 0 is stop, outcome 1 + a*n + j is (symbol a, state j).
  std::vector<std::discrete_distribution<std::size_t>> step;
  step.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> w(1 + k * n);
    w[0] = std::max(0.0, pfa.alpha_inf()(static_cast<Eigen::Index>(i)));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t j = 0; j < n; ++j) {
        w[1 + a * n + j] = std::max(
            0.0, pfa.transition(static_cast<Symbol>(a))(static_cast<Eigen::Index>(i),
                                                        static_cast<Eigen::Index>(j)));
      }
    }
    step.emplace_back(w.begin(), w.end());
  }

  DatasetBuilder builder(DatasetFormat::kToken, pfa.alphabet());
  for (std::size_t c = 0; c < count; ++c) {
    Sequence s;
    std::size_t state = start(rng);
    while (s.size() < max_length) {
      const std::size_t outcome = step[state](rng);
      if (outcome == 0) break;
      s.push_back(static_cast<Symbol>((outcome - 1) / n));
      state = (outcome - 1) % n;
    }
    builder.add(std::move(s));
  }
  return builder.build();
}

std::vector<Sequence> all_strings(std::size_t alphabet_size, std::size_t max_length) {
  std::vector<Sequence> out{Sequence{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Symbol a = 0; a < alphabet_size; ++a) {
        Sequence s = out[i];
        s.push_back(a);
        out.push_back(std::move(s));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace hankelmatch
