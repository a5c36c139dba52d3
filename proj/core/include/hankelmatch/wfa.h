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

// Weighted automata <alpha0, alpha_inf, {A_a}> computing
//   f(x) = alpha0^T A_{x_1} ... A_{x_t} alpha_inf.

#ifndef HANKELMATCH_WFA_H_
#define HANKELMATCH_WFA_H_

#include <filesystem>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "hankelmatch/corpus.h"
#include "hankelmatch/sequence.h"

namespace hankelmatch {

class WeightedAutomaton {
 public:
  // Throws kDimension unless there is one n x n matrix per symbol and both
  // vectors have length n.
  WeightedAutomaton(Alphabet alphabet, Eigen::VectorXd alpha0,
                    Eigen::VectorXd alpha_inf,
                    std::vector<Eigen::MatrixXd> transitions);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return static_cast<std::size_t>(alpha0_.size()); }
  const Eigen::VectorXd& alpha0() const { return alpha0_; }
  const Eigen::VectorXd& alpha_inf() const { return alpha_inf_; }
  const Eigen::MatrixXd& transition(Symbol a) const { return transitions_.at(a); }
  const std::vector<Eigen::MatrixXd>& transitions() const { return transitions_; }

  friend bool operator==(const WeightedAutomaton& a, const WeightedAutomaton& b);

 private:
  Alphabet alphabet_;
  Eigen::VectorXd alpha0_;
  Eigen::VectorXd alpha_inf_;
  std::vector<Eigen::MatrixXd> transitions_;
};

// s_0 = alpha0, s_i^T = s_{i-1}^T A_{x_i}. Throws kAlphabetMismatch on
// unknown symbols.
Eigen::VectorXd forward_state(const WeightedAutomaton& wa, SequenceView x);
double evaluate(const WeightedAutomaton& wa, SequenceView x);

inline constexpr double kProbabilityFloor = 1e-10;
inline constexpr std::size_t kDefaultHorizon = 100;

struct NextSymbolScores {
  // One entry per symbol followed by the stop event; sums to 1.
  std::vector<double> probabilities;
  // Set when every raw score was <= 0 and the uniform distribution was used.
  bool degenerate = false;
};

// Scores next symbols from a state. With M = sum_a A_a, the continuation
// weight is alpha~ = (I - M)^{-1} alpha_inf when the spectral radius of M is
// below 1 - 1e-6 and the truncated series sum_{h<=horizon} M^h alpha_inf
// otherwise. raw(stop) = s.alpha_inf, raw(a) = s.A_a.alpha~; negative raw
// scores are floored at kProbabilityFloor before normalizing.
class NextSymbolPredictor {
 public:
  explicit NextSymbolPredictor(const WeightedAutomaton& wa,
                               std::size_t horizon = kDefaultHorizon);

  NextSymbolScores scores(const Eigen::VectorXd& state) const;
  NextSymbolScores scores_after(SequenceView context) const;

  const WeightedAutomaton& automaton() const { return wa_; }
  bool used_series() const { return used_series_; }
  const Eigen::VectorXd& continuation() const { return continuation_; }

 private:
  const WeightedAutomaton& wa_;
  Eigen::VectorXd continuation_;
  Eigen::MatrixXd symbol_weights_;  // column a = A_a * continuation
  bool used_series_ = false;
};

NextSymbolScores next_symbol_scores(const WeightedAutomaton& wa, SequenceView context,
                                    std::size_t horizon = kDefaultHorizon);

// "WFA v1" text model format; floats with 17 significant digits, so a
// save/load round trip is bit-exact.
void write_model(std::ostream& out, const WeightedAutomaton& wa);
WeightedAutomaton read_model(std::istream& in);
void save_model(const WeightedAutomaton& wa, const std::filesystem::path& path);
WeightedAutomaton load_model(const std::filesystem::path& path);

}  // namespace hankelmatch

#endif  // HANKELMATCH_WFA_H_
