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

// Subcommand implementations shared by the hankelmatch binary and tests.

#ifndef HANKELMATCH_TOOLS_COMMANDS_H_
#define HANKELMATCH_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hankelmatch/basis.h"
#include "hankelmatch/corpus.h"
#include "hankelmatch/eval.h"
#include "hankelmatch/hankel.h"
#include "hankelmatch/wfa.h"

namespace hankelmatch::cli {

enum class Strategy { kMatching, kFastMatching, kFull, kRandomCuts, kLength, kHighNorm };

// A strategy as written on the command line. "random-cuts:2" asks for a
// random-cuts basis twice the size of the matching basis; plain
// "random-cuts" uses --size, or the matching size when --size is absent.
struct StrategySpec {
  Strategy kind = Strategy::kMatching;
  std::optional<double> multiple;
  std::string label;
};

StrategySpec parse_strategy(const std::string& text);

enum class SvdKind { kDense, kRandomized };
enum class Metric { kBpc, kRank };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  DatasetFormat format = DatasetFormat::kChar;
  std::optional<std::size_t> moments;  // substring expectation up to T
  std::vector<std::string> strategies{"matching"};
  std::optional<std::size_t> size;     // k for random-cuts and high-norm
  std::optional<std::size_t> max_len;  // l for the length basis
  std::optional<std::size_t> states;
  SvdKind svd = SvdKind::kDense;
  std::optional<std::size_t> proj_dim;
  std::uint64_t seed = 0;
  std::optional<std::size_t> window;  // unbounded when absent
  Metric metric = Metric::kBpc;
  std::size_t top_k = kDefaultTopK;
  std::string model;
  std::string eval_input;
  std::string out;
  std::string csv;
  std::string hankel_out;
  std::string graph_out;

  // bench-matching
  std::vector<std::size_t> alphabet_sizes{2, 4, 8};
  std::vector<double> mean_lengths{5, 10, 20};
  std::vector<std::size_t> counts{1000};
  std::size_t repetitions = 3;

  // probe-wmp
  std::string generator = "random-sequences";
  std::size_t trials = 20;
  std::size_t alphabet_size = 3;
  double mean_length = 4.0;
  std::size_t num_sequences = 40;

  // Throws kInvalidArgument on inconsistent flags; runs before any work.
  void validate() const;
};

Dataset load_inputs(const RunConfig& cfg);
TargetFunction make_target(const Dataset& d, const RunConfig& cfg);

struct StageTimes {
  double selection = 0.0;  // basis selection and block construction
  double svd = 0.0;
  double recovery = 0.0;
  double total() const { return selection + svd + recovery; }
};

struct TrainResult {
  std::optional<WeightedAutomaton> automaton;
  std::optional<HankelBlock> block;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t structural_rank = 0;
  std::size_t numeric_rank = 0;
  std::size_t states = 0;
  StageTimes times;
};

// Selection, block, SVD and recovery. Errors are rethrown with the failing
// stage prefixed to the message.
TrainResult train_pipeline(const TargetFunction& f, const StrategySpec& strategy,
                           const RunConfig& cfg);

// Each returns the process exit code; reports go to `out`.
int cmd_train(const RunConfig& cfg, std::ostream& out);
int cmd_eval(const RunConfig& cfg, std::ostream& out);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench_matching(const RunConfig& cfg, std::ostream& out);
int cmd_probe_wmp(const RunConfig& cfg, std::ostream& out);

}  // namespace hankelmatch::cli

#endif  // HANKELMATCH_TOOLS_COMMANDS_H_
