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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.h"
#include "hankelmatch/error.h"

namespace {

using hankelmatch::cli::Metric;
using hankelmatch::cli::RunConfig;
using hankelmatch::cli::SvdKind;

void add_data_flags(CLI::App* sub, RunConfig& cfg, std::string& format) {
  sub->add_option("--input", cfg.inputs, "Training data file(s)");
  sub->add_option("--format", format, "char | token | spice")->capture_default_str();
}

void add_training_flags(CLI::App* sub, RunConfig& cfg, std::string& svd) {
  sub->add_option("--moments", cfg.moments, "Learn substring expectations up to length T");
  sub->add_option("--strategy", cfg.strategies,
                  "matching | fast-matching | full | random-cuts[:multiple] | length | "
                  "high-norm (repeatable for compare)");
  sub->add_option("--size", cfg.size, "Basis size k for random-cuts and high-norm");
  sub->add_option("--max-len", cfg.max_len, "Maximum length l for the length basis");
  sub->add_option("--states", cfg.states, "Number of states n (default: numeric rank)");
  sub->add_option("--svd", svd, "dense | randomized")->capture_default_str();
  sub->add_option("--proj-dim", cfg.proj_dim, "Projection width for the randomized SVD");
  sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral learning of weighted automata with matching-selected Hankel blocks"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "char";
  std::string svd = "dense";
  std::string metric = "bpc";

  auto* train = app.add_subcommand("train", "Learn an automaton and write it to --out");
  add_data_flags(train, cfg, format);
  add_training_flags(train, cfg, svd);
  train->add_option("--out", cfg.out, "Model file to write");
  train->add_option("--hankel-out", cfg.hankel_out, "Also dump the selected Hankel block");
  train->add_option("--graph-out", cfg.graph_out, "Also dump the prefix-suffix graph");

  auto* eval = app.add_subcommand("eval", "Score a model on a dataset");
  add_data_flags(eval, cfg, format);
  eval->add_option("--model", cfg.model, "Model file");
  eval->add_option("--eval-input", cfg.eval_input, "Evaluation data (overrides --input)");
  eval->add_option("--window", cfg.window, "Context window (default: whole prefix)");
  eval->add_option("--metric", metric, "bpc | rank")->capture_default_str();
  eval->add_option("--top-k", cfg.top_k, "Cut-off for the rank metric")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Compare basis selection strategies");
  add_data_flags(compare, cfg, format);
  add_training_flags(compare, cfg, svd);
  compare->add_option("--eval-input", cfg.eval_input, "Evaluation data (default: --input)");
  compare->add_option("--window", cfg.window, "Context window for BpC");
  compare->add_option("--csv", cfg.csv, "Write the table as CSV");

  auto* bench = app.add_subcommand("bench-matching", "Time the two matching engines");
  bench->add_option("--alphabet-sizes", cfg.alphabet_sizes)->delimiter(',')->capture_default_str();
  bench->add_option("--mean-lengths", cfg.mean_lengths)->delimiter(',')->capture_default_str();
  bench->add_option("--counts", cfg.counts)->delimiter(',')->capture_default_str();
  bench->add_option("--reps", cfg.repetitions)->capture_default_str();
  bench->add_option("--seed", cfg.seed)->capture_default_str();
  bench->add_option("--csv", cfg.csv, "Write the grid as CSV");

  auto* probe = app.add_subcommand("probe-wmp", "Structural vs numeric rank probe");
  probe->add_option("--generator", cfg.generator, "random-sequences | random-wa | diagonal")
      ->capture_default_str();
  probe->add_option("--trials", cfg.trials)->capture_default_str();
  probe->add_option("--seed", cfg.seed)->capture_default_str();
  probe->add_option("--alphabet-size", cfg.alphabet_size)->capture_default_str();
  probe->add_option("--mean-length", cfg.mean_length)->capture_default_str();
  probe->add_option("--count", cfg.num_sequences, "Sequences per trial")->capture_default_str();
  probe->add_option("--max-len", cfg.max_len, "Length cap for random-wa samples");
  probe->add_option("--size", cfg.size, "Side of diagonal matrices");
  probe->add_option("--states", cfg.states, "States of random-wa generators");
  probe->add_option("--out", cfg.out, "Write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[E_ARG]: " << e.what() << '\n';
    return 2;
  }

  try {
    cfg.format = hankelmatch::parse_dataset_format(format);
    if (svd == "dense") {
      cfg.svd = SvdKind::kDense;
    } else if (svd == "randomized") {
      cfg.svd = SvdKind::kRandomized;
    } else {
      throw hankelmatch::Error(hankelmatch::ErrorCode::kInvalidArgument,
                               "unknown --svd '" + svd + "' (dense, randomized)");
    }
    if (metric == "bpc") {
      cfg.metric = Metric::kBpc;
    } else if (metric == "rank") {
      cfg.metric = Metric::kRank;
    } else {
      throw hankelmatch::Error(hankelmatch::ErrorCode::kInvalidArgument,
                               "unknown --metric '" + metric + "' (bpc, rank)");
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.subcommand = chosen->get_name();
    if (chosen == train) return hankelmatch::cli::cmd_train(cfg, std::cout);
    if (chosen == eval) return hankelmatch::cli::cmd_eval(cfg, std::cout);
    if (chosen == compare) return hankelmatch::cli::cmd_compare(cfg, std::cout, std::cerr);
    if (chosen == bench) return hankelmatch::cli::cmd_bench_matching(cfg, std::cout);
    return hankelmatch::cli::cmd_probe_wmp(cfg, std::cout);
  } catch (const hankelmatch::Error& e) {
    std::cerr << "error[" << hankelmatch::error_tag(e.code()) << "]: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[E_INTERNAL]: " << e.what() << '\n';
    return 1;
  }
}
