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

#include "commands.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hankelmatch/error.h"
#include "hankelmatch/eval.h"
#include "hankelmatch/matching.h"
#include "hankelmatch/spectral.h"
#include "hankelmatch/synthetic.h"

namespace hankelmatch::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs fn, prefixing the stage name to any library error.
template <typename Fn>
auto staged(const char* stage, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(stage) + ": " + e.what());
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  return f;
}

Basis matching_based(const TargetFunction& f, bool fast) {
  const PrefixSuffixGraph g = build_graph(f);
  const Matching m = fast ? hankel_fast_matching(g) : augmenting_path_matching(g);
  return matching_basis(g, m);
}

std::size_t matching_size(const TargetFunction& f) {
  return structural_rank(build_graph(f));
}

Basis select_basis(const TargetFunction& f, const StrategySpec& s, const RunConfig& cfg,
                   std::size_t reference_size) {
  switch (s.kind) {
    case Strategy::kMatching:
      return matching_based(f, false);
    case Strategy::kFastMatching:
      return matching_based(f, true);
    case Strategy::kFull:
      return full_basis(f);
    case Strategy::kRandomCuts: {
      std::size_t k = reference_size;
      if (s.multiple) {
        k = static_cast<std::size_t>(std::llround(*s.multiple * static_cast<double>(k)));
      } else if (cfg.size) {
        k = *cfg.size;
      }
      return random_cuts_basis(f, std::max<std::size_t>(k, 1), cfg.seed);
    }
    case Strategy::kLength:
      return length_basis(f, *cfg.max_len);
    case Strategy::kHighNorm:
      return high_norm_basis(f, *cfg.size);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy");
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::setprecision(6) << s;
  return os.str();
}

std::string format_metric(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

double mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double stddev(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

}  // namespace

StrategySpec parse_strategy(const std::string& text) {
  StrategySpec spec;
  spec.label = text;
  std::string name = text;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    double multiple = 0.0;
    std::istringstream in(arg);
    if (!(in >> multiple) || !in.eof() || !(multiple > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "bad multiple in strategy '" + text + "'");
    }
    spec.multiple = multiple;
  }
  if (name == "matching") {
    spec.kind = Strategy::kMatching;
  } else if (name == "fast-matching") {
    spec.kind = Strategy::kFastMatching;
  } else if (name == "full") {
    spec.kind = Strategy::kFull;
  } else if (name == "random-cuts") {
    spec.kind = Strategy::kRandomCuts;
  } else if (name == "length") {
    spec.kind = Strategy::kLength;
  } else if (name == "high-norm") {
    spec.kind = Strategy::kHighNorm;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown strategy '" + name +
                    "' (matching, fast-matching, full, random-cuts, length, high-norm)");
  }
  if (spec.multiple && spec.kind != Strategy::kRandomCuts) {
    throw Error(ErrorCode::kInvalidArgument, "only random-cuts takes a size multiple");
  }
  return spec;
}

void RunConfig::validate() const {
  const bool trains = subcommand == "train" || subcommand == "compare";
  if (trains) {
    require(!inputs.empty(), subcommand + " needs --input");
    require(!strategies.empty(), subcommand + " needs --strategy");
    for (const auto& s : strategies) {
      const StrategySpec spec = parse_strategy(s);
      if (spec.kind == Strategy::kLength) require(max_len.has_value(), "length needs --max-len");
      if (spec.kind == Strategy::kHighNorm) require(size.has_value(), "high-norm needs --size");
    }
    require(!moments || *moments >= 1, "--moments must be >= 1");
    require(!states || *states >= 1, "--states must be >= 1");
    require(!size || *size >= 1, "--size must be >= 1");
    require((svd == SvdKind::kRandomized) == proj_dim.has_value(),
            "--proj-dim is required with --svd randomized and only then");
    require(!proj_dim || *proj_dim >= 1, "--proj-dim must be >= 1");
  }
  if (subcommand == "train") {
    require(strategies.size() == 1, "train takes exactly one --strategy");
    require(!out.empty(), "train needs --out for the model file");
  }
  if (subcommand == "eval") {
    require(!model.empty(), "eval needs --model");
    require(!inputs.empty() || !eval_input.empty(), "eval needs --input");
    require(top_k >= 1, "--top-k must be >= 1");
  }
  if (subcommand == "bench-matching") {
    require(!alphabet_sizes.empty() && !mean_lengths.empty() && !counts.empty(),
            "bench-matching needs a non-empty grid");
    require(repetitions >= 1, "--reps must be >= 1");
    for (auto a : alphabet_sizes) require(a >= 1, "alphabet sizes must be >= 1");
    for (auto c : counts) require(c >= 1, "sequence counts must be >= 1");
  }
  if (subcommand == "probe-wmp") {
    parse_probe_generator(generator);
    require(trials >= 1, "--trials must be >= 1");
    require(alphabet_size >= 1, "--alphabet-size must be >= 1");
  }
}

Dataset load_inputs(const RunConfig& cfg) {
  DatasetBuilder builder(cfg.format);
  for (const auto& path : cfg.inputs) builder.add_file(path);
  return builder.build();
}

TargetFunction make_target(const Dataset& d, const RunConfig& cfg) {
  return cfg.moments ? substring_expectation(d, *cfg.moments) : empirical_probability(d);
}

TrainResult train_pipeline(const TargetFunction& f, const StrategySpec& strategy,
                           const RunConfig& cfg) {
  TrainResult r;
  // The reference size for random-cuts is setup, not selection.
  std::size_t reference = 0;
  if (strategy.kind == Strategy::kRandomCuts && (strategy.multiple || !cfg.size)) {
    reference = staged("selection", [&] { return matching_size(f); });
  }

  auto start = Clock::now();
  r.block = staged("selection", [&] {
    const Basis basis = select_basis(f, strategy, cfg, reference);
    return build_block(f, basis);
  });
  r.times.selection = seconds_since(start);

  const HankelBlock& block = *r.block;
  r.rows = block.basis.rows();
  r.cols = block.basis.cols();
  r.structural_rank = structural_rank(block.hankel);
  r.numeric_rank = staged("svd", [&] { return numeric_rank(block.hankel); });
  if (r.numeric_rank == 0) {
    throw Error(ErrorCode::kRankDeficient, "svd: selected block is numerically zero");
  }
  r.states = cfg.states ? std::min(*cfg.states, r.numeric_rank) : r.numeric_rank;

  start = Clock::now();
  const Factorization fac = staged("svd", [&] {
    if (cfg.svd == SvdKind::kRandomized) {
      const std::size_t proj = std::min({*cfg.proj_dim, r.rows, r.cols});
      r.states = std::min(r.states, proj);
      return randomized_svd(block.hankel, proj, r.states, cfg.seed);
    }
    return truncated_svd(block.hankel, r.states);
  });
  r.times.svd = seconds_since(start);

  start = Clock::now();
  r.automaton = staged("recovery", [&] { return recover_wa(block, fac); });
  r.times.recovery = seconds_since(start);
  return r;
}

int cmd_train(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const Dataset d = staged("load", [&] { return load_inputs(cfg); });
  const TargetFunction f = staged("target", [&] { return make_target(d, cfg); });
  const StrategySpec spec = parse_strategy(cfg.strategies.front());
  const TrainResult r = train_pipeline(f, spec, cfg);

  staged("output", [&] {
    save_model(*r.automaton, cfg.out);
    if (!cfg.hankel_out.empty()) {
      auto file = open_output(cfg.hankel_out);
      write_hankel(file, r.block->basis, r.block->hankel, f.alphabet());
    }
    if (!cfg.graph_out.empty()) {
      auto file = open_output(cfg.graph_out);
      write_graph(file, build_graph(f));
    }
    return 0;
  });

  out << "strategy " << spec.label << '\n'
      << "block " << r.rows << 'x' << r.cols << '\n'
      << "struct_rank " << r.structural_rank << '\n'
      << "num_rank " << r.numeric_rank << '\n'
      << "states " << r.states << '\n'
      << "sel_sec " << format_seconds(r.times.selection) << '\n'
      << "svd_sec " << format_seconds(r.times.svd) << '\n'
      << "recover_sec " << format_seconds(r.times.recovery) << '\n'
      << "total_sec " << format_seconds(r.times.total()) << '\n'
      << "model " << cfg.out << '\n';
  return 0;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const WeightedAutomaton wa = staged("load", [&] { return load_model(cfg.model); });
  const Dataset d = staged("load", [&] {
    DatasetBuilder builder(cfg.format, wa.alphabet());
    if (!cfg.eval_input.empty()) {
      builder.add_file(cfg.eval_input);
    } else {
      for (const auto& path : cfg.inputs) builder.add_file(path);
    }
    return builder.build();
  });
  const std::size_t window = cfg.window.value_or(SIZE_MAX);
  const MetricReport r = staged("eval", [&] {
    return cfg.metric == Metric::kBpc ? bits_per_character(wa, d, window)
                                      : rank_score(wa, d, window, cfg.top_k);
  });
  std::ostringstream value;
  value << std::setprecision(17) << r.value;
  out << "metric " << (cfg.metric == Metric::kBpc ? "bpc" : "rank") << " value "
      << value.str() << " events " << r.events << " degenerate " << r.degenerate_events
      << '\n';
  return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const Dataset d = staged("load", [&] { return load_inputs(cfg); });
  const TargetFunction f = staged("target", [&] { return make_target(d, cfg); });
  const Dataset eval = cfg.eval_input.empty()
                           ? d
                           : staged("load", [&] {
                               return load_dataset(cfg.eval_input, cfg.format, d.alphabet);
                             });
  const std::size_t window = cfg.window.value_or(SIZE_MAX);

  struct Row {
    std::string label;
    bool ok = false;
    TrainResult result;
    double bpc = 0.0;
  };
  std::vector<Row> rows;
  for (const auto& text : cfg.strategies) {
    Row row;
    row.label = text;
    try {
      row.result = train_pipeline(f, parse_strategy(text), cfg);
      row.bpc = staged("eval", [&] {
        return bits_per_character(*row.result.automaton, eval, window).value;
      });
      row.ok = true;
    } catch (const Error& e) {
      err << "row " << text << ": error[" << error_tag(e.code()) << "]: " << e.what() << '\n';
    }
    row.result.block.reset();
    rows.push_back(std::move(row));
  }

  std::vector<std::vector<std::string>> cells;
  cells.push_back({"strategy", "size", "struct_rank", "num_rank", "sel_sec", "svd_sec",
                   "recover_sec", "bpc"});
  for (const auto& row : rows) {
    const auto& r = row.result;
    if (!row.ok) {
      cells.push_back({row.label, "-", "-", "-", "-", "-", "-", "failed"});
      continue;
    }
    cells.push_back({row.label, std::to_string(r.rows) + "x" + std::to_string(r.cols),
                     std::to_string(r.structural_rank), std::to_string(r.numeric_rank),
                     format_seconds(r.times.selection), format_seconds(r.times.svd),
                     format_seconds(r.times.recovery), format_metric(row.bpc)});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << (c == 0 ? std::left : std::right) << std::setw(static_cast<int>(width[c]))
          << line[c] << (c + 1 == line.size() ? "\n" : "  ");
    }
  }
  out << std::right;

  if (!cfg.csv.empty()) {
    auto csv = open_output(cfg.csv);
    csv << "strategy,size_p,size_s,struct_rank,num_rank,sel_sec,svd_sec,recover_sec,bpc\n";
    for (const auto& row : rows) {
      const auto& r = row.result;
      csv << row.label << ',';
      if (row.ok) {
        csv << r.rows << ',' << r.cols << ',' << r.structural_rank << ',' << r.numeric_rank
            << ',' << std::setprecision(9) << r.times.selection << ',' << r.times.svd << ','
            << r.times.recovery << ',' << std::setprecision(17) << row.bpc << '\n';
      } else {
        csv << ",,,,,,,\n";
      }
    }
  }
  const bool any_ok = std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.ok; });
  return any_ok ? 0 : 1;
}

int cmd_bench_matching(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  std::optional<std::ofstream> csv;
  if (!cfg.csv.empty()) {
    csv = open_output(cfg.csv);
    *csv << "alphabet,mean_len,count,reps,base_mean_sec,base_sd_sec,fast_mean_sec,"
            "fast_sd_sec,speedup,cardinality,equal\n";
  }
  bool all_equal = true;
  std::vector<double> speedups;
  std::uint64_t grid = 0;
  for (const std::size_t sigma : cfg.alphabet_sizes) {
    for (const double len : cfg.mean_lengths) {
      for (const std::size_t count : cfg.counts) {
        std::vector<double> base;
        std::vector<double> fast;
        bool equal = true;
        std::size_t cardinality = 0;
        for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
          const std::uint64_t seed = cfg.seed * 1000003ULL + grid * 1009ULL + rep;
          const Dataset d = random_corpus({sigma, len, 0.5, count}, seed);
          const TargetFunction f = empirical_probability(d);
          const PrefixSuffixGraph g = PrefixSuffixGraph::from_support(f.support());

          auto start = Clock::now();
          const Matching mb = augmenting_path_matching(g);
          base.push_back(seconds_since(start));
          start = Clock::now();
          const Matching mf = hankel_fast_matching(g);
          fast.push_back(seconds_since(start));

          cardinality = mb.size();
          if (mb.size() != mf.size()) equal = false;
        }
        const double fast_mean = mean(fast);
        const double speedup = fast_mean > 0.0 ? mean(base) / fast_mean : 0.0;
        speedups.push_back(speedup);
        all_equal = all_equal && equal;
        out << "GRID alphabet " << sigma << " mean_len " << len << " count " << count
            << " reps " << cfg.repetitions << " base_mean_sec " << format_seconds(mean(base))
            << " base_sd_sec " << format_seconds(stddev(base)) << " fast_mean_sec "
            << format_seconds(fast_mean) << " fast_sd_sec " << format_seconds(stddev(fast))
            << " speedup " << format_metric(speedup) << " cardinality " << cardinality
            << " equal " << (equal ? "yes" : "no") << '\n';
        if (csv) {
          *csv << sigma << ',' << len << ',' << count << ',' << cfg.repetitions << ','
               << mean(base) << ',' << stddev(base) << ',' << fast_mean << ','
               << stddev(fast) << ',' << speedup << ',' << cardinality << ','
               << (equal ? "yes" : "no") << '\n';
        }
        ++grid;
      }
    }
  }
  out << "SUMMARY grid_points " << grid << " mean_speedup " << format_metric(mean(speedups))
      << " all_equal " << (all_equal ? "yes" : "no") << '\n';
  if (!all_equal) {
    throw Error(ErrorCode::kInconsistentMatching, "engines disagree on matching cardinality");
  }
  return 0;
}

int cmd_probe_wmp(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  ProbeConfig probe;
  probe.generator = parse_probe_generator(cfg.generator);
  probe.alphabet_size = cfg.alphabet_size;
  probe.mean_length = cfg.mean_length;
  probe.num_sequences = cfg.num_sequences;
  if (cfg.max_len) probe.max_length = *cfg.max_len;
  if (cfg.size) probe.diagonal_size = *cfg.size;
  if (cfg.states) probe.automaton_states = *cfg.states;
  const WmpProbeReport report = wmp_probe(probe, cfg.trials, cfg.seed);
  if (cfg.out.empty()) {
    report.write(out);
  } else {
    auto file = open_output(cfg.out);
    report.write(file);
    out << "probe report written to " << cfg.out << '\n';
  }
  return 0;
}

}  // namespace hankelmatch::cli
