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

#include "hankelmatch/eval.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#include "hankelmatch/error.h"
#include "hankelmatch/matching.h"
#include "hankelmatch/synthetic.h"

namespace hankelmatch {
namespace {

// Calls visit(scores, target, count) for every prediction event in d.
template <typename Visit>
void for_each_event(const WeightedAutomaton& wa, const Dataset& d, std::size_t window,
                    std::size_t horizon, Visit&& visit) {
  if (!(wa.alphabet() == d.alphabet)) {
    throw Error(ErrorCode::kAlphabetMismatch, "dataset alphabet differs from the model's");
  }
  const NextSymbolPredictor predictor(wa, horizon);
  const auto stop = static_cast<std::uint32_t>(wa.alphabet().size());
  for (const auto& [seq, count] : d.sequences) {
    // With the whole history in view the state can be carried forward.
    const bool incremental = window >= seq.size();
    Eigen::VectorXd state = wa.alpha0();
    for (std::size_t pos = 0; pos <= seq.size(); ++pos) {
      NextSymbolScores scores;
      if (incremental) {
        scores = predictor.scores(state);
      } else {
        const std::size_t begin = pos > window ? pos - window : 0;
        scores = predictor.scores_after(SequenceView(seq).subspan(begin, pos - begin));
      }
      const std::uint32_t target = pos < seq.size() ? seq[pos] : stop;
      visit(scores, target, count);
      if (incremental && pos < seq.size()) {
        state = (state.transpose() * wa.transition(seq[pos])).transpose();
      }
    }
  }
}

std::size_t rank_of(const std::vector<double>& p, std::uint32_t target) {
  std::size_t r = 1;
  for (std::uint32_t c = 0; c < p.size(); ++c) {
    if (p[c] > p[target] || (p[c] == p[target] && c < target)) ++r;
  }
  return r;
}

MetricReport finish_report(double sum, std::uint64_t events, std::uint64_t degenerate) {
  if (events == 0) throw Error(ErrorCode::kEmptyInput, "no prediction events");
  return {sum / static_cast<double>(events), events, degenerate};
}

}  // namespace

MetricReport bits_per_character(const WeightedAutomaton& wa, const Dataset& d,
                                std::size_t window, std::size_t horizon) {
  double sum = 0.0;
  std::uint64_t events = 0;
  std::uint64_t degenerate = 0;
  for_each_event(wa, d, window, horizon,
                 [&](const NextSymbolScores& s, std::uint32_t target, std::uint64_t count) {
                   const double p = std::max(s.probabilities[target], kProbabilityFloor);
                   sum += static_cast<double>(count) * -std::log2(p);
                   events += count;
                   if (s.degenerate) degenerate += count;
                 });
  return finish_report(sum, events, degenerate);
}

MetricReport rank_score(const WeightedAutomaton& wa, const Dataset& d, std::size_t window,
                        std::size_t top_k, std::size_t horizon) {
  double sum = 0.0;
  std::uint64_t events = 0;
  std::uint64_t degenerate = 0;
  for_each_event(wa, d, window, horizon,
                 [&](const NextSymbolScores& s, std::uint32_t target, std::uint64_t count) {
                   const std::size_t r = rank_of(s.probabilities, target);
                   if (r <= top_k) {
                     sum += static_cast<double>(count) / std::log2(static_cast<double>(r + 1));
                   }
                   events += count;
                   if (s.degenerate) degenerate += count;
                 });
  return finish_report(sum, events, degenerate);
}

ProbeGenerator parse_probe_generator(std::string_view name) {
  if (name == "random-sequences") return ProbeGenerator::kRandomSequences;
  if (name == "random-wa") return ProbeGenerator::kRandomAutomaton;
  if (name == "diagonal") return ProbeGenerator::kDiagonal;
  throw Error(ErrorCode::kInvalidArgument, "unknown generator '" + std::string(name) +
                                               "' (random-sequences, random-wa, diagonal)");
}

ProbeTrial probe_matrix(const SparseMatrix& h, std::uint64_t seed, double tolerance,
                        std::size_t spot_checks) {
  ProbeTrial t;
  t.rows = h.rows();
  t.cols = h.cols();
  const PrefixSuffixGraph g = PrefixSuffixGraph::from_pattern(h);
  const Matching m = augmenting_path_matching(g);
  t.structural_rank = m.size();
  t.numeric_full = numeric_rank(h, tolerance);

  std::vector<std::uint32_t> rows;
  std::vector<std::uint32_t> cols;
  for (const auto& [p, s] : m.pairs()) {
    rows.push_back(p);
    cols.push_back(s);
  }
  t.numeric_sub = rows.empty() ? 0 : numeric_rank(h.submatrix(rows, cols), tolerance);

  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> all_rows(h.rows());
  std::vector<std::uint32_t> all_cols(h.cols());
  std::iota(all_rows.begin(), all_rows.end(), 0u);
  std::iota(all_cols.begin(), all_cols.end(), 0u);
  const std::size_t floor = std::max<std::size_t>(t.structural_rank, 1);
  t.wmp_spot_check = true;
  for (std::size_t c = 0; c < spot_checks; ++c) {
    const std::size_t nr = std::uniform_int_distribution<std::size_t>(
        std::min(floor, h.rows()), h.rows())(rng);
    const std::size_t nc = std::uniform_int_distribution<std::size_t>(
        std::min(floor, h.cols()), h.cols())(rng);
    std::shuffle(all_rows.begin(), all_rows.end(), rng);
    std::shuffle(all_cols.begin(), all_cols.end(), rng);
    std::vector<std::uint32_t> r(all_rows.begin(), all_rows.begin() + nr);
    std::vector<std::uint32_t> k(all_cols.begin(), all_cols.begin() + nc);
    std::sort(r.begin(), r.end());
    std::sort(k.begin(), k.end());
    const SparseMatrix sub = h.submatrix(r, k);
    if (structural_rank(sub) != numeric_rank(sub, tolerance)) t.wmp_spot_check = false;
  }
  return t;
}

WmpProbeReport summarize_probe(std::vector<ProbeTrial> trials) {
  WmpProbeReport report;
  report.trials = std::move(trials);
  if (report.trials.empty()) return report;
  double gap_sum = 0.0;
  double sub_sum = 0.0;
  for (const auto& t : report.trials) {
    const std::size_t gap = t.structural_rank - std::min(t.structural_rank, t.numeric_full);
    const std::size_t sub = t.numeric_full - std::min(t.numeric_full, t.numeric_sub);
    gap_sum += static_cast<double>(gap);
    sub_sum += static_cast<double>(sub);
    report.max_gap = std::max(report.max_gap, gap);
    report.max_sub_gap = std::max(report.max_sub_gap, sub);
  }
  const auto n = static_cast<double>(report.trials.size());
  report.mean_gap = gap_sum / n;
  report.mean_sub_gap = sub_sum / n;
  return report;
}

void WmpProbeReport::write(std::ostream& out) const {
  std::size_t spot_failures = 0;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const auto& t = trials[i];
    out << "TRIAL " << i << " struct " << t.structural_rank << " num_full "
        << t.numeric_full << " num_sub " << t.numeric_sub << " size " << t.rows << 'x'
        << t.cols << " spot " << (t.wmp_spot_check ? "ok" : "mismatch") << '\n';
    if (!t.wmp_spot_check) ++spot_failures;
  }
  out << "SUMMARY trials " << trials.size() << " mean_gap " << mean_gap << " max_gap "
      << max_gap << " mean_sub_gap " << mean_sub_gap << " max_sub_gap " << max_sub_gap
      << " spot_mismatches " << spot_failures << '\n';
}

WmpProbeReport wmp_probe(const ProbeConfig& config, std::size_t trials,
                         std::uint64_t seed) {
  std::vector<ProbeTrial> out;
  out.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t s = seed + i;
    SparseMatrix h;
    if (config.generator == ProbeGenerator::kDiagonal) {
      std::mt19937_64 rng(s);
      std::uniform_real_distribution<double> mag(0.1, 1.0);
      std::vector<Triplet> entries;
      for (std::uint32_t j = 0; j < config.diagonal_size; ++j) {
        entries.push_back({j, j, (rng() & 1u) ? mag(rng) : -mag(rng)});
      }
      h = SparseMatrix(config.diagonal_size, config.diagonal_size, std::move(entries));
    } else {
      Dataset d = config.generator == ProbeGenerator::kRandomSequences
                      ? random_corpus({config.alphabet_size, config.mean_length, 0.5,
                                       config.num_sequences},
                                      s)
                      : sample_corpus(random_pfa(config.automaton_states,
                                                 config.alphabet_size, 0.25, s),
                                      config.num_sequences, config.max_length, s ^ 0x9e37u);
      const TargetFunction f = empirical_probability(d);
      if (f.support().empty()) {
        throw Error(ErrorCode::kEmptyInput, "generator produced an empty support");
      }
      h = build_block(f, full_basis(f)).hankel;
    }
    out.push_back(probe_matrix(h, s, config.tolerance, config.spot_checks));
  }
  return summarize_probe(std::move(out));
}

}  // namespace hankelmatch
