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

#include "hankelmatch/wfa.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "hankelmatch/error.h"
#include "text_format.h"

namespace hankelmatch {
namespace {

constexpr double kRadiusMargin = 1e-6;

void check_symbols(const WeightedAutomaton& wa, SequenceView x) {
  for (Symbol a : x) {
    if (a >= wa.alphabet().size()) {
      throw Error(ErrorCode::kAlphabetMismatch, "symbol id " + std::to_string(a) +
                                                    " not in automaton alphabet");
    }
  }
}

std::string expect_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kParse, std::string("model file ends before ") + what);
  }
  text::strip_cr(line);
  return line;
}

Eigen::VectorXd parse_vector(const std::string& line, std::string_view tag,
                             std::size_t n) {
  const auto f = text::fields(line);
  if (f.empty() || f[0] != tag) {
    throw Error(ErrorCode::kParse, "expected '" + std::string(tag) + "' line");
  }
  if (f.size() - 1 != n) {
    throw Error(ErrorCode::kDimension, std::string(tag) + " has " +
                                           std::to_string(f.size() - 1) +
                                           " entries, expected " + std::to_string(n));
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v(i) = text::parse_double(f[i + 1]);
  return v;
}

}  // namespace

WeightedAutomaton::WeightedAutomaton(Alphabet alphabet, Eigen::VectorXd alpha0,
                                     Eigen::VectorXd alpha_inf,
                                     std::vector<Eigen::MatrixXd> transitions)
    : alphabet_(std::move(alphabet)),
      alpha0_(std::move(alpha0)),
      alpha_inf_(std::move(alpha_inf)),
      transitions_(std::move(transitions)) {
  const auto n = alpha0_.size();
  if (alpha_inf_.size() != n) {
    throw Error(ErrorCode::kDimension, "alpha0 and alpha_inf differ in length");
  }
  if (transitions_.size() != alphabet_.size()) {
    throw Error(ErrorCode::kDimension, "need one transition matrix per symbol");
  }
  for (const auto& a : transitions_) {
    if (a.rows() != n || a.cols() != n) {
      throw Error(ErrorCode::kDimension, "transition matrix is not n x n");
    }
  }
}

bool operator==(const WeightedAutomaton& a, const WeightedAutomaton& b) {
  if (!(a.alphabet_ == b.alphabet_) || a.alpha0_.size() != b.alpha0_.size() ||
      a.transitions_.size() != b.transitions_.size()) {
    return false;
  }
  if (a.alpha0_ != b.alpha0_ || a.alpha_inf_ != b.alpha_inf_) return false;
  for (std::size_t i = 0; i < a.transitions_.size(); ++i) {
    if (a.transitions_[i] != b.transitions_[i]) return false;
  }
  return true;
}

Eigen::VectorXd forward_state(const WeightedAutomaton& wa, SequenceView x) {
  check_symbols(wa, x);
  Eigen::RowVectorXd s = wa.alpha0().transpose();
  for (Symbol a : x) s = s * wa.transition(a);
  return s.transpose();
}

double evaluate(const WeightedAutomaton& wa, SequenceView x) {
  return forward_state(wa, x).dot(wa.alpha_inf());
}

NextSymbolPredictor::NextSymbolPredictor(const WeightedAutomaton& wa,
                                         std::size_t horizon)
    : wa_(wa) {
  const auto n = static_cast<Eigen::Index>(wa.num_states());
  Eigen::MatrixXd total = Eigen::MatrixXd::Zero(n, n);
  for (const auto& a : wa.transitions()) total += a;

  double radius = 0.0;
  if (n > 0) {
    Eigen::EigenSolver<Eigen::MatrixXd> eig(total, /*computeEigenvectors=*/false);
    if (eig.info() != Eigen::Success) {
      throw Error(ErrorCode::kNumerical, "eigenvalue computation failed");
    }
    radius = eig.eigenvalues().cwiseAbs().maxCoeff();
  }

  if (radius < 1.0 - kRadiusMargin) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(Eigen::MatrixXd::Identity(n, n) - total);
    if (!lu.isInvertible()) {
      throw Error(ErrorCode::kNumerical, "I - M is singular");
    }
    continuation_ = lu.solve(wa.alpha_inf());
  } else {
    used_series_ = true;
    Eigen::VectorXd term = wa.alpha_inf();
    continuation_ = term;
    for (std::size_t h = 1; h <= horizon; ++h) {
      term = total * term;
      continuation_ += term;
    }
  }

  symbol_weights_.resize(n, static_cast<Eigen::Index>(wa.alphabet().size()));
  for (std::size_t a = 0; a < wa.alphabet().size(); ++a) {
    symbol_weights_.col(static_cast<Eigen::Index>(a)) =
        wa.transition(static_cast<Symbol>(a)) * continuation_;
  }
}

NextSymbolScores NextSymbolPredictor::scores(const Eigen::VectorXd& state) const {
  const std::size_t k = wa_.alphabet().size();
  NextSymbolScores out;
  out.probabilities.resize(k + 1);
  const Eigen::VectorXd raw_symbols = symbol_weights_.transpose() * state;
  for (std::size_t a = 0; a < k; ++a) out.probabilities[a] = raw_symbols(a);
  out.probabilities[k] = state.dot(wa_.alpha_inf());

  bool any_positive = false;
  for (double& p : out.probabilities) {
    if (p > 0.0 && std::isfinite(p)) {
      any_positive = true;
    } else if (p < 0.0 || std::isnan(p)) {
      p = kProbabilityFloor;
    }
  }
  if (!any_positive) {
    out.degenerate = true;
    std::ranges::fill(out.probabilities, 1.0 / static_cast<double>(k + 1));
    return out;
  }
  double sum = 0.0;
  for (double p : out.probabilities) sum += p;
  if (!std::isfinite(sum)) {
    // +inf scores: split the mass evenly among them.
    for (double& p : out.probabilities) p = std::isinf(p) ? 1.0 : 0.0;
    sum = 0.0;
    for (double p : out.probabilities) sum += p;
  }
  for (double& p : out.probabilities) p /= sum;
  return out;
}

NextSymbolScores NextSymbolPredictor::scores_after(SequenceView context) const {
  return scores(forward_state(wa_, context));
}

NextSymbolScores next_symbol_scores(const WeightedAutomaton& wa, SequenceView context,
                                    std::size_t horizon) {
  return NextSymbolPredictor(wa, horizon).scores_after(context);
}

void write_model(std::ostream& out, const WeightedAutomaton& wa) {
  const std::size_t n = wa.num_states();
  out << "WFA v1\n";
  out << "alphabet " << wa.alphabet().size() << '\n';
  for (std::size_t a = 0; a < wa.alphabet().size(); ++a) {
    out << "symbol " << a << ' ' << wa.alphabet().token(static_cast<Symbol>(a)) << '\n';
  }
  out << "states " << n << '\n';
  auto vec = [&](const char* tag, const Eigen::VectorXd& v) {
    out << tag;
    for (Eigen::Index i = 0; i < v.size(); ++i) out << ' ' << text::format_double(v(i));
    out << '\n';
  };
  vec("a0", wa.alpha0());
  vec("ainf", wa.alpha_inf());
  for (std::size_t a = 0; a < wa.alphabet().size(); ++a) {
    out << "A " << a << '\n';
    const auto& m = wa.transition(static_cast<Symbol>(a));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (j > 0) out << ' ';
        out << text::format_double(m(i, j));
      }
      out << '\n';
    }
  }
  if (!out) throw Error(ErrorCode::kIo, "write failure");
}

WeightedAutomaton read_model(std::istream& in) {
  std::string line = expect_line(in, "header");
  const auto head = text::fields(line);
  if (head.size() != 2 || head[0] != "WFA") {
    throw Error(ErrorCode::kParse, "not a WFA model file");
  }
  if (head[1] != "v1") {
    throw Error(ErrorCode::kVersion, "unsupported model version " + std::string(head[1]));
  }

  line = expect_line(in, "alphabet");
  auto f = text::fields(line);
  if (f.size() != 2 || f[0] != "alphabet") throw Error(ErrorCode::kParse, "expected 'alphabet k'");
  const std::size_t k = text::parse_index(f[1]);
  std::vector<std::string> tokens;
  tokens.reserve(k);
  for (std::size_t a = 0; a < k; ++a) {
    line = expect_line(in, "symbol table");
    // "symbol <id> <token>"; the token is the rest of the line verbatim.
    const std::string prefix = "symbol " + std::to_string(a) + " ";
    if (line.compare(0, prefix.size(), prefix) != 0) {
      throw Error(ErrorCode::kParse, "expected '" + prefix + "<token>'");
    }
    tokens.push_back(line.substr(prefix.size()));
  }

  line = expect_line(in, "states");
  f = text::fields(line);
  if (f.size() != 2 || f[0] != "states") throw Error(ErrorCode::kParse, "expected 'states n'");
  const std::size_t n = text::parse_index(f[1]);

  Eigen::VectorXd alpha0 = parse_vector(expect_line(in, "a0"), "a0", n);
  Eigen::VectorXd alpha_inf = parse_vector(expect_line(in, "ainf"), "ainf", n);

  std::vector<Eigen::MatrixXd> transitions;
  transitions.reserve(k);
  const auto dim = static_cast<Eigen::Index>(n);
  for (std::size_t a = 0; a < k; ++a) {
    line = expect_line(in, "transition header");
    f = text::fields(line);
    if (f.size() != 2 || f[0] != "A" || text::parse_index(f[1]) != a) {
      throw Error(ErrorCode::kParse, "expected 'A " + std::to_string(a) + "'");
    }
    Eigen::MatrixXd m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      line = expect_line(in, "transition row");
      const auto row = text::fields(line);
      if (row.size() != n) {
        throw Error(ErrorCode::kDimension, "transition row has " +
                                               std::to_string(row.size()) +
                                               " entries, expected " + std::to_string(n));
      }
      for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = text::parse_double(row[j]);
    }
    transitions.push_back(std::move(m));
  }
  return WeightedAutomaton(Alphabet(std::move(tokens)), std::move(alpha0),
                           std::move(alpha_inf), std::move(transitions));
}

void save_model(const WeightedAutomaton& wa, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  write_model(out, wa);
}

WeightedAutomaton load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return read_model(in);
}

}  // namespace hankelmatch
