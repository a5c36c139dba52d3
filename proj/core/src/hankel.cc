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

#include "hankelmatch/hankel.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include <Eigen/OrderingMethods>
#include <Eigen/SparseQR>

#include "dense_svd.h"
#include "hankelmatch/error.h"
#include "text_format.h"

namespace hankelmatch {
namespace {

SequenceMap<std::uint32_t> index_of(const std::vector<Sequence>& items) {
  SequenceMap<std::uint32_t> index;
  index.reserve(items.size());
  for (std::uint32_t i = 0; i < items.size(); ++i) index.emplace(items[i], i);
  return index;
}

void check_alphabet(const Basis& basis, std::size_t alphabet_size) {
  auto in_range = [&](const std::vector<Sequence>& side) {
    return std::ranges::all_of(side, [&](const Sequence& s) {
      return std::ranges::all_of(s, [&](Symbol x) { return x < alphabet_size; });
    });
  };
  if (!in_range(basis.prefixes()) || !in_range(basis.suffixes())) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "basis uses symbols outside the function's alphabet");
  }
}

}  // namespace

Basis::Basis(std::vector<Sequence> prefixes, std::vector<Sequence> suffixes)
    : prefixes_(std::move(prefixes)), suffixes_(std::move(suffixes)) {
  if (prefixes_.empty() || suffixes_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "basis sides must be non-empty");
  }
  if (index_of(prefixes_).size() != prefixes_.size() ||
      index_of(suffixes_).size() != suffixes_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "basis contains duplicates");
  }
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols,
                           std::vector<Triplet> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  std::erase_if(entries_, [](const Triplet& t) { return t.value == 0.0; });
  for (const auto& t : entries_) {
    if (t.row >= rows_ || t.col >= cols_) {
      throw Error(ErrorCode::kDimension, "sparse entry out of bounds");
    }
  }
  std::ranges::sort(entries_, [](const Triplet& a, const Triplet& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  auto dup = std::ranges::adjacent_find(entries_, [](const Triplet& a, const Triplet& b) {
    return a.row == b.row && a.col == b.col;
  });
  if (dup != entries_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate sparse entry");
  }
}

double SparseMatrix::at(std::size_t row, std::size_t col) const {
  auto it = std::ranges::lower_bound(entries_, std::pair(row, col), {},
                                     [](const Triplet& t) {
                                       return std::pair<std::size_t, std::size_t>(t.row, t.col);
                                     });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0.0;
}

double SparseMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& t : entries_) sum += t.value * t.value;
  return std::sqrt(sum);
}

Eigen::MatrixXd SparseMatrix::to_dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows_),
                                            static_cast<Eigen::Index>(cols_));
  for (const auto& t : entries_) m(t.row, t.col) = t.value;
  return m;
}

Eigen::SparseMatrix<double> SparseMatrix::to_eigen() const {
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(entries_.size());
  for (const auto& t : entries_) trips.emplace_back(t.row, t.col, t.value);
  Eigen::SparseMatrix<double> m(static_cast<Eigen::Index>(rows_),
                                static_cast<Eigen::Index>(cols_));
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

SparseMatrix SparseMatrix::submatrix(std::span<const std::uint32_t> rows,
                                     std::span<const std::uint32_t> cols) const {
  constexpr auto kAbsent = UINT32_MAX;
  std::vector<std::uint32_t> col_pos(cols_, kAbsent);
  for (std::uint32_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw Error(ErrorCode::kDimension, "column index out of range");
    col_pos[cols[j]] = j;
  }
  std::vector<Triplet> out;
  for (std::uint32_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw Error(ErrorCode::kDimension, "row index out of range");
    auto lo = std::ranges::lower_bound(entries_, rows[i], {}, &Triplet::row);
    for (auto it = lo; it != entries_.end() && it->row == rows[i]; ++it) {
      if (col_pos[it->col] != kAbsent) out.push_back({i, col_pos[it->col], it->value});
    }
  }
  return SparseMatrix(rows.size(), cols.size(), std::move(out));
}

Basis full_basis(const TargetFunction& f) {
  if (f.support_size() == 0) throw Error(ErrorCode::kEmptyInput, "empty support");
  auto sets = observed_prefixes_suffixes(f);
  return Basis(std::move(sets.prefixes), std::move(sets.suffixes));
}

HankelBlock build_block(const TargetFunction& f, const Basis& basis) {
  const Alphabet& alphabet = f.alphabet();
  check_alphabet(basis, alphabet.size());
  const auto rows = index_of(basis.prefixes());
  const auto cols = index_of(basis.suffixes());

  // Every non-zero cell of H or H_a is a cut of exactly one support string,
  // so scanning the cuts of the support visits each cell at most once.
  std::vector<Triplet> h;
  std::vector<std::vector<Triplet>> sigma(alphabet.size());
  const auto support = f.support();
  const auto values = f.values();
  for (std::size_t k = 0; k < support.size(); ++k) {
    const SequenceView w(support[k]);
    for (std::size_t i = 0; i <= w.size(); ++i) {
      auto r = rows.find(w.first(i));
      if (r == rows.end()) continue;
      if (auto c = cols.find(w.subspan(i)); c != cols.end()) {
        h.push_back({r->second, c->second, values[k]});
      }
      if (i < w.size()) {
        if (auto c = cols.find(w.subspan(i + 1)); c != cols.end()) {
          sigma[w[i]].push_back({r->second, c->second, values[k]});
        }
      }
    }
  }

  HankelBlock block{alphabet, basis, {}, {}, {}, {}};
  const std::size_t np = basis.rows();
  const std::size_t ns = basis.cols();
  block.hankel = SparseMatrix(np, ns, std::move(h));
  block.per_symbol.reserve(alphabet.size());
  for (auto& trips : sigma) block.per_symbol.emplace_back(np, ns, std::move(trips));
  block.h_prefix.resize(static_cast<Eigen::Index>(np));
  for (std::size_t i = 0; i < np; ++i) block.h_prefix(i) = f(basis.prefixes()[i]);
  block.h_suffix.resize(static_cast<Eigen::Index>(ns));
  for (std::size_t j = 0; j < ns; ++j) block.h_suffix(j) = f(basis.suffixes()[j]);
  return block;
}

HankelBlock build_block(const SequenceOracle& f, const Alphabet& alphabet,
                        const Basis& basis) {
  check_alphabet(basis, alphabet.size());
  const std::size_t np = basis.rows();
  const std::size_t ns = basis.cols();
  std::vector<Triplet> h;
  std::vector<std::vector<Triplet>> sigma(alphabet.size());
  Sequence buf;
  for (std::uint32_t i = 0; i < np; ++i) {
    const auto& p = basis.prefixes()[i];
    for (std::uint32_t j = 0; j < ns; ++j) {
      const auto& s = basis.suffixes()[j];
      buf.assign(p.begin(), p.end());
      buf.insert(buf.end(), s.begin(), s.end());
      h.push_back({i, j, f(buf)});
      for (Symbol a = 0; a < alphabet.size(); ++a) {
        buf.assign(p.begin(), p.end());
        buf.push_back(a);
        buf.insert(buf.end(), s.begin(), s.end());
        sigma[a].push_back({i, j, f(buf)});
      }
    }
  }
  HankelBlock block{alphabet, basis, {}, {}, {}, {}};
  block.hankel = SparseMatrix(np, ns, std::move(h));
  block.per_symbol.reserve(alphabet.size());
  for (auto& trips : sigma) block.per_symbol.emplace_back(np, ns, std::move(trips));
  block.h_prefix.resize(static_cast<Eigen::Index>(np));
  for (std::size_t i = 0; i < np; ++i) block.h_prefix(i) = f(basis.prefixes()[i]);
  block.h_suffix.resize(static_cast<Eigen::Index>(ns));
  for (std::size_t j = 0; j < ns; ++j) block.h_suffix(j) = f(basis.suffixes()[j]);
  return block;
}

std::size_t numeric_rank(const SparseMatrix& m, double tol,
                         std::size_t dense_threshold) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "rank tolerance must be positive");
  if (m.nnz() == 0) return 0;

  if (std::min(m.rows(), m.cols()) <= dense_threshold) {
    const Eigen::VectorXd sv = detail::singular_values(m.to_dense());
    const double cutoff = tol * sv(0);
    return static_cast<std::size_t>((sv.array() > cutoff).count());
  }

  // ||H||_F bounds sigma_max from above, so the pivot threshold stays
  // relative to the matrix scale.
  Eigen::SparseMatrix<double> sm = m.to_eigen();
  sm.makeCompressed();
  Eigen::SparseQR<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> qr;
  qr.setPivotThreshold(tol * m.frobenius_norm());
  qr.compute(sm);
  if (qr.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumerical, "sparse QR failed");
  }
  return static_cast<std::size_t>(qr.rank());
}

void write_hankel(std::ostream& out, const Basis& basis, const SparseMatrix& h,
                  const Alphabet& alphabet) {
  if (h.rows() != basis.rows() || h.cols() != basis.cols()) {
    throw Error(ErrorCode::kDimension, "matrix does not match basis");
  }
  out << "HANKEL v1 " << h.rows() << ' ' << h.cols() << ' ' << h.nnz() << '\n';
  auto label = [&](char tag, std::size_t id, const Sequence& s) {
    out << tag << ' ' << id;
    if (!s.empty()) out << ' ' << alphabet.render(s);
    out << '\n';
  };
  for (std::size_t i = 0; i < basis.rows(); ++i) label('P', i, basis.prefixes()[i]);
  for (std::size_t j = 0; j < basis.cols(); ++j) label('S', j, basis.suffixes()[j]);
  for (const auto& t : h.entries()) {
    out << "E " << t.row << ' ' << t.col << ' ' << text::format_double(t.value) << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "write failure");
}

HankelText read_hankel(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kParse, "missing HANKEL header");
  text::strip_cr(line);
  const auto head = text::fields(line);
  if (head.size() != 5 || head[0] != "HANKEL") {
    throw Error(ErrorCode::kParse, "malformed HANKEL header");
  }
  if (head[1] != "v1") {
    throw Error(ErrorCode::kVersion, "unsupported HANKEL version " + std::string(head[1]));
  }
  const auto rows = text::parse_index(head[2]);
  const auto cols = text::parse_index(head[3]);
  const auto nnz = text::parse_index(head[4]);

  HankelText result;
  result.prefix_labels.resize(rows);
  result.suffix_labels.resize(cols);
  std::vector<bool> seen_p(rows, false);
  std::vector<bool> seen_s(cols, false);
  std::vector<Triplet> entries;
  entries.reserve(nnz);

  const std::size_t expected = rows + cols + nnz;
  for (std::size_t n = 0; n < expected; ++n) {
    if (!std::getline(in, line)) throw Error(ErrorCode::kParse, "truncated HANKEL body");
    text::strip_cr(line);
    if (line.size() < 3 || line[1] != ' ') throw Error(ErrorCode::kParse, "malformed HANKEL line");
    const char tag = line[0];
    std::string_view rest = std::string_view(line).substr(2);
    if (tag == 'P' || tag == 'S') {
      const auto space = rest.find(' ');
      const auto id = text::parse_index(rest.substr(0, space));
      const std::string lab = space == std::string_view::npos
                                  ? std::string()
                                  : std::string(rest.substr(space + 1));
      auto& labels = tag == 'P' ? result.prefix_labels : result.suffix_labels;
      auto& seen = tag == 'P' ? seen_p : seen_s;
      if (id >= labels.size() || seen[id]) {
        throw Error(ErrorCode::kDimension, "bad or repeated basis id in HANKEL file");
      }
      seen[id] = true;
      labels[id] = lab;
    } else if (tag == 'E') {
      const auto f = text::fields(rest);
      if (f.size() != 3) throw Error(ErrorCode::kParse, "malformed HANKEL entry");
      entries.push_back({static_cast<std::uint32_t>(text::parse_index(f[0])),
                         static_cast<std::uint32_t>(text::parse_index(f[1])),
                         text::parse_double(f[2])});
    } else {
      throw Error(ErrorCode::kParse, "unknown HANKEL line tag");
    }
  }
  if (std::ranges::count(seen_p, false) != 0 || std::ranges::count(seen_s, false) != 0 ||
      entries.size() != nnz) {
    throw Error(ErrorCode::kDimension, "HANKEL body does not match its header");
  }
  result.hankel = SparseMatrix(rows, cols, std::move(entries));
  return result;
}

}  // namespace hankelmatch
