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

// Sparse Hankel blocks over a prefix/suffix basis.

#ifndef HANKELMATCH_HANKEL_H_
#define HANKELMATCH_HANKEL_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "hankelmatch/corpus.h"
#include "hankelmatch/sequence.h"

namespace hankelmatch {

inline constexpr double kDefaultRankTolerance = 1e-9;
inline constexpr std::size_t kDefaultDenseThreshold = 4096;

// A block (P, S). Both sides are non-empty and duplicate-free.
class Basis {
 public:
  Basis(std::vector<Sequence> prefixes, std::vector<Sequence> suffixes);

  const std::vector<Sequence>& prefixes() const { return prefixes_; }
  const std::vector<Sequence>& suffixes() const { return suffixes_; }
  std::size_t rows() const { return prefixes_.size(); }
  std::size_t cols() const { return suffixes_.size(); }

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  std::vector<Sequence> prefixes_;
  std::vector<Sequence> suffixes_;
};

struct Triplet {
  std::uint32_t row;
  std::uint32_t col;
  double value;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Triplet storage in row-major order. No stored zeros, no duplicates.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  std::span<const Triplet> entries() const { return entries_; }

  double at(std::size_t row, std::size_t col) const;
  double frobenius_norm() const;

  Eigen::MatrixXd to_dense() const;
  Eigen::SparseMatrix<double> to_eigen() const;

  // Rows and columns picked by index, in the given order.
  SparseMatrix submatrix(std::span<const std::uint32_t> rows,
                         std::span<const std::uint32_t> cols) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Triplet> entries_;
};

// Everything the spectral method needs from one block:
//   H(p, s) = f(ps), h_prefix(p) = f(p), h_suffix(s) = f(s),
//   per_symbol[a](p, s) = f(p a s).
struct HankelBlock {
  Alphabet alphabet;
  Basis basis;
  SparseMatrix hankel;
  Eigen::VectorXd h_prefix;
  Eigen::VectorXd h_suffix;
  std::vector<SparseMatrix> per_symbol;
};

// (P_T, S_T) in canonical order.
Basis full_basis(const TargetFunction& f);

HankelBlock build_block(const TargetFunction& f, const Basis& basis);

// Evaluates every cell through a value oracle instead of a sparse support.
// Used when the function is known everywhere (e.g. a ground-truth automaton).
using SequenceOracle = std::function<double(SequenceView)>;
HankelBlock build_block(const SequenceOracle& f, const Alphabet& alphabet,
                        const Basis& basis);

// Number of singular values above tol * sigma_max (0 for the zero matrix).
// Matrices whose smaller side exceeds dense_threshold fall back to a
// rank-revealing sparse QR with the same relative tolerance.
std::size_t numeric_rank(const SparseMatrix& m, double tol = kDefaultRankTolerance,
                         std::size_t dense_threshold = kDefaultDenseThreshold);

// Debug text format, see README. Floats use 17 significant digits.
void write_hankel(std::ostream& out, const Basis& basis, const SparseMatrix& h,
                  const Alphabet& alphabet);

struct HankelText {
  std::vector<std::string> prefix_labels;
  std::vector<std::string> suffix_labels;
  SparseMatrix hankel;
};
HankelText read_hankel(std::istream& in);

}  // namespace hankelmatch

#endif  // HANKELMATCH_HANKEL_H_
