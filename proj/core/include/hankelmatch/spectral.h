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

// Rank-n factorization H ~ F B^T and recovery of automaton operators.

#ifndef HANKELMATCH_SPECTRAL_H_
#define HANKELMATCH_SPECTRAL_H_

#include <cstdint>

#include <Eigen/Dense>

#include "hankelmatch/hankel.h"
#include "hankelmatch/wfa.h"

namespace hankelmatch {

// F = U diag(singular_values), B = V. Singular values are non-increasing.
// Sign convention: the largest-magnitude entry of every column of B is
// positive.
struct Factorization {
  Eigen::MatrixXd F;
  Eigen::MatrixXd B;
  Eigen::MatrixXd U;
  Eigen::VectorXd singular_values;

  std::size_t rank() const { return static_cast<std::size_t>(singular_values.size()); }
};

// Dense SVD of H, truncated to n. Requires 1 <= n <= min(rows, cols) and
// min(rows, cols) <= dense_threshold (kTooLarge otherwise).
Factorization truncated_svd(const SparseMatrix& h, std::size_t n,
                            std::size_t dense_threshold = kDefaultDenseThreshold);

// Gaussian sketch Y = H Omega of width proj_dim, Q = orth(Y), dense SVD of
// Q^T H, lifted back through Q. Requires n <= proj_dim <= min(rows, cols).
Factorization randomized_svd(const SparseMatrix& h, std::size_t proj_dim,
                             std::size_t n, std::uint64_t seed);

inline constexpr double kRankDeficiencyRatio = 1e-12;

// alpha0^T = h_S^T B, alpha_inf = F^+ h_P, A_a = F^+ H_a B with
// F^+ = diag(sigma)^{-1} U^T. Throws kRankDeficient when a singular value is
// below 1e-12 sigma_max.
WeightedAutomaton recover_wa(const HankelBlock& block, const Factorization& fac);

}  // namespace hankelmatch

#endif  // HANKELMATCH_SPECTRAL_H_
