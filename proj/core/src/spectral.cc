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

#include "hankelmatch/spectral.h"

#include <algorithm>
#include <random>
#include <string>

#include <Eigen/QR>

#include "dense_svd.h"
#include "hankelmatch/error.h"

namespace hankelmatch {
namespace {

// Truncates a thin SVD to n components and applies the sign convention.
Factorization finish(const Eigen::MatrixXd& u, const Eigen::VectorXd& sigma,
                     const Eigen::MatrixXd& v, std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  Factorization fac;
  fac.U = u.leftCols(k);
  fac.B = v.leftCols(k);
  fac.singular_values = sigma.head(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    Eigen::Index arg = 0;
    fac.B.col(j).cwiseAbs().maxCoeff(&arg);
    if (fac.B(arg, j) < 0.0) {
      fac.B.col(j) *= -1.0;
      fac.U.col(j) *= -1.0;
    }
  }
  fac.F = fac.U * fac.singular_values.asDiagonal();
  return fac;
}

}  // namespace

Factorization truncated_svd(const SparseMatrix& h, std::size_t n,
                            std::size_t dense_threshold) {
  const std::size_t small = std::min(h.rows(), h.cols());
  if (n < 1 || n > small) {
    throw Error(ErrorCode::kInvalidArgument,
                "rank " + std::to_string(n) + " outside [1, " + std::to_string(small) + "]");
  }
  if (small > dense_threshold) {
    throw Error(ErrorCode::kTooLarge, "block of side " + std::to_string(small) +
                                          " exceeds the dense SVD threshold; use the "
                                          "randomized SVD");
  }
  const detail::ThinSvd svd = detail::thin_svd(h.to_dense());
  return finish(svd.u, svd.sigma, svd.v, n);
}

Factorization randomized_svd(const SparseMatrix& h, std::size_t proj_dim,
                             std::size_t n, std::uint64_t seed) {
  const std::size_t small = std::min(h.rows(), h.cols());
  if (n < 1 || n > proj_dim || proj_dim > small) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 1 <= rank <= projection <= " + std::to_string(small));
  }
  const Eigen::SparseMatrix<double> hs = h.to_eigen();
  const auto cols = static_cast<Eigen::Index>(h.cols());
  const auto rows = static_cast<Eigen::Index>(h.rows());
  const auto width = static_cast<Eigen::Index>(proj_dim);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd omega(cols, width);
  for (Eigen::Index j = 0; j < width; ++j) {
    for (Eigen::Index i = 0; i < cols; ++i) omega(i, j) = gauss(rng);
  }

  const Eigen::MatrixXd y = hs * omega;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(rows, width);
  const Eigen::MatrixXd small_b = (hs.transpose() * q).transpose();

  const detail::ThinSvd svd = detail::thin_svd(small_b);
  return finish(q * svd.u, svd.sigma, svd.v, n);
}

WeightedAutomaton recover_wa(const HankelBlock& block, const Factorization& fac) {
  const auto np = static_cast<Eigen::Index>(block.basis.rows());
  const auto ns = static_cast<Eigen::Index>(block.basis.cols());
  if (fac.U.rows() != np || fac.B.rows() != ns || fac.rank() == 0 ||
      fac.U.cols() != fac.B.cols() ||
      fac.singular_values.size() != fac.B.cols()) {
    throw Error(ErrorCode::kDimension, "factorization does not match the block");
  }
  const Eigen::VectorXd& sigma = fac.singular_values;
  const double floor = kRankDeficiencyRatio * sigma(0);
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (!(sigma(i) > floor)) {
      throw Error(ErrorCode::kRankDeficient,
                  "singular value " + std::to_string(i + 1) +
                      " is negligible; requested rank exceeds the block's rank");
    }
  }

  const Eigen::MatrixXd f_pinv = sigma.cwiseInverse().asDiagonal() * fac.U.transpose();
  Eigen::VectorXd alpha0 = fac.B.transpose() * block.h_suffix;
  Eigen::VectorXd alpha_inf = f_pinv * block.h_prefix;
  std::vector<Eigen::MatrixXd> transitions;
  transitions.reserve(block.per_symbol.size());
  for (const auto& h_a : block.per_symbol) {
    const Eigen::MatrixXd hb = h_a.to_eigen() * fac.B;
    transitions.push_back(f_pinv * hb);
  }
  return WeightedAutomaton(block.alphabet, std::move(alpha0), std::move(alpha_inf),
                           std::move(transitions));
}

}  // namespace hankelmatch
