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

#include "dense_svd.h"

#include <algorithm>
#include <string>

#include <lapacke.h>

#include "hankelmatch/error.h"

namespace hankelmatch::detail {
namespace {

void check(lapack_int info) {
  if (info > 0) throw Error(ErrorCode::kNumerical, "SVD did not converge");
  if (info < 0) {
    throw Error(ErrorCode::kNumerical, "dgesdd rejected argument " + std::to_string(-info));
  }
}

}  // namespace

Eigen::VectorXd singular_values(Eigen::MatrixXd a) {
  const auto m = static_cast<lapack_int>(a.rows());
  const auto n = static_cast<lapack_int>(a.cols());
  Eigen::VectorXd s(std::min(m, n));
  if (s.size() == 0) return s;
  check(LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n, a.data(), std::max(1, m), s.data(),
                       nullptr, 1, nullptr, 1));
  return s;
}

ThinSvd thin_svd(Eigen::MatrixXd a) {
  const auto m = static_cast<lapack_int>(a.rows());
  const auto n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  ThinSvd out;
  out.sigma.resize(k);
  out.u.resize(m, k);
  Eigen::MatrixXd vt(k, n);
  if (k > 0) {
    check(LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', m, n, a.data(), std::max(1, m),
                         out.sigma.data(), out.u.data(), std::max(1, m), vt.data(),
                         std::max(1, k)));
  }
  out.v = vt.transpose();
  return out;
}

}  // namespace hankelmatch::detail
