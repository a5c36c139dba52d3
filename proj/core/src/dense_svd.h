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

// Dense SVD through LAPACK's divide-and-conquer driver (dgesdd).

#ifndef HANKELMATCH_SRC_DENSE_SVD_H_
#define HANKELMATCH_SRC_DENSE_SVD_H_

#include <Eigen/Dense>

namespace hankelmatch::detail {

struct ThinSvd {
  Eigen::MatrixXd u;       // rows x k
  Eigen::VectorXd sigma;   // k, non-increasing
  Eigen::MatrixXd v;       // cols x k
};

// k = min(rows, cols). Throws kNumerical when LAPACK does not converge.
Eigen::VectorXd singular_values(Eigen::MatrixXd a);
ThinSvd thin_svd(Eigen::MatrixXd a);

}  // namespace hankelmatch::detail

#endif  // HANKELMATCH_SRC_DENSE_SVD_H_
