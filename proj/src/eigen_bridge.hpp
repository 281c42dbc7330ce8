/*
 * Copyright 2026 The zpencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ZPENCIL_SRC_EIGEN_BRIDGE_HPP
#define ZPENCIL_SRC_EIGEN_BRIDGE_HPP

#include <Eigen/Dense>

#include "zpencil/linalg.hpp"

namespace zpencil::detail {

using RowMajorXd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::MatrixXd to_eigen(const Matrix& x) {
  Eigen::Map<const RowMajorXd> view(x.entries().data(), static_cast<Eigen::Index>(x.rows()),
                                    static_cast<Eigen::Index>(x.cols()));
  return Eigen::MatrixXd(view);
}

inline Eigen::VectorXd to_eigen(const Vector& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline Matrix from_eigen(const Eigen::MatrixXd& m) {
  RowMajorXd rm = m;
  return Matrix(static_cast<std::size_t>(rm.rows()), static_cast<std::size_t>(rm.cols()),
                std::vector<double>(rm.data(), rm.data() + rm.size()));
}

inline Vector from_eigen(const Eigen::VectorXd& v) { return Vector(v.data(), v.data() + v.size()); }

}  // namespace zpencil::detail

#endif  // ZPENCIL_SRC_EIGEN_BRIDGE_HPP
