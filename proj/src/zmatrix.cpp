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

#include "zpencil/zmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zpencil/error.hpp"

namespace zpencil {

const char* to_string(MStatus s) noexcept {
  switch (s) {
    case MStatus::NotM:
      return "NotM";
    case MStatus::SingularM:
      return "SingularM";
    case MStatus::NonsingularM:
      return "NonsingularM";
  }
  return "?";
}

bool is_z_matrix(const Matrix& x, const TolerancePolicy& tol) {
  if (!x.square()) return false;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (i != j && x(i, j) > tol.abs_floor) return false;
    }
  }
  return true;
}

ZDecomposition z_decompose(const Matrix& x, const TolerancePolicy& tol) {
  if (!is_z_matrix(x, tol)) throw Error(ErrorCode::NotZ, "matrix is not a Z-matrix");
  const std::size_t n = x.rows();
  double q = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) q = std::max(q, x(i, i));
  if (n == 0) q = 0.0;
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Off-diagonal entries inside the abs_floor slack clamp to zero.
      const double v = (i == j ? q : 0.0) - x(i, j);
      p.set(i, j, std::max(v, 0.0));
    }
  }
  return ZDecomposition{x, q, std::move(p)};
}

double m_band(const Matrix& x, const TolerancePolicy& tol) noexcept {
  return tol.rel_sing * std::max(1.0, x.norm_inf());
}

MStatus m_status(const Matrix& x, const TolerancePolicy& tol, double delta) {
  const ZDecomposition d = z_decompose(x, tol);
  const double gap = d.q - spectral_radius(d.p, tol);
  if (gap > delta) return MStatus::NonsingularM;
  if (gap < -delta) return MStatus::NotM;
  return MStatus::SingularM;
}

MStatus m_status(const Matrix& x, const TolerancePolicy& tol) {
  return m_status(x, tol, m_band(x, tol));
}

double rho_s(const Matrix& p, std::size_t s, const TolerancePolicy& tol,
             const EnumerationGuard& guard) {
  if (!p.square()) throw Error(ErrorCode::Dimension, "rho_s: matrix is not square");
  const std::size_t n = p.rows();
  if (s == n + 1) return std::numeric_limits<double>::infinity();
  if (s == 0 || s > n + 1) throw Error(ErrorCode::OutOfRange, "rho_s: s out of range");
  guard.require(n);
  double best = 0.0;
  for_each_subset(n, s, [&](const IndexSet& j) {
    best = std::max(best, spectral_radius(submatrix(p, j), tol));
    return true;
  });
  return best;
}

LsIndex classify_direct(const Matrix& x, const TolerancePolicy& tol,
                        const EnumerationGuard& guard) {
  if (!is_z_matrix(x, tol)) throw Error(ErrorCode::NotZ, "classify_direct: not a Z-matrix");
  const std::size_t n = x.rows();
  guard.require(n);
  const double delta = m_band(x, tol);
  for (std::size_t i = 0; i < n; ++i) {
    if (x(i, i) < -delta) return LsIndex{0};
  }
  // Principal submatrices of M-matrices are M-matrices, so the first order
  // with a failing submatrix ends the scan.
  for (std::size_t k = 2; k <= n; ++k) {
    bool all_m = true;
    for_each_subset(n, k, [&](const IndexSet& j) {
      all_m = is_m(m_status(submatrix(x, j), tol, delta));
      return all_m;
    });
    if (!all_m) return LsIndex{k - 1};
  }
  return LsIndex{n};
}

}  // namespace zpencil
