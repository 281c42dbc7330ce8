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

#ifndef ZPENCIL_ZMATRIX_HPP
#define ZPENCIL_ZMATRIX_HPP

#include <compare>
#include <cstddef>

#include "zpencil/linalg.hpp"
#include "zpencil/subsets.hpp"

namespace zpencil {

/// X = qI - P with P >= 0. The canonical choice q = max_i X_ii leaves P with a
/// zero somewhere on its diagonal.
struct ZDecomposition {
  Matrix x;
  double q = 0.0;
  Matrix p;
};

enum class MStatus { NotM, SingularM, NonsingularM };

const char* to_string(MStatus s) noexcept;

inline bool is_m(MStatus s) noexcept { return s != MStatus::NotM; }

/// Index s of the class L_s, 0 <= s <= n.
struct LsIndex {
  std::size_t value = 0;
  friend auto operator<=>(const LsIndex&, const LsIndex&) = default;
};

/// Off-diagonal entries all <= abs_floor.
bool is_z_matrix(const Matrix& x, const TolerancePolicy& tol);

/// Throws NotZ when x is not a Z-matrix.
ZDecomposition z_decompose(const Matrix& x, const TolerancePolicy& tol);

/// Band half-width used for three-way M-matrix comparisons on x.
double m_band(const Matrix& x, const TolerancePolicy& tol) noexcept;

/// Compares q against rho(P) for the canonical decomposition using the band
/// m_band(x). SingularM covers the whole band |q - rho(P)| <= delta.
MStatus m_status(const Matrix& x, const TolerancePolicy& tol);
/// Same comparison with a caller-supplied band; used when x is a principal
/// submatrix and the band must come from the parent matrix.
MStatus m_status(const Matrix& x, const TolerancePolicy& tol, double delta);

/// max over |J| = s of rho(P_J). s == n + 1 returns +infinity.
double rho_s(const Matrix& p, std::size_t s, const TolerancePolicy& tol,
             const EnumerationGuard& guard = {});

/// Class index from principal-submatrix M-matrix tests: 0 when a diagonal
/// entry is below -delta, otherwise the largest k such that no principal
/// submatrix of order <= k fails to be an M-matrix.
LsIndex classify_direct(const Matrix& x, const TolerancePolicy& tol,
                        const EnumerationGuard& guard = {});

}  // namespace zpencil

#endif  // ZPENCIL_ZMATRIX_HPP
