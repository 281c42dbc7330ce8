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

#ifndef ZPENCIL_EIGENSTRUCTURE_HPP
#define ZPENCIL_EIGENSTRUCTURE_HPP

#include <vector>

#include "zpencil/digraph.hpp"
#include "zpencil/linalg.hpp"
#include "zpencil/pencil.hpp"

namespace zpencil {

struct ClassLabel {
  IndexSet cls;
  bool singular = false;
  /// Singular, and every other class with access to it has a nonsingular block.
  bool distinguished = false;
};

/// Nonnegative kernel vector certified by one distinguished class.
struct EigenBasisVector {
  Vector x;              ///< unit max-norm, nonnegative
  IndexSet origin_class; ///< the distinguished class it belongs to
  IndexSet support;      ///< predicted positive set: access set of origin_class
};

/// Labels the classes of g (in the canonical class order) by the singularity
/// of the matching diagonal blocks of the M-matrix x. Throws NotM otherwise.
std::vector<ClassLabel> class_labels(const Matrix& x, const Digraph& g, const TolerancePolicy& tol);

/// Extremal nonnegative nullspace vectors of an M-matrix, one per
/// distinguished singular class of G(x). Empty for a nonsingular M-matrix.
std::vector<EigenBasisVector> m_nullbasis(const Matrix& x, const TolerancePolicy& tol);

/// The graph used for the pencil eigenbasis: G(A) u G(B) when rho(A,B) > 0,
/// G(A) when rho(A,B) is zero (rho_ab <= rel_sing).
Digraph pencil_gamma(const Pencil& p, double rho_ab, const TolerancePolicy& tol);
bool pencil_gamma_is_union(double rho_ab, const TolerancePolicy& tol) noexcept;

struct PencilEigenstructure {
  bool gamma_is_union = true;
  Digraph gamma;
  std::vector<ClassLabel> labels;
  std::vector<EigenBasisVector> basis;
  /// rho(A,B) is below 10 * rel_sing, so the choice of gamma is fragile.
  bool rho_near_zero = false;
};

PencilEigenstructure pencil_eigenstructure(const Pencil& p, const SpectralSummary& summary,
                                           const TolerancePolicy& tol);

/// Nonnegative eigenvectors for rho(A,B), one per class of gamma satisfying
/// the singular and distinguished conditions.
std::vector<EigenBasisVector> pencil_eigenbasis(const Pencil& p, const SpectralSummary& summary,
                                                const TolerancePolicy& tol);

}  // namespace zpencil

#endif  // ZPENCIL_EIGENSTRUCTURE_HPP
