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

#ifndef ZPENCIL_SRC_CLASS_KERNEL_HPP
#define ZPENCIL_SRC_CLASS_KERNEL_HPP

#include "zpencil/digraph.hpp"
#include "zpencil/linalg.hpp"

namespace zpencil::detail {

/// Nonnegative kernel vector of the M-matrix X attached to class J of G.
///
/// Requires that J is a class of G with X_J singular, that every other class
/// with access to J has a nonsingular diagonal block, and that G contains every
/// off-diagonal edge of X. With W the access set of J, rows outside W have no
/// entries in columns of W, so the vector is zero off W. On J it is the
/// positive kernel direction of the irreducible block X_J; on W \ J it solves
/// X_{W\J} y = -X_{W\J,J} x_J through the nonsingular remainder.
///
/// Result has unit max-norm. Throws ConstructionFailed if the class kernel is
/// not one-dimensional and positive within tolerance.
Vector class_kernel_vector(const Matrix& x, const Digraph& g, const IndexSet& cls,
                           const TolerancePolicy& tol);

}  // namespace zpencil::detail

#endif  // ZPENCIL_SRC_CLASS_KERNEL_HPP
