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

#include "zpencil/eigenstructure.hpp"

#include "class_kernel.hpp"
#include "zpencil/error.hpp"
#include "zpencil/zmatrix.hpp"

namespace zpencil {

std::vector<ClassLabel> class_labels(const Matrix& x, const Digraph& g, const TolerancePolicy& tol) {
  if (g.order() != x.rows()) throw Error(ErrorCode::Dimension, "class_labels: graph order differs");
  if (m_status(x, tol) == MStatus::NotM) {
    throw Error(ErrorCode::NotM, "class_labels: matrix is not an M-matrix");
  }
  const ReducedGraph r = reduced_graph(g);
  const auto& part = r.base().classes;
  std::vector<ClassLabel> labels(part.size());
  for (std::size_t c = 0; c < part.size(); ++c) {
    labels[c].cls = part[c];
    labels[c].singular = is_singular(submatrix(x, part[c]), tol);
  }
  for (std::size_t c = 0; c < part.size(); ++c) {
    if (!labels[c].singular) continue;
    bool clean = true;
    for (std::size_t k = 0; k < part.size() && clean; ++k) {
      if (k != c && r.has_access(k, c) && labels[k].singular) clean = false;
    }
    labels[c].distinguished = clean;
  }
  return labels;
}

namespace {

std::vector<EigenBasisVector> basis_from_labels(const Matrix& x, const Digraph& g,
                                                const std::vector<ClassLabel>& labels,
                                                const TolerancePolicy& tol) {
  std::vector<EigenBasisVector> out;
  for (const ClassLabel& l : labels) {
    if (!l.distinguished) continue;
    EigenBasisVector v;
    v.x = detail::class_kernel_vector(x, g, l.cls, tol);
    v.origin_class = l.cls;
    v.support = access_set(g, l.cls);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<EigenBasisVector> m_nullbasis(const Matrix& x, const TolerancePolicy& tol) {
  const MStatus st = m_status(x, tol);
  if (st == MStatus::NotM) throw Error(ErrorCode::NotM, "m_nullbasis: matrix is not an M-matrix");
  if (st == MStatus::NonsingularM) return {};
  const Digraph g = digraph_of(x, tol);
  return basis_from_labels(x, g, class_labels(x, g, tol), tol);
}

bool pencil_gamma_is_union(double rho_ab, const TolerancePolicy& tol) noexcept {
  return rho_ab > tol.rel_sing;
}

Digraph pencil_gamma(const Pencil& p, double rho_ab, const TolerancePolicy& tol) {
  return pencil_gamma_is_union(rho_ab, tol) ? union_digraph(p, tol) : digraph_of(p.a(), tol);
}

PencilEigenstructure pencil_eigenstructure(const Pencil& p, const SpectralSummary& summary,
                                           const TolerancePolicy& tol) {
  PencilEigenstructure e;
  e.gamma_is_union = pencil_gamma_is_union(summary.rho_ab, tol);
  e.gamma = pencil_gamma(p, summary.rho_ab, tol);
  e.rho_near_zero = summary.rho_ab < 10.0 * tol.rel_sing;
  const Matrix x = p.at(summary.rho_ab);
  e.labels = class_labels(x, e.gamma, tol);
  e.basis = basis_from_labels(x, e.gamma, e.labels, tol);
  return e;
}

std::vector<EigenBasisVector> pencil_eigenbasis(const Pencil& p, const SpectralSummary& summary,
                                                const TolerancePolicy& tol) {
  return pencil_eigenstructure(p, summary, tol).basis;
}

}  // namespace zpencil
