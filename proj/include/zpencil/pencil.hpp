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

#ifndef ZPENCIL_PENCIL_HPP
#define ZPENCIL_PENCIL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zpencil/digraph.hpp"
#include "zpencil/linalg.hpp"
#include "zpencil/subsets.hpp"
#include "zpencil/zmatrix.hpp"

namespace zpencil {

/// The family tB - A. Both matrices are square of the same order n >= 1.
class Pencil {
 public:
  Pencil(Matrix a, Matrix b);

  const Matrix& a() const noexcept { return a_; }
  const Matrix& b() const noexcept { return b_; }
  std::size_t order() const noexcept { return a_.rows(); }

  /// tB - A
  Matrix at(double t) const;
  /// Subpencil (A_J, B_J).
  Pencil restrict_to(const IndexSet& j) const;

 private:
  Matrix a_;
  Matrix b_;
};

struct Violation {
  int condition = 0;  ///< 1, 2 or 3
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
  double value = 0.0;
  std::string message;
};

struct ValidationReport {
  bool c1 = false;  ///< A >= 0
  bool c2 = false;  ///< b_ij <= a_ij off the diagonal
  bool c3 = false;  ///< some u > 0 with (B - A)u > 0
  std::optional<Vector> witness_u;
  std::vector<Violation> violations;

  bool ok() const noexcept { return c1 && c2 && c3; }
};

/// Checks the three standing conditions. Condition (3) is decided through the
/// nonsingular M-matrix test on B - A, and u = (B - A)^{-1} 1 is reported as
/// the witness.
ValidationReport validate(const Pencil& p, const TolerancePolicy& tol);

struct SpectralSummary {
  double mu = 0.0;      ///< rho((B - A)^{-1} A)
  double rho_ab = 0.0;  ///< mu / (1 + mu)
  /// lambda = mu_i / (1 + mu_i) over the eigenvalues mu_i != -1 of
  /// (B - A)^{-1} A, sorted by decreasing real part.
  std::vector<Complex> eigenvalues;
};

/// mu -> mu / (1 + mu)
double to_pencil_eigenvalue(double mu) noexcept;
Complex to_pencil_eigenvalue(Complex mu) noexcept;

/// (B_J - A_J)^{-1} A_J for the whole pencil; entries within rounding of zero
/// are clamped so the result is exactly nonnegative.
Matrix transfer_matrix(const Pencil& p, const TolerancePolicy& tol);

/// rho((B_J - A_J)^{-1} A_J)
double subpencil_mu(const Pencil& p, const IndexSet& j, const TolerancePolicy& tol);

/// Throws ValidationFailed unless all three conditions hold.
SpectralSummary spectral_summary(const Pencil& p, const TolerancePolicy& tol);

struct ThresholdTable {
  Vector sigma;                   ///< sigma[s-1] = sigma_s, s = 1..n
  Vector tau;                     ///< tau[s] = tau_s, s = 0..n, tau[0] = 0
  std::vector<IndexSet> argmax;   ///< argmax[s-1]: lexicographically first J attaining sigma_s
  /// Class of -A. Every principal submatrix of -A of order below the girth of
  /// G(A) is a singular M-matrix, so this is min(n, girth - 1); it can exceed
  /// the class just to the right of t = 0.
  std::size_t class_at_zero = 0;

  std::size_t order() const noexcept { return sigma.size(); }
};

ThresholdTable thresholds(const Pencil& p, const TolerancePolicy& tol,
                          const EnumerationGuard& guard = {});

/// Largest k with tau_k <= t + delta, delta = rel_sing * max(1, t), for
/// t > 0; tbl.class_at_zero at t = 0.
LsIndex classify_at(const Pencil& p, double t, const ThresholdTable& tbl,
                    const TolerancePolicy& tol);

struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = false;
  LsIndex s;

  bool contains(double t) const noexcept {
    return (lo_closed ? t >= lo : t > lo) && (hi_closed ? t <= hi : t < hi);
  }
};

struct IntervalPartition {
  std::vector<Segment> segments;
};

/// Segments [tau_s, tau_{s+1}) -> L_s and [tau_n, 1] -> L_n, with empty
/// intervals (coincident thresholds, within the rel_sing band) dropped. When
/// the class at t = 0 differs from the first segment's, a point segment
/// [0, 0] is placed in front and the next segment opens at 0.
IntervalPartition partition(const Pencil& p, const ThresholdTable& tbl,
                            const TolerancePolicy& tol);

/// M-matrix status of tB - A for t in [0, 1].
MStatus m_trichotomy(const Pencil& p, double t, const TolerancePolicy& tol);

struct ClassBound {
  IndexSet cls;
  std::size_t size = 0;
  /// Largest s permitted for tB - A in L_s when 0 < t < rho(A,B).
  std::size_t max_s = 0;
  /// True when the class is all of <n>, giving s <= n - 1; otherwise s < size.
  bool full_order = false;
};

/// Bounds for every class J of `part` whose subpencil attains rho(A,B).
std::vector<ClassBound> zs_bound(const Pencil& p, const ThresholdTable& tbl,
                                 const ClassPartition& part, const TolerancePolicy& tol);

/// G(A) u G(B)
Digraph union_digraph(const Pencil& p, const TolerancePolicy& tol);

}  // namespace zpencil

#endif  // ZPENCIL_PENCIL_HPP
