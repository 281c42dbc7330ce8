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

#include "zpencil/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zpencil/error.hpp"

namespace zpencil {

Pencil::Pencil(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.square() || !b_.square()) throw Error(ErrorCode::Dimension, "pencil matrices must be square");
  if (a_.rows() != b_.rows()) throw Error(ErrorCode::Dimension, "pencil matrices differ in order");
  if (a_.rows() == 0) throw Error(ErrorCode::Dimension, "pencil order must be positive");
}

Matrix Pencil::at(double t) const { return t * b_ - a_; }

Pencil Pencil::restrict_to(const IndexSet& j) const {
  return Pencil(submatrix(a_, j), submatrix(b_, j));
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require_valid(const Pencil& p, const TolerancePolicy& tol) {
  const ValidationReport r = validate(p, tol);
  if (!r.ok()) {
    std::string msg = "pencil fails the standing conditions";
    if (!r.violations.empty()) msg += ": " + r.violations.front().message;
    throw Error(ErrorCode::ValidationFailed, msg);
  }
}

// Band for comparisons on the t axis.
double t_band(double t, const TolerancePolicy& tol) { return tol.rel_sing * std::max(1.0, std::abs(t)); }

}  // namespace

ValidationReport validate(const Pencil& p, const TolerancePolicy& tol) {
  tol.check();
  ValidationReport r;
  const std::size_t n = p.order();
  const Matrix& a = p.a();
  const Matrix& b = p.b();

  r.c1 = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) < -tol.abs_floor) {
        r.c1 = false;
        r.violations.push_back({1, i, j, a(i, j),
                                "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") = " + fmt(a(i, j)) + " is negative"});
      }
    }
  }

  r.c2 = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && b(i, j) > a(i, j) + tol.abs_floor) {
        r.c2 = false;
        r.violations.push_back({2, i, j, b(i, j) - a(i, j),
                                "b(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") exceeds a(" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") by " + fmt(b(i, j) - a(i, j))});
      }
    }
  }

  const Matrix m = b - a;
  const Vector ones(n, 1.0);
  const bool z = is_z_matrix(m, tol);
  if (z && m_status(m, tol) != MStatus::NonsingularM) {
    r.c3 = false;
    r.violations.push_back({3, std::nullopt, std::nullopt, 0.0,
                            "B - A is not a nonsingular M-matrix"});
    return r;
  }
  Vector u;
  try {
    u = solve(m, ones, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    r.c3 = false;
    r.violations.push_back({3, std::nullopt, std::nullopt, 0.0, "B - A is singular"});
    return r;
  }
  const Vector mu = m * u;
  const double umin = *std::min_element(u.begin(), u.end());
  const double mumin = *std::min_element(mu.begin(), mu.end());
  r.c3 = umin > 0.0 && mumin > 0.0;
  if (r.c3) {
    r.witness_u = std::move(u);
  } else if (z) {
    r.violations.push_back({3, std::nullopt, std::nullopt, umin,
                            "witness (B - A)^{-1} 1 is not positive"});
  } else {
    // Without the Z-sign pattern the M-matrix equivalence is unavailable and
    // only the candidate u = (B - A)^{-1} 1 was tried.
    r.violations.push_back({3, std::nullopt, std::nullopt, umin,
                            "no positive witness found; B - A is not a Z-matrix, so only "
                            "u = (B - A)^{-1} 1 was tried"});
  }
  return r;
}

double to_pencil_eigenvalue(double mu) noexcept { return mu / (1.0 + mu); }

Complex to_pencil_eigenvalue(Complex mu) noexcept { return mu / (1.0 + mu); }

Matrix transfer_matrix(const Pencil& p, const TolerancePolicy& tol) {
  const Matrix c = solve(p.b() - p.a(), p.a(), tol);
  const double slack = tol.abs_floor + tol.rel_sing * c.max_abs();
  const std::size_t n = c.rows();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = c(i, j);
      if (v < -slack) {
        throw Error(ErrorCode::ValidationFailed,
                    "(B - A)^{-1} A has a negative entry; B - A is not a nonsingular M-matrix");
      }
      out.set(i, j, std::max(v, 0.0));
    }
  }
  return out;
}

double subpencil_mu(const Pencil& p, const IndexSet& j, const TolerancePolicy& tol) {
  return spectral_radius(transfer_matrix(p.restrict_to(j), tol), tol);
}

SpectralSummary spectral_summary(const Pencil& p, const TolerancePolicy& tol) {
  require_valid(p, tol);
  const Matrix c = transfer_matrix(p, tol);
  SpectralSummary s;
  s.mu = spectral_radius(c, tol);
  s.rho_ab = to_pencil_eigenvalue(s.mu);
  const double pole = tol.rel_sing * std::max(1.0, c.norm_inf());
  for (const Complex& z : eigenvalues(c, tol)) {
    if (std::abs(z + 1.0) <= pole) continue;
    s.eigenvalues.push_back(to_pencil_eigenvalue(z));
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return s;
}

ThresholdTable thresholds(const Pencil& p, const TolerancePolicy& tol,
                          const EnumerationGuard& guard) {
  require_valid(p, tol);
  const std::size_t n = p.order();
  guard.require(n);
  ThresholdTable tbl;
  tbl.sigma.assign(n, 0.0);
  tbl.tau.assign(n + 1, 0.0);
  tbl.argmax.resize(n);
  for (std::size_t s = 1; s <= n; ++s) {
    double best = -1.0;
    IndexSet arg;
    for_each_subset(n, s, [&](const IndexSet& j) {
      const double mu = subpencil_mu(p, j, tol);
      if (mu > best) {
        best = mu;
        arg = j;
      }
      return true;
    });
    tbl.sigma[s - 1] = best;
    tbl.tau[s] = to_pencil_eigenvalue(best);
    tbl.argmax[s - 1] = arg;
  }
  const auto g = girth(digraph_of(p.a(), tol));
  tbl.class_at_zero = g ? std::min(n, *g - 1) : n;
  return tbl;
}

LsIndex classify_at(const Pencil& p, double t, const ThresholdTable& tbl,
                    const TolerancePolicy& tol) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::OutOfRange, "t must lie in [0, 1]");
  if (tbl.order() != p.order()) throw Error(ErrorCode::Dimension, "threshold table order differs");
  if (t == 0.0) return LsIndex{tbl.class_at_zero};
  const double delta = t_band(t, tol);
  std::size_t s = 0;
  for (std::size_t k = 0; k < tbl.tau.size(); ++k) {
    if (tbl.tau[k] <= t + delta) s = k;
  }
  return LsIndex{s};
}

IntervalPartition partition(const Pencil& p, const ThresholdTable& tbl,
                            const TolerancePolicy& tol) {
  const std::size_t n = p.order();
  if (tbl.order() != n) throw Error(ErrorCode::Dimension, "threshold table order differs");
  std::vector<std::size_t> alive;
  for (std::size_t s = 0; s < n; ++s) {
    if (tbl.tau[s + 1] - tbl.tau[s] > t_band(tbl.tau[s + 1], tol)) alive.push_back(s);
  }
  alive.push_back(n);

  IntervalPartition part;
  for (std::size_t a = 0; a < alive.size(); ++a) {
    Segment seg;
    seg.s = LsIndex{alive[a]};
    seg.lo = a == 0 ? 0.0 : std::clamp(tbl.tau[alive[a]], 0.0, 1.0);
    seg.lo_closed = true;
    if (a + 1 < alive.size()) {
      seg.hi = std::clamp(tbl.tau[alive[a + 1]], 0.0, 1.0);
      seg.hi_closed = false;
    } else {
      seg.hi = 1.0;
      seg.hi_closed = true;
    }
    part.segments.push_back(seg);
  }
  if (part.segments.front().s.value != tbl.class_at_zero) {
    part.segments.front().lo_closed = false;
    Segment point;
    point.lo = 0.0;
    point.hi = 0.0;
    point.lo_closed = true;
    point.hi_closed = true;
    point.s = LsIndex{tbl.class_at_zero};
    part.segments.insert(part.segments.begin(), point);
  }
  return part;
}

MStatus m_trichotomy(const Pencil& p, double t, const TolerancePolicy& tol) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::OutOfRange, "t must lie in [0, 1]");
  require_valid(p, tol);
  return m_status(p.at(t), tol);
}

std::vector<ClassBound> zs_bound(const Pencil& p, const ThresholdTable& tbl,
                                 const ClassPartition& part, const TolerancePolicy& tol) {
  require_valid(p, tol);
  const std::size_t n = p.order();
  if (tbl.order() != n) throw Error(ErrorCode::Dimension, "threshold table order differs");
  const double rho = tbl.tau[n];
  std::vector<ClassBound> out;
  for (const IndexSet& cls : part.classes) {
    const double tau_j = to_pencil_eigenvalue(subpencil_mu(p, cls, tol));
    if (std::abs(tau_j - rho) > tol.rel_eig * std::max(1.0, rho)) continue;
    ClassBound b;
    b.cls = cls;
    b.size = cls.size();
    b.full_order = cls.size() == n;
    b.max_s = b.full_order ? n - 1 : cls.size() - 1;
    out.push_back(std::move(b));
  }
  return out;
}

Digraph union_digraph(const Pencil& p, const TolerancePolicy& tol) {
  return graph_union(digraph_of(p.a(), tol), digraph_of(p.b(), tol));
}

}  // namespace zpencil
