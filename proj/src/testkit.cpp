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

#include "zpencil/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "eigen_bridge.hpp"
#include "zpencil/error.hpp"

namespace zpencil::testkit {

using detail::from_eigen;
using detail::to_eigen;

void GenConfig::check() const {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "GenConfig: n must be positive");
  if (!(density > 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "GenConfig: density must lie in (0, 1]");
  }
  if (!(magnitude > 0.0) || !(dominance_slack > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "GenConfig: magnitude and slack must be positive");
  }
}

namespace {

// Dense nonnegative block plus the strictly dominant M-matrix that pairs
// with it.
struct BlockPencil {
  Matrix a;
  Matrix m;
};

BlockPencil random_block(Rng& rng, std::size_t n, double density, double a_scale, double magnitude,
                         double slack) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.bernoulli(density)) a.set(i, j, a_scale * rng.positive(magnitude));
    }
  }
  Matrix m(n, n);
  std::vector<double> rowsum(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rng.bernoulli(density)) {
        const double v = rng.positive(magnitude);
        m.set(i, j, -v);
        rowsum[i] += v;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, rowsum[i] + slack);
  return {std::move(a), std::move(m)};
}

}  // namespace

Pencil gen_pencil(const GenConfig& cfg) {
  cfg.check();
  Rng rng(cfg.seed);
  BlockPencil bp = random_block(rng, cfg.n, cfg.density, 1.0, cfg.magnitude, cfg.dominance_slack);
  Matrix b = bp.a + bp.m;
  return Pencil(std::move(bp.a), std::move(b));
}

Matrix permute(const Matrix& x, const std::vector<std::size_t>& perm) {
  const std::size_t n = x.rows();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(perm[i], perm[j], x(i, j));
  }
  return out;
}

Pencil gen_block_pencil(const BlockConfig& cfg) {
  Rng rng(cfg.seed);
  const std::size_t nblocks = 2 + rng.below(std::max<std::size_t>(cfg.max_blocks, 2) - 1);
  const std::size_t base_size = 1 + rng.below(cfg.max_block_size);
  const BlockPencil base = random_block(rng, base_size, 1.0, 1.0, 1.0, 0.1);

  std::vector<BlockPencil> blocks{base};
  for (std::size_t b = 1; b < nblocks; ++b) {
    if (rng.bernoulli(cfg.copy_prob)) {
      blocks.push_back(base);
    } else {
      const std::size_t sz = 1 + rng.below(cfg.max_block_size);
      blocks.push_back(random_block(rng, sz, 1.0, cfg.weak_scale, 1.0, 0.1));
    }
  }
  std::vector<std::size_t> offset{0};
  for (const auto& b : blocks) offset.push_back(offset.back() + b.a.rows());
  const std::size_t n = offset.back();

  Matrix a(n, n);
  Matrix m(n, n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t sz = blocks[b].a.rows();
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = 0; j < sz; ++j) {
        a.set(offset[b] + i, offset[b] + j, blocks[b].a(i, j));
        m.set(offset[b] + i, offset[b] + j, blocks[b].m(i, j));
      }
    }
  }
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (std::size_t bj = bi + 1; bj < blocks.size(); ++bj) {
      if (!rng.bernoulli(cfg.coupling_prob)) continue;
      for (std::size_t i = offset[bi]; i < offset[bi + 1]; ++i) {
        for (std::size_t j = offset[bj]; j < offset[bj + 1]; ++j) {
          if (rng.bernoulli(0.5)) a.set(i, j, rng.positive(1.0));
        }
      }
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  Matrix b = a + m;
  return Pencil(permute(a, perm), permute(b, perm));
}

std::vector<double> det_polynomial(const Pencil& p) {
  const std::size_t n = p.order();
  if (n > 8) throw Error(ErrorCode::GuardExceeded, "det_polynomial: order above 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> total(n + 1, 0.0);
  std::vector<double> term;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    term.assign(1, inversions % 2 ? -1.0 : 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      // multiply by (b lambda - a)
      const double lin = p.b()(i, perm[i]);
      const double con = -p.a()(i, perm[i]);
      std::vector<double> next(term.size() + 1, 0.0);
      for (std::size_t k = 0; k < term.size(); ++k) {
        next[k] += term[k] * con;
        next[k + 1] += term[k] * lin;
      }
      term.swap(next);
    }
    for (std::size_t k = 0; k <= n; ++k) total[k] += term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {

Complex horner(const std::vector<double>& c, Complex x, Complex* deriv) {
  Complex v = 0.0;
  Complex d = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) {
    d = d * x + v;
    v = v * x + c[k];
  }
  if (deriv) *deriv = d;
  return v;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<double>& coeffs) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() <= 1) return {};
  std::vector<Complex> roots;
  // exact zero roots
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == 0.0) ++zeros;
  roots.assign(zeros, Complex(0.0, 0.0));
  std::vector<double> q(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
  const std::size_t d = q.size() - 1;
  if (d == 0) return roots;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -q[i] / q[d];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    Complex x = es.eigenvalues()(k);
    for (int it = 0; it < 4; ++it) {
      Complex dp;
      const Complex v = horner(q, x, &dp);
      if (dp == 0.0) break;
      const Complex nx = x - v / dp;
      if (std::abs(horner(q, nx, nullptr)) >= std::abs(v)) break;
      x = nx;
    }
    roots.push_back(x);
  }
  return roots;
}

OracleEigs oracle_pencil_eigs(const Pencil& p) {
  if (p.order() > 6) throw Error(ErrorCode::GuardExceeded, "oracle_pencil_eigs: order above 6");
  std::vector<double> c = det_polynomial(p);
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  OracleEigs out;
  while (c.size() > 1 && std::abs(c.back()) <= 1e-12 * scale) {
    c.pop_back();
    ++out.infinite;
  }
  out.finite = polynomial_roots(c);
  return out;
}

LsIndex oracle_classify(const Matrix& x, const TolerancePolicy& tol) {
  const ZDecomposition d = z_decompose(x, tol);
  const std::size_t n = x.rows();
  if (n > 8) throw Error(ErrorCode::GuardExceeded, "oracle_classify: order above 8");
  const double delta = m_band(x, tol);
  std::size_t s = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (rho_s(d.p, k, tol) <= d.q + delta) s = k;
  }
  return LsIndex{s};
}

double matched_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  if (a.size() > 8) throw Error(ErrorCode::GuardExceeded, "matched_distance: more than 8 values");
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size() && worst < best; ++i) {
      worst = std::max(worst, std::abs(a[i] - b[perm[i]]) / std::max(1.0, std::abs(a[i])));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a.empty() ? 0.0 : best;
}

NnlsResult nnls(const std::vector<Vector>& basis, const Vector& target) {
  const std::size_t k = basis.size();
  if (k > 12) throw Error(ErrorCode::GuardExceeded, "nnls: more than 12 basis vectors");
  const std::size_t n = target.size();
  NnlsResult best;
  best.coeffs.assign(k, 0.0);
  best.residual = norm_inf(target);
  const Eigen::VectorXd y = to_eigen(target);
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask >> c & 1) cols.push_back(c);
    }
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = to_eigen(basis[cols[c]]);
    const Eigen::VectorXd coef = m.colPivHouseholderQr().solve(y);
    if ((coef.array() < 0.0).any()) continue;
    const double res = (m * coef - y).cwiseAbs().maxCoeff();
    if (res < best.residual) {
      best.residual = res;
      best.coeffs.assign(k, 0.0);
      for (std::size_t c = 0; c < cols.size(); ++c) best.coeffs[cols[c]] = coef(static_cast<Eigen::Index>(c));
    }
  }
  return best;
}

std::vector<Vector> nonnegative_kernel_rays(const Matrix& x, const TolerancePolicy& tol) {
  const std::vector<Vector> kernel = nullspace(x, tol);
  const std::size_t d = kernel.size();
  const std::size_t n = x.rows();
  if (d == 0) return {};
  Eigen::MatrixXd nb(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (std::size_t c = 0; c < d; ++c) nb.col(static_cast<Eigen::Index>(c)) = to_eigen(kernel[c]);

  constexpr double kSignTol = 1e-9;
  std::vector<Vector> rays;
  auto consider = [&](const Eigen::VectorXd& coef) {
    Eigen::VectorXd v = nb * coef;
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0.0) v = -v;
    const double scale = v.cwiseAbs().maxCoeff();
    if (!(scale > 0.0)) return;
    v /= scale;
    if (v.minCoeff() < -kSignTol) return;
    Vector r = from_eigen(Eigen::VectorXd(v.cwiseMax(0.0)));
    for (const Vector& e : rays) {
      double diff = 0.0;
      for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(e[i] - r[i]));
      if (diff < 1e-7) return;
    }
    rays.push_back(std::move(r));
  };

  if (d == 1) {
    consider(Eigen::VectorXd::Ones(1));
    return rays;
  }
  // A ray of the pointed cone {c : nb c >= 0} makes d-1 independent rows active.
  for_each_subset(n, d - 1, [&](const IndexSet& rows) {
    Eigen::MatrixXd sub(static_cast<Eigen::Index>(d - 1), static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < rows.size(); ++r) sub.row(static_cast<Eigen::Index>(r)) = nb.row(static_cast<Eigen::Index>(rows[r]));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-9 * std::max(1.0, sv(0))) return true;
    consider(svd.matrixV().col(static_cast<Eigen::Index>(d - 1)));
    return true;
  });
  return rays;
}

std::size_t column_rank(const std::vector<Vector>& vectors, double rel_tol) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t c = 0; c < vectors.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = to_eigen(vectors[c]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) r += sv(k) > rel_tol * sv(0);
  return r;
}

}  // namespace zpencil::testkit
