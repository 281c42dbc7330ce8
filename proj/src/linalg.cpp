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

#include "zpencil/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "class_kernel.hpp"
#include "eigen_bridge.hpp"
#include "zpencil/digraph.hpp"
#include "zpencil/error.hpp"

namespace zpencil {

using detail::from_eigen;
using detail::to_eigen;

void TolerancePolicy::check() const {
  if (!(rel_sing > 0.0) || !(rel_eig > 0.0) || !(abs_floor > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be strictly positive");
  }
  if (rel_eig > rel_sing) {
    throw Error(ErrorCode::InvalidArgument, "rel_eig must not exceed rel_sing");
  }
}

// ---------------------------------------------------------------- IndexSet

IndexSet IndexSet::from_zero_based(std::vector<std::size_t> indices) {
  for (std::size_t a = 1; a < indices.size(); ++a) {
    if (indices[a] <= indices[a - 1]) {
      throw Error(ErrorCode::InvalidArgument, "index set must be strictly increasing");
    }
  }
  return IndexSet(std::move(indices));
}

IndexSet IndexSet::from_one_based(const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> z;
  z.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i == 0) throw Error(ErrorCode::OutOfRange, "1-based index 0");
    z.push_back(i - 1);
  }
  return from_zero_based(std::move(z));
}

IndexSet IndexSet::all(std::size_t n) {
  std::vector<std::size_t> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = i;
  return IndexSet(std::move(z));
}

std::vector<std::size_t> IndexSet::one_based() const {
  std::vector<std::size_t> o(idx_);
  for (auto& i : o) ++i;
  return o;
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(idx_.begin(), idx_.end(), i);
}

IndexSet IndexSet::minus(const IndexSet& other) const {
  std::vector<std::size_t> out;
  std::set_difference(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                      std::back_inserter(out));
  return IndexSet(std::move(out));
}

std::size_t IndexSet::max() const {
  if (idx_.empty()) throw Error(ErrorCode::InvalidArgument, "max of empty index set");
  return idx_.back();
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t a = 0; a < idx_.size(); ++a) os << (a ? "," : "") << idx_[a] + 1;
  os << '}';
  return os.str();
}

// ------------------------------------------------------------------ Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::Dimension, "entry count does not match matrix shape");
  }
  for (double v : data_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::Dimension, "ragged matrix literal");
    for (double v : r) {
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry");
      data_.push_back(v);
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, double v) {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::OutOfRange, "matrix index out of range");
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry");
  data_[i * cols_ + j] = v;
}

double Matrix::norm_inf() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += std::abs(data_[i * cols_ + j]);
    best = std::max(best, s);
  }
  return best;
}

double Matrix::max_abs() const noexcept {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

double Matrix::min_entry() const noexcept {
  if (data_.empty()) return 0.0;
  return *std::min_element(data_.begin(), data_.end());
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  }
  return t;
}

namespace {

void require_same_shape(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorCode::Dimension, "matrix shapes differ");
  }
}

void require_square(const Matrix& x, const char* what) {
  if (!x.square()) throw Error(ErrorCode::Dimension, std::string(what) + ": matrix is not square");
}

}  // namespace

Matrix operator+(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y);
  Matrix r = x;
  for (std::size_t a = 0; a < r.data_.size(); ++a) r.data_[a] += y.data_[a];
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y);
  Matrix r = x;
  for (std::size_t a = 0; a < r.data_.size(); ++a) r.data_[a] -= y.data_[a];
  return r;
}

Matrix operator-(const Matrix& x) { return -1.0 * x; }

Matrix operator*(double c, const Matrix& x) {
  Matrix r = x;
  for (double& v : r.data_) v *= c;
  return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.rows()) throw Error(ErrorCode::Dimension, "inner dimensions differ");
  Matrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const double xik = x(i, k);
      if (xik == 0.0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r.data_[i * r.cols_ + j] += xik * y(k, j);
    }
  }
  return r;
}

Vector operator*(const Matrix& x, const Vector& v) {
  if (x.cols() != v.size()) throw Error(ErrorCode::Dimension, "vector length differs");
  Vector r(x.rows(), 0.0);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j) s += x(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

double norm_inf(const Vector& v) noexcept {
  double best = 0.0;
  for (double e : v) best = std::max(best, std::abs(e));
  return best;
}

Matrix submatrix(const Matrix& x, const IndexSet& rows, const IndexSet& cols) {
  if (!rows.empty() && rows.max() >= x.rows()) throw Error(ErrorCode::OutOfRange, "row index out of range");
  if (!cols.empty() && cols.max() >= x.cols()) throw Error(ErrorCode::OutOfRange, "column index out of range");
  std::vector<double> e;
  e.reserve(rows.size() * cols.size());
  for (std::size_t i : rows) {
    for (std::size_t j : cols) e.push_back(x(i, j));
  }
  return Matrix(rows.size(), cols.size(), std::move(e));
}

Matrix submatrix(const Matrix& x, const IndexSet& j) {
  require_square(x, "submatrix");
  return submatrix(x, j, j);
}

// ---------------------------------------------------------------- spectral

namespace {

std::vector<Complex> block_eigenvalues(const Matrix& block) {
  if (block.rows() == 1) return {Complex(block(0, 0), 0.0)};
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(block), false);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::ConstructionFailed, "eigenvalue iteration did not converge");
  }
  const auto& ev = es.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

}  // namespace

std::vector<Complex> eigenvalues(const Matrix& x, const TolerancePolicy& tol) {
  require_square(x, "eigenvalues");
  std::vector<Complex> all;
  for (const IndexSet& cls : classes(digraph_of(x, tol)).classes) {
    auto ev = block_eigenvalues(submatrix(x, cls));
    all.insert(all.end(), ev.begin(), ev.end());
  }
  std::sort(all.begin(), all.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return all;
}

double spectral_radius(const Matrix& p, const TolerancePolicy& tol) {
  require_square(p, "spectral_radius");
  if (p.rows() > 0 && p.min_entry() < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "spectral_radius: matrix has a negative entry");
  }
  double rho = 0.0;
  for (const IndexSet& cls : classes(digraph_of(p, tol)).classes) {
    if (cls.size() == 1) {
      rho = std::max(rho, p(cls[0], cls[0]));
      continue;
    }
    for (const Complex& z : block_eigenvalues(submatrix(p, cls))) rho = std::max(rho, std::abs(z));
  }
  return rho;
}

Vector perron_vector(const Matrix& p, const TolerancePolicy& tol) {
  require_square(p, "perron_vector");
  if (p.rows() == 0) throw Error(ErrorCode::Dimension, "perron_vector: empty matrix");
  const double rho = spectral_radius(p, tol);
  const double delta = tol.rel_sing * std::max(1.0, rho);
  const Digraph g = digraph_of(p, tol);
  const ClassPartition part = classes(g);
  // The first class in topological order attaining rho is accessed only from
  // classes with a strictly smaller Perron root.
  for (const IndexSet& cls : part.classes) {
    if (spectral_radius(submatrix(p, cls), tol) >= rho - delta) {
      const Matrix x = rho * Matrix::identity(p.rows()) - p;
      return detail::class_kernel_vector(x, g, cls, tol);
    }
  }
  throw Error(ErrorCode::ConstructionFailed, "perron_vector: no class attains the spectral radius");
}

// ------------------------------------------------------------------ solves

namespace {

Eigen::FullPivLU<Eigen::MatrixXd> factor(const Matrix& x, const TolerancePolicy& tol) {
  require_square(x, "solve");
  if (x.rows() == 0) throw Error(ErrorCode::Dimension, "solve: empty matrix");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(to_eigen(x));
  const double cutoff = tol.rel_sing * x.norm_inf();
  const auto diag = lu.matrixLU().diagonal().cwiseAbs();
  const double smallest = diag.minCoeff();
  if (smallest <= cutoff || smallest <= tol.abs_floor) {
    throw Error(ErrorCode::Singular, "solve: matrix is numerically singular");
  }
  return lu;
}

}  // namespace

Vector solve(const Matrix& x, const Vector& rhs, const TolerancePolicy& tol) {
  if (rhs.size() != x.rows()) throw Error(ErrorCode::Dimension, "solve: right-hand side length");
  const auto lu = factor(x, tol);
  return from_eigen(Eigen::VectorXd(lu.solve(to_eigen(rhs))));
}

Matrix solve(const Matrix& x, const Matrix& rhs, const TolerancePolicy& tol) {
  if (rhs.rows() != x.rows()) throw Error(ErrorCode::Dimension, "solve: right-hand side rows");
  const auto lu = factor(x, tol);
  return from_eigen(Eigen::MatrixXd(lu.solve(to_eigen(rhs))));
}

namespace {

double singular_cutoff(const Matrix& x, const TolerancePolicy& tol) {
  return tol.rel_sing * x.norm_inf() + tol.abs_floor;
}

}  // namespace

std::vector<Vector> nullspace(const Matrix& x, const TolerancePolicy& tol) {
  require_square(x, "nullspace");
  const std::size_t n = x.rows();
  if (n == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(x), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = singular_cutoff(x, tol);
  std::vector<Vector> basis;
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(n); ++k) {
    if (sv(k) <= cutoff) basis.push_back(from_eigen(Eigen::VectorXd(svd.matrixV().col(k))));
  }
  return basis;
}

bool is_singular(const Matrix& x, const TolerancePolicy& tol) {
  require_square(x, "is_singular");
  if (x.rows() == 0) return false;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(x));
  return svd.singularValues().minCoeff() <= singular_cutoff(x, tol);
}

// ------------------------------------------------------------ class kernel

namespace detail {

Vector class_kernel_vector(const Matrix& x, const Digraph& g, const IndexSet& cls,
                           const TolerancePolicy& tol) {
  const std::size_t n = x.rows();
  const IndexSet w = access_set(g, cls);
  const IndexSet rest = w.minus(cls);

  Vector core;
  if (cls.size() == 1) {
    core = {1.0};
  } else {
    const Matrix xj = submatrix(x, cls);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(xj), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const Eigen::Index m = sv.size();
    if (sv(m - 2) <= singular_cutoff(xj, tol)) {
      throw Error(ErrorCode::ConstructionFailed,
                  "class " + cls.to_string() + " has a kernel of dimension > 1");
    }
    core = from_eigen(Eigen::VectorXd(svd.matrixV().col(m - 1)));
    double sum = 0.0;
    for (double v : core) sum += v;
    if (sum < 0.0) {
      for (double& v : core) v = -v;
    }
  }

  Vector out(n, 0.0);
  for (std::size_t a = 0; a < cls.size(); ++a) out[cls[a]] = core[a];
  if (!rest.empty()) {
    const Vector coupling = submatrix(x, rest, cls) * core;
    Vector rhs(coupling.size());
    for (std::size_t a = 0; a < rhs.size(); ++a) rhs[a] = -coupling[a];
    const Vector y = solve(submatrix(x, rest), rhs, tol);
    for (std::size_t a = 0; a < rest.size(); ++a) out[rest[a]] = y[a];
  }

  const double scale = norm_inf(out);
  if (!(scale > 0.0)) throw Error(ErrorCode::ConstructionFailed, "zero kernel vector");
  constexpr double kZeroTol = 1e-10;
  for (double& v : out) {
    v /= scale;
    if (v < -kZeroTol) {
      throw Error(ErrorCode::ConstructionFailed,
                  "kernel vector for class " + cls.to_string() + " is not nonnegative");
    }
    if (v < 0.0) v = 0.0;
  }
  return out;
}

}  // namespace detail

}  // namespace zpencil
