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

#ifndef ZPENCIL_LINALG_HPP
#define ZPENCIL_LINALG_HPP

#include <complex>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace zpencil {

using Vector = std::vector<double>;
using Complex = std::complex<double>;

/// Central tolerance policy. Every rank, singularity and sign decision in the
/// library is made against one of these three numbers; none is hardcoded.
struct TolerancePolicy {
  double rel_sing = 1e-9;   ///< relative singularity threshold
  double rel_eig = 1e-10;   ///< relative eigenvalue accuracy target
  double abs_floor = 1e-13; ///< absolute floor; entries at or below are zero

  /// Throws InvalidArgument unless all fields are positive and
  /// rel_eig <= rel_sing.
  void check() const;

  friend bool operator==(const TolerancePolicy&, const TolerancePolicy&) = default;
};

/// Strictly increasing set of matrix positions. Storage is 0-based; use
/// one_based() and from_one_based() at I/O boundaries.
class IndexSet {
 public:
  IndexSet() = default;

  static IndexSet from_zero_based(std::vector<std::size_t> indices);
  static IndexSet from_one_based(const std::vector<std::size_t>& indices);
  /// {0, ..., n-1}
  static IndexSet all(std::size_t n);

  std::size_t size() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }
  std::size_t operator[](std::size_t a) const { return idx_[a]; }
  auto begin() const noexcept { return idx_.begin(); }
  auto end() const noexcept { return idx_.end(); }
  const std::vector<std::size_t>& zero_based() const noexcept { return idx_; }
  std::vector<std::size_t> one_based() const;

  bool contains(std::size_t i) const;
  /// Elements of this set not in `other`.
  IndexSet minus(const IndexSet& other) const;
  /// Largest index, or throws on the empty set.
  std::size_t max() const;

  /// "{2,4}" using 1-based labels.
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  explicit IndexSet(std::vector<std::size_t> idx) : idx_(std::move(idx)) {}
  std::vector<std::size_t> idx_;
};

/// Dense row-major real matrix. Entries are finite; the constructors and
/// set() reject NaN and infinities.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, double v);
  std::span<const double> entries() const noexcept { return data_; }

  /// Maximum absolute row sum.
  double norm_inf() const noexcept;
  double max_abs() const noexcept;
  double min_entry() const noexcept;

  Matrix transpose() const;

  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x);
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator*(double c, const Matrix& x);
  friend Vector operator*(const Matrix& x, const Vector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double norm_inf(const Vector& v) noexcept;

/// Rows and columns selected independently.
Matrix submatrix(const Matrix& x, const IndexSet& rows, const IndexSet& cols);
/// Principal submatrix X_J.
Matrix submatrix(const Matrix& x, const IndexSet& j);

/// Spectral radius of a nonnegative square matrix. The matrix is split into
/// the irreducible diagonal blocks of its Frobenius normal form and each
/// block's Perron root is computed separately, which keeps reducible inputs
/// with repeated Perron roots accurate.
double spectral_radius(const Matrix& p, const TolerancePolicy& tol);

/// Nonnegative eigenvector for rho(P), scaled to unit max-norm.
Vector perron_vector(const Matrix& p, const TolerancePolicy& tol);

/// All eigenvalues of a square real matrix, computed block by block over the
/// Frobenius normal form. Sorted by decreasing real part, then imaginary part.
std::vector<Complex> eigenvalues(const Matrix& x, const TolerancePolicy& tol);

/// Throws Error{Singular} when a pivot falls below rel_sing * ||X||_inf.
Vector solve(const Matrix& x, const Vector& rhs, const TolerancePolicy& tol);
Matrix solve(const Matrix& x, const Matrix& rhs, const TolerancePolicy& tol);

/// Orthonormal basis of the numerical nullspace: right singular vectors whose
/// singular value is at most rel_sing * ||X||_inf + abs_floor.
std::vector<Vector> nullspace(const Matrix& x, const TolerancePolicy& tol);

/// Smallest singular value against the same cutoff used by nullspace().
bool is_singular(const Matrix& x, const TolerancePolicy& tol);

}  // namespace zpencil

#endif  // ZPENCIL_LINALG_HPP
