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

#ifndef ZPENCIL_TESTKIT_HPP
#define ZPENCIL_TESTKIT_HPP

// Random pencil generation and brute-force oracles for the property suites.
// Nothing here is used by the analysis code itself.

#include <cstdint>
#include <random>
#include <vector>

#include "zpencil/linalg.hpp"
#include "zpencil/pencil.hpp"
#include "zpencil/zmatrix.hpp"

namespace zpencil::testkit {

/// std::mt19937_64 with doubles taken from the top 53 bits of each draw, so a
/// seed produces the same stream under every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  /// (0, scale]
  double positive(double scale) { return scale * (1.0 - uniform()); }
  bool bernoulli(double p) { return uniform() < p; }
  /// [0, n)
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }
  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

struct GenConfig {
  std::size_t n = 4;
  std::uint64_t seed = 0;
  double density = 0.5;
  double magnitude = 1.0;
  double dominance_slack = 0.1;

  void check() const;
};

/// A >= 0 random with the given density; M = D - N strictly diagonally
/// dominant with N >= 0 off the diagonal; B = A + M. Conditions (1)-(3) hold
/// by construction.
///
/// Draw order: A row-major (a Bernoulli draw per entry, then a value draw for
/// hits), then N row-major over off-diagonal positions the same way.
Pencil gen_pencil(const GenConfig& cfg);

/// Block pencils with repeated dominant blocks, for eigenspaces of dimension
/// greater than one and for singular classes that are not distinguished.
///
/// Block 0 is a dense base pencil; each further block is a copy of it with
/// probability copy_prob, otherwise a fresh block whose A is scaled by
/// weak_scale. Blocks I < J are coupled with probability coupling_prob through
/// equal entries of A and B (so B - A stays block diagonal). The result is
/// conjugated by a random permutation.
struct BlockConfig {
  std::uint64_t seed = 0;
  std::size_t max_blocks = 4;
  std::size_t max_block_size = 2;
  double copy_prob = 0.5;
  double coupling_prob = 0.4;
  double weak_scale = 0.2;
};

Pencil gen_block_pencil(const BlockConfig& cfg);

/// Coefficients c_0..c_n of det(lambda B - A), by permutation expansion.
std::vector<double> det_polynomial(const Pencil& p);

/// Roots of c_0 + c_1 x + ... + c_d x^d (c_d != 0): companion matrix
/// eigenvalues followed by Newton polishing.
std::vector<Complex> polynomial_roots(const std::vector<double>& coeffs);

struct OracleEigs {
  std::vector<Complex> finite;
  std::size_t infinite = 0;  ///< degree deficit of det(lambda B - A)
};

/// Roots of det(lambda B - A); n <= 6.
OracleEigs oracle_pencil_eigs(const Pencil& p);

/// Class index straight from the definition: with the canonical (q, P), the
/// largest s with rho_s(P) <= q + delta.
LsIndex oracle_classify(const Matrix& x, const TolerancePolicy& tol);

/// Max over an optimal matching of |a_i - b_j| / max(1, |a_i|). Infinity when
/// the sizes differ. Brute force over permutations; sizes <= 8.
double matched_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

struct NnlsResult {
  Vector coeffs;
  double residual = 0.0;  ///< ||basis * coeffs - target||_inf
};

/// min ||sum_k c_k v_k - target|| over c >= 0, by enumerating active sets.
NnlsResult nnls(const std::vector<Vector>& basis, const Vector& target);

/// Extreme rays of nullspace(X) intersected with the nonnegative orthant,
/// found from an SVD nullspace basis by enumerating active coordinate sets.
/// Independent of any graph computation.
std::vector<Vector> nonnegative_kernel_rays(const Matrix& x, const TolerancePolicy& tol);

/// Numerical rank of the matrix whose columns are `vectors`.
std::size_t column_rank(const std::vector<Vector>& vectors, double rel_tol = 1e-9);

/// Relabels vertices: result(perm[i], perm[j]) = x(i, j).
Matrix permute(const Matrix& x, const std::vector<std::size_t>& perm);

}  // namespace zpencil::testkit

#endif  // ZPENCIL_TESTKIT_HPP
