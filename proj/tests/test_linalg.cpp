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


#include <zpencil/error.hpp>
#include <zpencil/linalg.hpp>
#include <zpencil/testkit.hpp>

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

using namespace zpencil;

namespace {

double max_modulus_by_charpoly(const Matrix& p) {
  const std::size_t n = p.rows();
  const auto coeffs = testkit::det_polynomial(Pencil(p, Matrix::identity(n)));
  double best = 0.0;
  for (const Complex& r : testkit::polynomial_roots(coeffs)) best = std::max(best, std::abs(r));
  return best;
}

}  // namespace

TEST_CASE("index sets convert between 0- and 1-based labels") {
  const IndexSet j = IndexSet::from_one_based({2, 4});
  CHECK(j.zero_based() == std::vector<std::size_t>{1, 3});
  CHECK(j.one_based() == std::vector<std::size_t>{2, 4});
  CHECK(j.to_string() == "{2,4}");
  CHECK(j.contains(3));
  CHECK_FALSE(j.contains(2));
  CHECK(IndexSet::all(4).minus(j) == IndexSet::from_one_based({1, 3}));
  CHECK(j.max() == 3);
  CHECK_THROWS_AS(IndexSet::from_zero_based({2, 1}), Error);
  CHECK_THROWS_AS(IndexSet::from_one_based({0}), Error);
  CHECK_THROWS_AS(IndexSet().max(), Error);
}

TEST_CASE("matrix construction rejects bad shapes and non-finite entries") {
  CHECK_THROWS_AS(Matrix(2, 2, {1, 2, 3}), Error);
  CHECK_THROWS_AS(Matrix(1, 1, {NAN}), Error);
  CHECK_THROWS_AS((Matrix{{1, 2}, {3}}), Error);
  Matrix m(2, 2);
  CHECK_THROWS_AS(m.set(2, 0, 1.0), Error);
  CHECK_THROWS_AS(m.set(0, 0, INFINITY), Error);
}

TEST_CASE("matrix arithmetic") {
  const Matrix x{{1, -2}, {3, 4}};
  const Matrix y{{0, 1}, {1, 0}};
  CHECK(x * y == Matrix{{-2, 1}, {4, 3}});
  CHECK(x + y == Matrix{{1, -1}, {4, 4}});
  CHECK(x - y == Matrix{{1, -3}, {2, 4}});
  CHECK(2.0 * y == Matrix{{0, 2}, {2, 0}});
  CHECK(-y == Matrix{{0, -1}, {-1, 0}});
  CHECK(x * Vector{1, 1} == Vector{-1, 7});
  CHECK(x.transpose() == Matrix{{1, 3}, {-2, 4}});
  CHECK(x.norm_inf() == 7.0);
  CHECK(x.max_abs() == 4.0);
  CHECK(x.min_entry() == -2.0);
  CHECK(submatrix(x, IndexSet::from_zero_based({1})) == Matrix{{4}});
  CHECK(submatrix(x, IndexSet::from_zero_based({0}), IndexSet::from_zero_based({0, 1})) ==
        Matrix{{1, -2}});
  CHECK_THROWS_AS(x * Matrix(3, 3), Error);
}

TEST_CASE("spectral radius of small nonnegative matrices") {
  const TolerancePolicy tol;
  CHECK(spectral_radius(Matrix{{0, 1}, {1, 0}}, tol) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spectral_radius(Matrix{{2, 1}, {1, 2}}, tol) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(spectral_radius(Matrix{{0, 1}, {0, 0}}, tol) == 0.0);
  // Jordan-like blocks: a direct eigensolver loses half the digits here.
  CHECK(spectral_radius(Matrix{{1, 5, 3}, {0, 1, 7}, {0, 0, 1}}, tol) == 1.0);
  CHECK_THROWS_AS(spectral_radius(Matrix{{0, -1}, {1, 0}}, tol), Error);
}

TEST_CASE("spectral radius agrees with characteristic polynomial roots on 200 matrices") {
  const TolerancePolicy tol;
  testkit::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix p = test::random_nonnegative(rng, n, 0.2 + 0.6 * rng.uniform());
    const double rho = spectral_radius(p, tol);
    const double oracle = max_modulus_by_charpoly(p);
    CAPTURE(trial);
    CHECK(std::abs(rho - oracle) <= 1e-7 * std::max(1.0, oracle));
  }
}

TEST_CASE("perron vector is a nonnegative eigenvector") {
  const TolerancePolicy tol;
  testkit::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix p = test::random_nonnegative(rng, n, 0.6);
    const double rho = spectral_radius(p, tol);
    const Vector v = perron_vector(p, tol);
    CHECK(norm_inf(v) == doctest::Approx(1.0));
    const Vector pv = p * v;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(v[i] >= 0.0);
      CHECK(std::abs(pv[i] - rho * v[i]) <= 1e-9 * std::max(1.0, rho));
    }
  }
}

TEST_CASE("eigenvalues are sorted and complete") {
  const TolerancePolicy tol;
  const auto ev = eigenvalues(Matrix{{0, -1}, {1, 0}}, tol);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].imag() == doctest::Approx(1.0));
  CHECK(ev[1].imag() == doctest::Approx(-1.0));
  const auto tri = eigenvalues(Matrix{{1, 2, 3}, {0, 3, 4}, {0, 0, 2}}, tol);
  REQUIRE(tri.size() == 3);
  CHECK(tri[0].real() == doctest::Approx(3.0));
  CHECK(tri[1].real() == doctest::Approx(2.0));
  CHECK(tri[2].real() == doctest::Approx(1.0));
}

TEST_CASE("solve has small residual on 500 random nonsingular systems") {
  const TolerancePolicy tol;
  testkit::Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 8;
    Matrix x(n, n);
    Vector rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        x.set(i, j, 2.0 * rng.uniform() - 1.0);
        row += std::abs(x(i, j));
      }
      x.set(i, i, row + 0.5 + rng.uniform());
      rhs[i] = 2.0 * rng.uniform() - 1.0;
    }
    const Vector sol = solve(x, rhs, tol);
    const Vector r = x * sol;
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(r[i] - rhs[i]));
    CHECK(res <= 1e-12 * x.norm_inf() * std::max(1.0, norm_inf(sol)));
  }
}

TEST_CASE("solve reports singular systems") {
  const TolerancePolicy tol;
  try {
    solve(Matrix{{1, 2}, {2, 4}}, Vector{1, 1}, tol);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Singular);
  }
  CHECK_THROWS_AS(solve(Matrix{{1, 0}, {0, 1}}, Vector{1}, tol), Error);
}

TEST_CASE("nullspace and singularity use the same cutoff") {
  const TolerancePolicy tol;
  const Matrix x{{1, -1}, {-1, 1}};
  CHECK(is_singular(x, tol));
  const auto ns = nullspace(x, tol);
  REQUIRE(ns.size() == 1);
  CHECK(std::abs(std::abs(ns[0][0]) - std::sqrt(0.5)) < 1e-12);
  CHECK(std::abs(ns[0][0] - ns[0][1]) < 1e-12);
  CHECK(nullspace(Matrix::identity(3), tol).empty());
  CHECK_FALSE(is_singular(Matrix::identity(3), tol));
  CHECK(nullspace(Matrix::zeros(2, 2), tol).size() == 2);
  const Matrix near{{1, 0}, {0, 1e-12}};
  CHECK(is_singular(near, tol));
}

TEST_CASE("principal submatrices never exceed the spectral radius") {
  const TolerancePolicy tol;
  testkit::Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix p = test::random_nonnegative(rng, n, 0.5);
    const double rho = spectral_radius(p, tol);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> j;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) j.push_back(i);
      }
      CHECK(spectral_radius(submatrix(p, IndexSet::from_zero_based(j)), tol) <= rho + 1e-12);
    }
  }
}

TEST_CASE("nullspace vectors solve the system and complement the rank") {
  const TolerancePolicy tol;
  testkit::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const std::size_t r = 1 + rng.below(n);
    // x = U V^T with U n-by-r and V n-by-r random, so rank r generically
    std::vector<Vector> u(r, Vector(n)), v(r, Vector(n));
    for (auto& col : u) for (double& e : col) e = 2.0 * rng.uniform() - 1.0;
    for (auto& col : v) for (double& e : col) e = 2.0 * rng.uniform() - 1.0;
    Matrix x(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < r; ++k) s += u[k][i] * v[k][j];
        x.set(i, j, s);
      }
    }
    const auto ns = nullspace(x, tol);
    CHECK(ns.size() == n - testkit::column_rank(u));
    for (const Vector& z : ns) CHECK(norm_inf(x * z) <= 1e-9 * std::max(1.0, x.norm_inf()));
  }
}
