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


#include <zpencil/eigenstructure.hpp>
#include <zpencil/error.hpp>
#include <zpencil/pencil.hpp>
#include <zpencil/testkit.hpp>

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

using namespace zpencil;

namespace {

double residual(const Matrix& x, const Vector& v) { return norm_inf(x * v); }

}  // namespace

TEST_CASE("labels and null vectors of a two-class singular M-matrix") {
  const TolerancePolicy tol;
  const Matrix x{{0, 0}, {-1, 1}};
  const auto labels = class_labels(x, digraph_of(x, tol), tol);
  REQUIRE(labels.size() == 2);
  CHECK(labels[0].cls == IndexSet::from_zero_based({1}));
  CHECK_FALSE(labels[0].singular);
  CHECK(labels[1].cls == IndexSet::from_zero_based({0}));
  CHECK(labels[1].singular);
  CHECK(labels[1].distinguished);
  const auto basis = m_nullbasis(x, tol);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].x == Vector{1.0, 1.0});
  CHECK(basis[0].support == IndexSet::from_zero_based({0, 1}));
  CHECK(basis[0].origin_class == IndexSet::from_zero_based({0}));
}

TEST_CASE("a singular class below another singular class is not distinguished") {
  const TolerancePolicy tol;
  const Matrix x{{0, 0}, {-1, 0}};
  const auto labels = class_labels(x, digraph_of(x, tol), tol);
  REQUIRE(labels.size() == 2);
  CHECK(labels[0].singular);
  CHECK(labels[0].distinguished);
  CHECK(labels[1].singular);
  CHECK_FALSE(labels[1].distinguished);
  const auto basis = m_nullbasis(x, tol);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].x == Vector{0.0, 1.0});
  CHECK(basis[0].support == IndexSet::from_zero_based({1}));
}

TEST_CASE("independent singular blocks give one vector each") {
  const TolerancePolicy tol;
  const Matrix x{{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}};
  const auto basis = m_nullbasis(x, tol);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].support == IndexSet::from_zero_based({0, 1}));
  CHECK(basis[1].support == IndexSet::from_zero_based({2}));
  for (const auto& b : basis) CHECK(residual(x, b.x) <= 1e-12);
}

TEST_CASE("nonsingular and non-M inputs") {
  const TolerancePolicy tol;
  CHECK(m_nullbasis(Matrix{{2, -1}, {-1, 2}}, tol).empty());
  try {
    m_nullbasis(Matrix{{1, -2}, {-2, 1}}, tol);
    FAIL("expected NotM");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotM);
  }
}

TEST_CASE("second example has one eigenvector, supported on {2,4}") {
  const TolerancePolicy tol;
  const Pencil p = test::example(2);
  const SpectralSummary s = spectral_summary(p, tol);
  const PencilEigenstructure e = pencil_eigenstructure(p, s, tol);
  CHECK(e.gamma_is_union);
  CHECK_FALSE(e.rho_near_zero);
  REQUIRE(e.basis.size() == 1);
  const Vector& x = e.basis[0].x;
  CHECK(std::abs(x[0]) <= 1e-10);
  CHECK(std::abs(x[2]) <= 1e-10);
  CHECK(x[1] > 1e-10);
  CHECK(x[3] > 1e-10);
  CHECK(e.basis[0].support == IndexSet::from_one_based({2, 4}));
  CHECK(residual(s.rho_ab * p.b() - p.a(), x) <= 1e-10);
  // second row: (3 rho - 1) x_2 = rho x_4
  CHECK(x[1] / x[3] == doctest::Approx(s.rho_ab / (3.0 * s.rho_ab - 1.0)).epsilon(1e-12));
}

TEST_CASE("third example uses G(A) and returns e1") {
  const TolerancePolicy tol;
  const Pencil p = test::example(3);
  const SpectralSummary s = spectral_summary(p, tol);
  CHECK_FALSE(pencil_gamma_is_union(s.rho_ab, tol));
  const PencilEigenstructure e = pencil_eigenstructure(p, s, tol);
  CHECK_FALSE(e.gamma_is_union);
  CHECK(e.gamma == digraph_of(p.a(), tol));
  REQUIRE(e.basis.size() == 1);
  CHECK(e.basis[0].x == Vector{1.0, 0.0});
  CHECK(e.basis[0].support == IndexSet::from_zero_based({0}));
}

TEST_CASE("generated pencils: eigenvectors are nonnegative, exact on their support, independent") {
  const TolerancePolicy tol;
  std::size_t multi = 0;
  for (const Pencil& p : test::corpus(150, 5000)) {
    const SpectralSummary s = spectral_summary(p, tol);
    const Matrix x = s.rho_ab * p.b() - p.a();
    const auto basis = pencil_eigenbasis(p, s, tol);
    const double scale = std::max(p.a().norm_inf(), p.b().norm_inf());
    CHECK_FALSE(basis.empty());
    std::vector<Vector> cols;
    for (const auto& v : basis) {
      CHECK(norm_inf(v.x) == doctest::Approx(1.0));
      CHECK(residual(x, v.x) <= 1e-8 * scale);
      for (std::size_t i = 0; i < p.order(); ++i) {
        if (v.support.contains(i)) {
          CHECK(v.x[i] > 1e-10);
        } else {
          CHECK(v.x[i] == 0.0);
        }
      }
      cols.push_back(v.x);
    }
    CHECK(testkit::column_rank(cols) == basis.size());
    multi += basis.size() > 1;
  }
  CHECK(multi > 0);
}

TEST_CASE("labels of the example matrices") {
  const TolerancePolicy tol;
  const Pencil p3 = test::example(3);
  const Matrix x3 = -p3.a();
  const auto l3 = class_labels(x3, digraph_of(p3.a(), tol), tol);
  REQUIRE(l3.size() == 2);
  CHECK(l3[0].cls == IndexSet::from_one_based({1}));
  CHECK(l3[0].singular);
  CHECK(l3[0].distinguished);
  CHECK(l3[1].singular);
  CHECK_FALSE(l3[1].distinguished);

  const Pencil p2 = test::example(2);
  const SpectralSummary s2 = spectral_summary(p2, tol);
  const auto l2 = class_labels(s2.rho_ab * p2.b() - p2.a(), union_digraph(p2, tol), tol);
  REQUIRE(l2.size() == 2);
  CHECK(l2[0].cls == IndexSet::from_one_based({2, 4}));
  CHECK(l2[0].singular);
  CHECK(l2[0].distinguished);
  CHECK(l2[1].cls == IndexSet::from_one_based({1, 3}));
  CHECK_FALSE(l2[1].singular);
}

TEST_CASE("generated pencils: gamma classes and label consistency") {
  const TolerancePolicy tol;
  for (const Pencil& p : test::corpus(100, 9000)) {
    const SpectralSummary s = spectral_summary(p, tol);
    const PencilEigenstructure e = pencil_eigenstructure(p, s, tol);
    for (const ClassLabel& l : e.labels) {
      if (l.distinguished) CHECK(l.singular);
    }
    if (s.rho_ab > tol.rel_sing && s.rho_ab < 1.0) {
      CHECK(classes(e.gamma) == classes(digraph_of(s.rho_ab * p.b() - p.a(), tol)));
    }
    std::size_t distinguished = 0;
    for (const ClassLabel& l : e.labels) distinguished += l.distinguished;
    CHECK(e.basis.size() == distinguished);
  }
}
