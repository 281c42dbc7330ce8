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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <zpencil/digraph.hpp>
#include <zpencil/eigenstructure.hpp>
#include <zpencil/io.hpp>
#include <zpencil/pencil.hpp>
#include <zpencil/testkit.hpp>
#include <zpencil/zmatrix.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace zpencil;

namespace {

using Clock = std::chrono::steady_clock;

Pencil example(int k) {
  return load_pencil(std::string(ZPENCIL_DATA_DIR) + "/ex" + std::to_string(k) + ".pencil");
}

// Collects the first few failure messages of one criterion.
struct Check {
  std::size_t failures = 0;
  std::size_t checks = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// 200 plain instances over n = 2..6 and five densities, plus 50 block pencils.
std::vector<Pencil> instances() {
  std::vector<Pencil> out;
  const double densities[] = {0.15, 0.3, 0.5, 0.7, 0.95};
  for (std::size_t k = 0; k < 200; ++k) {
    testkit::GenConfig cfg;
    cfg.n = 2 + k % 5;
    cfg.seed = 90000 + k;
    cfg.density = densities[(k / 5) % 5];
    out.push_back(testkit::gen_pencil(cfg));
  }
  for (std::uint64_t seed = 0; out.size() < 250; ++seed) {
    testkit::BlockConfig cfg;
    cfg.seed = 91000 + seed;
    cfg.max_blocks = 3;
    Pencil p = testkit::gen_block_pencil(cfg);
    if (p.order() >= 2 && p.order() <= 6) out.push_back(std::move(p));
  }
  return out;
}

// Boolean reachability, independent of the digraph module's traversal.
std::vector<std::vector<char>> reachability(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    r[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) r[i][j] |= g.has_edge(i, j);
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) r[i][j] |= r[i][m] && r[m][j];
    }
  }
  return r;
}

struct Segment3 {
  double lo, hi;
  bool lo_closed, hi_closed;
  std::size_t s;
};

void expect_partition(Check& c, const IntervalPartition& part, const std::vector<Segment3>& want,
                      double tol) {
  c.expect(part.segments.size() == want.size(),
           "segment count " + std::to_string(part.segments.size()));
  if (part.segments.size() != want.size()) return;
  for (std::size_t k = 0; k < want.size(); ++k) {
    const Segment& g = part.segments[k];
    const std::string tag = "segment " + std::to_string(k) + ": ";
    c.expect(near(g.lo, want[k].lo, tol), tag + "lo " + num(g.lo));
    c.expect(near(g.hi, want[k].hi, tol), tag + "hi " + num(g.hi));
    c.expect(g.lo_closed == want[k].lo_closed && g.hi_closed == want[k].hi_closed, tag + "closure");
    c.expect(g.s.value == want[k].s, tag + "class " + std::to_string(g.s.value));
  }
}

// ------------------------------------------------------------- criteria

std::string criterion1(Check& c) {
  const TolerancePolicy tol;
  const auto start = Clock::now();
  const Pencil p = example(1);
  const ThresholdTable t = thresholds(p, tol);
  const IntervalPartition part = partition(p, t, tol);
  const std::vector<std::pair<double, std::size_t>> probes = {
      {0.0, 0}, {0.25, 0}, {0.5, 1}, {0.6, 1}, {2.0 / 3.0, 2}, {0.8, 2}, {1.0, 2}};
  std::vector<std::size_t> got;
  for (const auto& [x, s] : probes) got.push_back(classify_at(p, x, t, tol).value);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();

  c.expect(near(t.tau[1], 0.5, 1e-9), "tau_1 = " + num(t.tau[1]));
  c.expect(near(t.tau[2], 2.0 / 3.0, 1e-9), "tau_2 = " + num(t.tau[2]));
  expect_partition(c, part,
                   {{0.0, 0.5, true, false, 0}, {0.5, 2.0 / 3.0, true, false, 1},
                    {2.0 / 3.0, 1.0, true, true, 2}},
                   1e-9);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    c.expect(got[k] == probes[k].second, "classify_at(" + num(probes[k].first) + ") = " +
                                             std::to_string(got[k]));
  }
  c.expect(secs < 0.1, "runtime " + num(secs) + " s");
  return "tau_1=" + num(t.tau[1]) + " tau_2=" + num(t.tau[2]) + ", runtime " + num(secs) + " s";
}

std::string criterion2(Check& c) {
  const TolerancePolicy tol;
  const double tau2 = (4.0 + std::sqrt(6.0)) / 10.0;
  const Pencil p = example(2);
  const ThresholdTable t = thresholds(p, tol);
  const IntervalPartition part = partition(p, t, tol);
  const SpectralSummary s = spectral_summary(p, tol);
  const auto basis = pencil_eigenbasis(p, s, tol);
  const auto bounds = zs_bound(p, t, classes(union_digraph(p, tol)), tol);

  c.expect(near(t.tau[1], 1.0 / 3.0, 1e-9), "tau_1 = " + num(t.tau[1]));
  for (std::size_t k = 2; k <= 4; ++k) {
    c.expect(near(t.tau[k], tau2, 1e-9), "tau_" + std::to_string(k) + " = " + num(t.tau[k]));
  }
  c.expect(part.segments.size() == 3, "segment count " + std::to_string(part.segments.size()));
  if (part.segments.size() == 3) {
    c.expect(part.segments[0].s.value == 0 && part.segments[1].s.value == 1 &&
                 part.segments[2].s.value == 4,
             "segment classes");
  }
  c.expect(basis.size() == 1, "eigenbasis size " + std::to_string(basis.size()));
  if (basis.size() == 1) {
    const Vector& x = basis[0].x;
    c.expect(std::abs(x[0]) <= 1e-10 && std::abs(x[2]) <= 1e-10, "zeros at 1,3");
    c.expect(x[1] > 1e-10 && x[3] > 1e-10, "positive at 2,4");
  }
  bool found = false;
  for (const ClassBound& b : bounds) {
    if (b.cls == IndexSet::from_one_based({2, 4})) {
      found = true;
      c.expect(!b.full_order && b.max_s == 1, "bound for {2,4} is not s < 2");
    }
  }
  c.expect(found, "no bound for class {2,4}");
  return "tau_1=" + num(t.tau[1]) + " tau_2..4=" + num(t.tau[2]) + ", " +
         std::to_string(basis.size()) + " eigenvector";
}

std::string criterion3(Check& c) {
  const TolerancePolicy tol;
  const Pencil p = example(3);
  const SpectralSummary s = spectral_summary(p, tol);
  const ThresholdTable t = thresholds(p, tol);
  c.expect(std::abs(s.rho_ab) <= 1e-12, "rho(A,B) = " + num(s.rho_ab));
  for (int k = 0; k <= 10; ++k) {
    const double x = k / 10.0;
    const std::size_t got = classify_at(p, x, t, tol).value;
    c.expect(got == 2, "classify_at(" + num(x) + ") = " + std::to_string(got));
  }
  c.expect(m_trichotomy(p, 0.0, tol) == MStatus::SingularM, "m_trichotomy(0) is not SingularM");
  const PencilEigenstructure e = pencil_eigenstructure(p, s, tol);
  c.expect(!e.gamma_is_union && e.gamma == digraph_of(p.a(), tol), "gamma is not G(A)");
  c.expect(e.basis.size() == 1, "eigenbasis size " + std::to_string(e.basis.size()));
  if (e.basis.size() == 1) {
    c.expect(near(e.basis[0].x[0], 1.0, 1e-12) && std::abs(e.basis[0].x[1]) <= 1e-12,
             "eigenvector is not e1");
  }
  return "rho(A,B)=" + num(s.rho_ab);
}

std::string criterion4(Check& c, const std::vector<Pencil>& corpus) {
  const TolerancePolicy tol;
  const auto start = Clock::now();
  std::size_t probes = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Pencil& p = corpus[k];
    const ThresholdTable t = thresholds(p, tol);
    std::vector<double> ts;
    for (int i = 0; i <= 20; ++i) ts.push_back(i / 20.0);
    for (double tau : t.tau) {
      for (double x : {tau, tau - 1e-7, tau + 1e-7}) ts.push_back(std::clamp(x, 0.0, 1.0));
    }
    for (double x : ts) {
      ++probes;
      const Matrix m = p.at(x);
      const std::size_t a = classify_at(p, x, t, tol).value;
      const std::size_t b = classify_direct(m, tol).value;
      const std::size_t o = testkit::oracle_classify(m, tol).value;
      c.expect(a == b && b == o, "instance " + std::to_string(k) + " t=" + num(x) + ": " +
                                     std::to_string(a) + "/" + std::to_string(b) + "/" +
                                     std::to_string(o));
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(secs < 60.0, "runtime " + num(secs) + " s");
  return std::to_string(corpus.size()) + " pencils, " + std::to_string(probes) + " t values, " +
         std::to_string(c.failures) + " disagreements, runtime " + num(secs) + " s";
}

std::string criterion5(Check& c, const std::vector<Pencil>& corpus) {
  const TolerancePolicy tol;
  std::size_t with_notm = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Pencil& p = corpus[k];
    const double rho = spectral_summary(p, tol).rho_ab;
    const std::string tag = "instance " + std::to_string(k) + " ";
    if (rho + 0.01 <= 1.0) {
      for (int i = 0; i <= 10; ++i) {
        const double x = std::min(1.0, rho + 0.01 + i * (1.0 - rho - 0.01) / 10.0);
        c.expect(m_trichotomy(p, x, tol) == MStatus::NonsingularM, tag + "t=" + num(x));
      }
    }
    c.expect(m_trichotomy(p, rho, tol) == MStatus::SingularM, tag + "t=rho");
    if (rho > 0.02) {
      ++with_notm;
      for (double f : {0.1, 0.5, 0.9}) {
        c.expect(m_trichotomy(p, f * rho, tol) == MStatus::NotM, tag + "t=" + num(f) + " rho");
      }
    }
  }
  return std::to_string(corpus.size()) + " pencils (" + std::to_string(with_notm) +
         " with rho > 0.02), " + std::to_string(c.failures) + " violations";
}

std::string criterion6(Check& c, const std::vector<Pencil>& corpus) {
  const TolerancePolicy tol;
  double worst = 0.0;
  std::size_t checked = 0;
  for (std::uint64_t k = 0; checked < 100; ++k) {
    testkit::GenConfig cfg;
    cfg.n = 1 + k % 5;
    cfg.seed = 92000 + k;
    cfg.density = 0.2 + 0.15 * static_cast<double>(k % 5);
    const Pencil p = testkit::gen_pencil(cfg);
    const SpectralSummary s = spectral_summary(p, tol);
    const testkit::OracleEigs o = testkit::oracle_pencil_eigs(p);
    const double d = testkit::matched_distance(s.eigenvalues, o.finite);
    worst = std::max(worst, d);
    c.expect(d <= 1e-8, "seed " + std::to_string(cfg.seed) + " distance " + num(d));
    ++checked;
  }
  std::size_t mono = 0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Pencil& p = corpus[k];
    const ThresholdTable t = thresholds(p, tol);
    const double rho = spectral_summary(p, tol).rho_ab;
    for (std::size_t s = 0; s < p.order(); ++s) {
      c.expect(t.tau[s] <= t.tau[s + 1] + 1e-10, "instance " + std::to_string(k) + " tau_" +
                                                     std::to_string(s) + " > tau_" +
                                                     std::to_string(s + 1));
    }
    c.expect(near(t.tau[p.order()], rho, 1e-10), "instance " + std::to_string(k) + " tau_n != rho");
    ++mono;
  }
  return std::to_string(checked) + " spectra, worst matched distance " + num(worst) + "; " +
         std::to_string(mono) + " threshold tables";
}

std::string criterion7(Check& c, const std::vector<Pencil>& corpus) {
  const TolerancePolicy tol;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Pencil& p = corpus[k];
    const ClassPartition expected = classes(union_digraph(p, tol));
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      c.expect(classes(digraph_of(p.at(x), tol)) == expected,
               "instance " + std::to_string(k) + " t=" + num(x));
    }
  }
  return std::to_string(corpus.size()) + " pencils at 5 values of t";
}

std::string criterion8(Check& c, const std::vector<Pencil>& corpus) {
  const TolerancePolicy tol;
  testkit::Rng rng(93000);
  std::size_t vectors = 0, sampled = 0, multi = 0;
  double worst_res = 0.0, worst_nnls = 0.0;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const Pencil& p = corpus[k];
    const std::size_t n = p.order();
    const std::string tag = "instance " + std::to_string(k) + " ";
    const SpectralSummary s = spectral_summary(p, tol);
    const PencilEigenstructure e = pencil_eigenstructure(p, s, tol);
    const Matrix x = s.rho_ab * p.b() - p.a();
    const double scale = std::max(p.a().norm_inf(), p.b().norm_inf());
    const auto reach = reachability(e.gamma);
    std::vector<Vector> basis;
    for (const EigenBasisVector& v : e.basis) {
      ++vectors;
      const double res = norm_inf(x * v.x);
      worst_res = std::max(worst_res, res / scale);
      c.expect(res <= 1e-8 * scale, tag + "residual " + num(res));
      for (std::size_t i = 0; i < n; ++i) {
        bool predicted = false;
        for (std::size_t j : v.origin_class) predicted = predicted || reach[i][j];
        const bool positive = v.x[i] > 1e-10;
        c.expect(predicted == positive && (positive || std::abs(v.x[i]) <= 1e-10),
                 tag + "support at " + std::to_string(i + 1));
      }
      basis.push_back(v.x);
    }
    const std::size_t nullity = nullspace(x, tol).size();
    if (nullity == 0) continue;
    multi += nullity > 1;
    const auto rays = testkit::nonnegative_kernel_rays(x, tol);
    c.expect(!rays.empty(), tag + "no nonnegative kernel ray");
    if (rays.empty()) continue;
    Vector target(n, 0.0);
    for (const Vector& r : rays) {
      const double w = rng.positive(1.0);
      for (std::size_t i = 0; i < n; ++i) target[i] += w * r[i];
    }
    const double tn = norm_inf(target);
    for (double& v : target) v /= tn;
    const testkit::NnlsResult fit = testkit::nnls(basis, target);
    ++sampled;
    worst_nnls = std::max(worst_nnls, fit.residual);
    c.expect(fit.residual <= 1e-6, tag + "nnls residual " + num(fit.residual));
  }
  c.expect(sampled >= 100, "only " + std::to_string(sampled) + " instances sampled");
  return std::to_string(vectors) + " vectors on " + std::to_string(corpus.size()) +
         " pencils, worst relative residual " + num(worst_res) + "; " + std::to_string(sampled) +
         " kernel samples (" + std::to_string(multi) + " with nullity > 1), worst nnls residual " +
         num(worst_nnls);
}

}  // namespace

int main() {
  const std::vector<Pencil> corpus = instances();
  const std::vector<std::pair<const char*, std::function<std::string(Check&)>>> criteria = {
      {"first example thresholds, partition and classes", criterion1},
      {"second example thresholds, partition, eigenvector and bound", criterion2},
      {"third example stays in L_2 with eigenvector e1", criterion3},
      {"classify_at = classify_direct = oracle", [&](Check& c) { return criterion4(c, corpus); }},
      {"M-matrix trichotomy around rho(A,B)", [&](Check& c) { return criterion5(c, corpus); }},
      {"pencil eigenvalues and threshold monotonicity", [&](Check& c) { return criterion6(c, corpus); }},
      {"classes of G(tB-A) equal those of G(A) u G(B)", [&](Check& c) { return criterion7(c, corpus); }},
      {"eigenbasis residual, support and cone spanning", [&](Check& c) { return criterion8(c, corpus); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    std::string summary;
    try {
      summary = criteria[k].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures == 0;
    failed += !ok;
    std::printf("criterion %zu %s: %s. %s\n", k + 1, ok ? "PASS" : "FAIL", criteria[k].first,
                summary.c_str());
    for (const std::string& n : c.notes) std::printf("    %s\n", n.c_str());
  }
  return failed == 0 ? 0 : 1;
}
