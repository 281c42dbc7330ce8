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


// zpencil command-line tool. Talks to the library through the C API only.

#include <zpencil/zpencil.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rational.hpp"

namespace {

using nlohmann::json;
using zpencil::tools::annotate;
using zpencil::tools::shortest;

enum Exit : int { kOk = 0, kInvalid = 1, kUsage = 2, kFailure = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(zp_status s) {
  switch (s) {
    case ZP_OK:
      return kOk;
    case ZP_E_VALIDATION:
      return kInvalid;
    case ZP_E_INVALID_ARGUMENT:
    case ZP_E_DIMENSION:
    case ZP_E_OUT_OF_RANGE:
    case ZP_E_PARSE:
    case ZP_E_IO:
      return kUsage;
    default:
      return kFailure;
  }
}

void check(zp_status s) {
  if (s != ZP_OK) throw Failure{exit_for(s), zp_last_error()};
}

struct PencilFree {
  void operator()(zp_pencil* p) const { zp_pencil_free(p); }
};
struct AnalysisFree {
  void operator()(zp_analysis* a) const { zp_analysis_free(a); }
};
using PencilPtr = std::unique_ptr<zp_pencil, PencilFree>;
using AnalysisPtr = std::unique_ptr<zp_analysis, AnalysisFree>;

std::string take(char* s) {
  std::string out = s ? s : "";
  zp_string_free(s);
  return out;
}

struct Global {
  bool json = false;
  double rel_sing = 0.0;  // 0 leaves the default (or the environment) in place
  size_t max_order = 0;
};

zp_tolerance tolerance(const Global& g) {
  zp_tolerance tol = zp_tolerance_default();
  if (const char* env = std::getenv("ZPENCIL_TOL_REL_SING"); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (*end != '\0' || !(v > 0.0)) {
      throw Failure{kUsage, std::string("ZPENCIL_TOL_REL_SING is not a positive number: ") + env};
    }
    tol.rel_sing = v;
  }
  if (g.rel_sing > 0.0) tol.rel_sing = g.rel_sing;
  if (tol.rel_eig > tol.rel_sing) tol.rel_eig = tol.rel_sing;
  return tol;
}

PencilPtr load(const std::string& path) {
  zp_pencil* p = nullptr;
  check(zp_pencil_load(path.c_str(), &p));
  return PencilPtr(p);
}

std::string set_text(const std::vector<size_t>& v) {
  std::string s = "{";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s + "}";
}

std::string vec_text(const std::vector<double>& v) {
  std::string s = "[";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += shortest(v[k]);
  }
  return s + "]";
}

std::string pad(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

template <class Fn>
std::vector<size_t> fetch_set(size_t n, Fn&& fn) {
  std::vector<size_t> buf(n);
  size_t len = 0;
  check(fn(buf.data(), buf.size(), &len));
  buf.resize(len);
  return buf;
}

void print_validation(zp_analysis* a, size_t n) {
  int c1 = 0, c2 = 0, c3 = 0;
  check(zp_analysis_conditions(a, &c1, &c2, &c3));
  auto mark = [](int ok) { return ok ? "holds" : "fails"; };
  std::cout << "condition 1 (A >= 0): " << mark(c1) << "\n"
            << "condition 2 (b_ij <= a_ij for i != j): " << mark(c2) << "\n"
            << "condition 3 ((B-A)u > 0 for some u > 0): " << mark(c3) << "\n";
  std::vector<double> u(n);
  if (zp_analysis_witness(a, u.data()) == ZP_OK) std::cout << "witness u = " << vec_text(u) << "\n";
  for (size_t k = 0; k < zp_analysis_violation_count(a); ++k) {
    std::cout << "violation: " << zp_analysis_violation(a, k) << "\n";
  }
  std::cout << (zp_analysis_valid(a) ? "valid" : "invalid") << "\n";
}

std::string section_json(zp_analysis* a, const char* section) {
  char* out = nullptr;
  check(zp_analysis_json(a, section, &out));
  return take(out);
}

void print_warnings(zp_analysis* a) {
  const json report = json::parse(section_json(a, "report"));
  for (const auto& w : report.at("warnings")) {
    std::cerr << "zpencil: warning: " << w.get<std::string>() << "\n";
  }
}

// Full analysis. An invalid pencil prints its validation result and exits 1.
struct Session {
  PencilPtr pencil;
  AnalysisPtr analysis;
  zp_tolerance tol{};
  size_t n = 0;

  Session(const std::string& path, const Global& g, bool json_always = false)
      : pencil(load(path)), tol(tolerance(g)) {
    n = zp_pencil_order(pencil.get());
    zp_analysis* a = nullptr;
    const zp_status s = zp_analyze(pencil.get(), &tol, g.max_order, &a);
    analysis.reset(a);
    if (s == ZP_E_VALIDATION && analysis) {
      if (g.json || json_always) {
        std::cout << section_json(analysis.get(), "report") << "\n";
      } else {
        print_validation(analysis.get(), n);
      }
      throw Failure{kInvalid, ""};
    }
    check(s);
  }

  zp_analysis* get() const { return analysis.get(); }
};

// ------------------------------------------------------------------ commands

int cmd_validate(const std::string& path, const Global& g) {
  auto pencil = load(path);
  const zp_tolerance tol = tolerance(g);
  zp_analysis* raw = nullptr;
  const zp_status s = zp_validate(pencil.get(), &tol, &raw);
  AnalysisPtr a(raw);
  if (s != ZP_E_VALIDATION) check(s);
  if (g.json) {
    std::cout << section_json(a.get(), "validation") << "\n";
  } else {
    print_validation(a.get(), zp_pencil_order(pencil.get()));
  }
  return zp_analysis_valid(a.get()) ? kOk : kInvalid;
}

int cmd_spectrum(const std::string& path, const Global& g) {
  Session s(path, g);
  if (g.json) {
    std::cout << section_json(s.get(), "spectrum") << "\n";
    return kOk;
  }
  double mu = 0.0, rho = 0.0;
  check(zp_analysis_spectrum(s.get(), &mu, &rho));
  std::cout << "mu       = " << annotate(mu) << "\n"
            << "rho(A,B) = " << annotate(rho) << "\n"
            << "eigenvalues:\n";
  for (size_t k = 0; k < zp_analysis_eigenvalue_count(s.get()); ++k) {
    double re = 0.0, im = 0.0;
    check(zp_analysis_eigenvalue(s.get(), k, &re, &im));
    std::cout << "  " << shortest(re);
    if (im != 0.0) std::cout << (im > 0 ? " + " : " - ") << shortest(std::abs(im)) << "i";
    std::cout << "\n";
  }
  print_warnings(s.get());
  return kOk;
}

void print_partition(zp_analysis* a) {
  for (size_t k = 0; k < zp_analysis_segment_count(a); ++k) {
    zp_segment seg{};
    check(zp_analysis_segment(a, k, &seg));
    std::cout << "  " << (seg.lo_closed ? "[" : "(") << shortest(seg.lo) << ", " << shortest(seg.hi)
              << (seg.hi_closed ? "]" : ")") << "  L_" << seg.s << "\n";
  }
}

int cmd_thresholds(const std::string& path, const Global& g) {
  Session s(path, g);
  if (g.json) {
    std::cout << section_json(s.get(), "thresholds") << "\n";
    return kOk;
  }
  std::cout << pad("s", 4) << pad("sigma_s", 34) << pad("tau_s", 34) << "argmax\n";
  for (size_t k = 0; k <= s.n; ++k) {
    double tau = 0.0;
    check(zp_analysis_tau(s.get(), k, &tau));
    std::string sigma = "-";
    std::string arg = "{}";
    if (k > 0) {
      double v = 0.0;
      check(zp_analysis_sigma(s.get(), k, &v));
      sigma = annotate(v);
      arg = set_text(fetch_set(s.n, [&](size_t* out, size_t cap, size_t* len) {
        return zp_analysis_argmax(s.get(), k, out, cap, len);
      }));
    }
    std::cout << pad(std::to_string(k), 4) << pad(sigma, 34) << pad(annotate(tau), 34) << arg
              << "\n";
  }
  std::cout << "partition:\n";
  print_partition(s.get());
  return kOk;
}

int cmd_partition(const std::string& path, const Global& g) {
  Session s(path, g);
  if (g.json) {
    std::cout << section_json(s.get(), "partition") << "\n";
    return kOk;
  }
  print_partition(s.get());
  return kOk;
}

int cmd_classify(const std::string& path, double t, const Global& g) {
  Session s(path, g);
  size_t cls = 0;
  check(zp_analysis_classify(s.get(), t, &cls));
  const std::string label = "L_" + std::to_string(cls);
  if (g.json) {
    std::cout << json{{"t", t}, {"s", cls}, {"class", label}}.dump() << "\n";
  } else {
    std::cout << label << "\n";
  }
  return kOk;
}

const char* status_name(zp_m_status m) {
  switch (m) {
    case ZP_NOT_M:
      return "NotM";
    case ZP_SINGULAR_M:
      return "SingularM";
    case ZP_NONSINGULAR_M:
      return "NonsingularM";
  }
  return "?";
}

int cmd_sweep(const std::string& path, size_t steps, const Global& g) {
  Session s(path, g);
  json rows = json::array();
  if (!g.json) std::cout << "t,s,m_status\n";
  for (size_t i = 0; i < steps; ++i) {
    const double t = i + 1 == steps ? 1.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
    size_t cls = 0;
    zp_m_status m{};
    check(zp_analysis_classify(s.get(), t, &cls));
    check(zp_m_trichotomy(s.pencil.get(), t, &s.tol, &m));
    if (g.json) {
      rows.push_back({{"t", t}, {"s", cls}, {"m_status", status_name(m)}});
    } else {
      std::cout << shortest(t) << "," << cls << "," << status_name(m) << "\n";
    }
  }
  if (g.json) std::cout << rows.dump() << "\n";
  return kOk;
}

int cmd_classes(const std::string& path, const Global& g) {
  Session s(path, g);
  if (g.json) {
    std::cout << section_json(s.get(), "classes") << "\n";
    return kOk;
  }
  std::cout << "gamma = " << (zp_analysis_gamma_is_union(s.get()) ? "G(A) u G(B)" : "G(A)") << "\n";
  for (size_t k = 0; k < zp_analysis_class_count(s.get()); ++k) {
    int singular = 0, distinguished = 0;
    const auto v = fetch_set(s.n, [&](size_t* out, size_t cap, size_t* len) {
      return zp_analysis_class(s.get(), k, out, cap, len, &singular, &distinguished);
    });
    std::cout << "C" << k + 1 << " " << set_text(v) << " " << (singular ? "singular" : "nonsingular")
              << (distinguished ? " distinguished" : "") << "\n";
  }
  print_warnings(s.get());
  return kOk;
}

int cmd_eigvecs(const std::string& path, const Global& g) {
  Session s(path, g);
  if (g.json) {
    std::cout << section_json(s.get(), "eigenbasis") << "\n";
    return kOk;
  }
  const size_t count = zp_analysis_eigvec_count(s.get());
  if (count == 0) std::cout << "no nonnegative null vectors\n";
  for (size_t k = 0; k < count; ++k) {
    std::vector<double> x(s.n);
    std::vector<size_t> support(s.n), origin(s.n);
    size_t slen = 0, olen = 0;
    check(zp_analysis_eigvec(s.get(), k, x.data(), support.data(), support.size(), &slen,
                             origin.data(), origin.size(), &olen));
    support.resize(slen);
    origin.resize(olen);
    std::cout << "x" << k + 1 << " class " << set_text(origin) << " support " << set_text(support)
              << "\n  " << vec_text(x) << "\n";
  }
  print_warnings(s.get());
  return kOk;
}

int cmd_bounds(const std::string& path, const Global& g) {
  Session s(path, g);
  if (g.json) {
    std::cout << section_json(s.get(), "bounds") << "\n";
    return kOk;
  }
  for (size_t k = 0; k < zp_analysis_bound_count(s.get()); ++k) {
    size_t max_s = 0;
    int full = 0;
    const auto v = fetch_set(s.n, [&](size_t* out, size_t cap, size_t* len) {
      return zp_analysis_bound(s.get(), k, out, cap, len, &max_s, &full);
    });
    std::cout << "class " << set_text(v) << ": s " << (full ? "<= " : "< ")
              << (full ? max_s : max_s + 1) << " for 0 < t < rho(A,B)\n";
  }
  return kOk;
}

int cmd_report(const std::string& path, const Global& g) {
  Session s(path, g, true);
  std::cout << section_json(s.get(), "report") << "\n";
  return kOk;
}

int cmd_graph(const std::string& path, const std::string& kind, std::optional<double> t,
              const Global& g) {
  static const std::vector<std::pair<std::string, zp_graph_kind>> kinds = {
      {"A", ZP_GRAPH_A},
      {"B", ZP_GRAPH_B},
      {"union", ZP_GRAPH_UNION},
      {"reduced", ZP_GRAPH_REDUCED},
      {"pencil", ZP_GRAPH_PENCIL}};
  zp_graph_kind k = ZP_GRAPH_UNION;
  for (const auto& [name, value] : kinds) {
    if (name == kind) k = value;
  }
  if (k == ZP_GRAPH_PENCIL && !t) throw Failure{kUsage, "--kind pencil requires --t"};
  auto pencil = load(path);
  const zp_tolerance tol = tolerance(g);
  char* out = nullptr;
  check(zp_graph_dot(pencil.get(), k, t.value_or(0.0), &tol, &out));
  const std::string dot = take(out);
  if (g.json) {
    json j{{"kind", kind}, {"dot", dot}};
    if (t) j["t"] = *t;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << dot;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze Z-matrix pencils (A, B)."};
  app.set_version_flag("--version", std::string(zp_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--rel-sing", g.rel_sing, "Relative singularity tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-order", g.max_order, "Largest order for subset enumeration (default 16)")
      ->check(CLI::PositiveNumber);

  std::string path;
  double t = 0.0;
  std::optional<double> graph_t;
  size_t steps = 11;
  std::string kind = "union";
  int rc = kOk;
  std::function<int()> run;

  auto command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "Pencil file (text or JSON)")->required();
    return sub;
  };

  command("validate", "Check the standing conditions")->callback([&] {
    run = [&] { return cmd_validate(path, g); };
  });
  command("spectrum", "mu, rho(A,B) and the finite pencil eigenvalues")->callback([&] {
    run = [&] { return cmd_spectrum(path, g); };
  });
  command("thresholds", "sigma_s, tau_s and the class partition of [0,1]")->callback([&] {
    run = [&] { return cmd_thresholds(path, g); };
  });
  command("partition", "Class partition of [0,1]")->callback([&] {
    run = [&] { return cmd_partition(path, g); };
  });
  auto* classify = command("classify", "Class L_s of tB - A");
  classify->add_option("--t", t, "Parameter in [0,1]")->required()->check(CLI::Range(0.0, 1.0));
  classify->callback([&] { run = [&] { return cmd_classify(path, t, g); }; });
  auto* sweep = command("sweep", "CSV of t, s, m_status on a uniform grid");
  sweep->add_option("--steps", steps, "Grid points, at least 2")
      ->capture_default_str()
      ->check(CLI::Range(size_t{2}, size_t{1000000}));
  sweep->callback([&] { run = [&] { return cmd_sweep(path, steps, g); }; });
  command("classes", "Classes of gamma and their labels")->callback([&] {
    run = [&] { return cmd_classes(path, g); };
  });
  command("eigvecs", "Nonnegative null basis of rho(A,B) B - A")->callback([&] {
    run = [&] { return cmd_eigvecs(path, g); };
  });
  command("bounds", "Class-size bounds on s below rho(A,B)")->callback([&] {
    run = [&] { return cmd_bounds(path, g); };
  });
  command("report", "Full JSON report")->callback([&] {
    run = [&] { return cmd_report(path, g); };
  });
  auto* graph = command("graph", "DOT export of a digraph");
  graph->add_option("--kind", kind, "union, A, B, reduced or pencil")
      ->capture_default_str()
      ->check(CLI::IsMember({"union", "A", "B", "reduced", "pencil"}));
  graph->add_option("--t", graph_t, "Parameter for --kind pencil")->check(CLI::Range(0.0, 1.0));
  graph->callback([&] { run = [&] { return cmd_graph(path, kind, graph_t, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    rc = run();
  } catch (const Failure& f) {
    if (!f.message.empty()) std::cerr << "zpencil: " << f.message << "\n";
    rc = f.code;
  } catch (const std::exception& e) {
    std::cerr << "zpencil: " << e.what() << "\n";
    rc = kFailure;
  }
  return rc;
}
