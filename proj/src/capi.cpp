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

#include "zpencil/zpencil.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "zpencil/digraph.hpp"
#include "zpencil/error.hpp"
#include "zpencil/io.hpp"
#include "zpencil/report.hpp"

struct zp_pencil {
  zpencil::Pencil value;
};

struct zp_analysis {
  zpencil::Pencil pencil;
  zpencil::Report report;
  bool complete = true;
};

namespace {

thread_local std::string g_last_error;

zp_status to_status(zpencil::ErrorCode c) {
  using zpencil::ErrorCode;
  switch (c) {
    case ErrorCode::InvalidArgument:
      return ZP_E_INVALID_ARGUMENT;
    case ErrorCode::Dimension:
      return ZP_E_DIMENSION;
    case ErrorCode::OutOfRange:
      return ZP_E_OUT_OF_RANGE;
    case ErrorCode::Parse:
      return ZP_E_PARSE;
    case ErrorCode::Singular:
      return ZP_E_SINGULAR;
    case ErrorCode::NotZ:
      return ZP_E_NOT_Z;
    case ErrorCode::NotM:
      return ZP_E_NOT_M;
    case ErrorCode::ValidationFailed:
      return ZP_E_VALIDATION;
    case ErrorCode::GuardExceeded:
      return ZP_E_GUARD;
    case ErrorCode::ConstructionFailed:
      return ZP_E_CONSTRUCTION;
    case ErrorCode::Io:
      return ZP_E_IO;
  }
  return ZP_E_INTERNAL;
}

zp_status fail(zp_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <class Fn>
zp_status guarded(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const zpencil::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZP_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZP_E_INTERNAL, e.what());
  } catch (...) {
    return fail(ZP_E_INTERNAL, "unknown exception");
  }
}

zpencil::TolerancePolicy policy(const zp_tolerance* tol) {
  zpencil::TolerancePolicy p;
  if (tol) {
    p.rel_sing = tol->rel_sing;
    p.rel_eig = tol->rel_eig;
    p.abs_floor = tol->abs_floor;
  }
  p.check();
  return p;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_index_set(const zpencil::IndexSet& set, size_t* out, size_t cap, size_t* len) {
  const auto one = set.one_based();
  if (len) *len = one.size();
  if (out) {
    for (size_t k = 0; k < one.size() && k < cap; ++k) out[k] = one[k];
  }
}

#define ZP_REQUIRE(cond, msg) \
  do {                        \
    if (!(cond)) return fail(ZP_E_INVALID_ARGUMENT, msg); \
  } while (0)

#define ZP_REQUIRE_VALID(a)                                                       \
  do {                                                                            \
    ZP_REQUIRE((a) != nullptr, "null analysis handle");                           \
    if (!(a)->report.validation.ok())                                             \
      return fail(ZP_E_VALIDATION, "pencil fails the standing conditions");       \
    ZP_REQUIRE((a)->complete, "analysis handle holds validation only");           \
  } while (0)

}  // namespace

extern "C" {

const char* zp_version(void) { return zpencil::kVersion; }

const char* zp_status_string(zp_status status) {
  switch (status) {
    case ZP_OK:
      return "ok";
    case ZP_E_INVALID_ARGUMENT:
      return "invalid argument";
    case ZP_E_DIMENSION:
      return "dimension mismatch";
    case ZP_E_OUT_OF_RANGE:
      return "out of range";
    case ZP_E_PARSE:
      return "parse error";
    case ZP_E_SINGULAR:
      return "singular matrix";
    case ZP_E_NOT_Z:
      return "not a Z-matrix";
    case ZP_E_NOT_M:
      return "not an M-matrix";
    case ZP_E_VALIDATION:
      return "validation failed";
    case ZP_E_GUARD:
      return "enumeration guard exceeded";
    case ZP_E_CONSTRUCTION:
      return "construction failed";
    case ZP_E_IO:
      return "i/o error";
    case ZP_E_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* zp_last_error(void) { return g_last_error.c_str(); }

void zp_string_free(char* s) { std::free(s); }

zp_tolerance zp_tolerance_default(void) {
  const zpencil::TolerancePolicy p;
  return zp_tolerance{p.rel_sing, p.rel_eig, p.abs_floor};
}

zp_status zp_pencil_parse(const char* text, zp_pencil** out) {
  return guarded([&] {
    ZP_REQUIRE(text && out, "null argument");
    *out = new zp_pencil{zpencil::parse_pencil(text)};
    return ZP_OK;
  });
}

zp_status zp_pencil_load(const char* path, zp_pencil** out) {
  return guarded([&] {
    ZP_REQUIRE(path && out, "null argument");
    *out = new zp_pencil{zpencil::load_pencil(path)};
    return ZP_OK;
  });
}

zp_status zp_pencil_create(size_t n, const double* a, const double* b, zp_pencil** out) {
  return guarded([&] {
    ZP_REQUIRE(a && b && out, "null argument");
    ZP_REQUIRE(n > 0, "order must be positive");
    zpencil::Matrix ma(n, n, std::vector<double>(a, a + n * n));
    zpencil::Matrix mb(n, n, std::vector<double>(b, b + n * n));
    *out = new zp_pencil{zpencil::Pencil(std::move(ma), std::move(mb))};
    return ZP_OK;
  });
}

void zp_pencil_free(zp_pencil* p) { delete p; }

size_t zp_pencil_order(const zp_pencil* p) { return p ? p->value.order() : 0; }

zp_status zp_pencil_matrix(const zp_pencil* p, char which, double* out) {
  return guarded([&] {
    ZP_REQUIRE(p && out, "null argument");
    ZP_REQUIRE(which == 'A' || which == 'B', "which must be 'A' or 'B'");
    const auto& m = which == 'A' ? p->value.a() : p->value.b();
    std::copy(m.entries().begin(), m.entries().end(), out);
    return ZP_OK;
  });
}

zp_status zp_pencil_format(const zp_pencil* p, char** out) {
  return guarded([&] {
    ZP_REQUIRE(p && out, "null argument");
    *out = dup_string(zpencil::format_pencil(p->value));
    return ZP_OK;
  });
}

zp_status zp_m_trichotomy(const zp_pencil* p, double t, const zp_tolerance* tol,
                          zp_m_status* out) {
  return guarded([&] {
    ZP_REQUIRE(p && out, "null argument");
    switch (zpencil::m_trichotomy(p->value, t, policy(tol))) {
      case zpencil::MStatus::NotM:
        *out = ZP_NOT_M;
        break;
      case zpencil::MStatus::SingularM:
        *out = ZP_SINGULAR_M;
        break;
      case zpencil::MStatus::NonsingularM:
        *out = ZP_NONSINGULAR_M;
        break;
    }
    return ZP_OK;
  });
}

zp_status zp_graph_dot(const zp_pencil* p, zp_graph_kind kind, double t, const zp_tolerance* tol,
                       char** out) {
  return guarded([&] {
    ZP_REQUIRE(p && out, "null argument");
    const auto pol = policy(tol);
    const auto& pen = p->value;
    std::string dot;
    switch (kind) {
      case ZP_GRAPH_A:
        dot = zpencil::to_dot(zpencil::digraph_of(pen.a(), pol), "GA");
        break;
      case ZP_GRAPH_B:
        dot = zpencil::to_dot(zpencil::digraph_of(pen.b(), pol), "GB");
        break;
      case ZP_GRAPH_UNION:
        dot = zpencil::to_dot(zpencil::union_digraph(pen, pol), "GAB");
        break;
      case ZP_GRAPH_REDUCED:
        dot = zpencil::to_dot(zpencil::reduced_graph(zpencil::union_digraph(pen, pol)), "R");
        break;
      case ZP_GRAPH_PENCIL:
        if (!(t >= 0.0 && t <= 1.0)) return fail(ZP_E_OUT_OF_RANGE, "t must lie in [0, 1]");
        dot = zpencil::to_dot(zpencil::digraph_of(pen.at(t), pol), "GtBA");
        break;
      default:
        return fail(ZP_E_INVALID_ARGUMENT, "unknown graph kind");
    }
    *out = dup_string(dot);
    return ZP_OK;
  });
}

zp_status zp_analyze(const zp_pencil* p, const zp_tolerance* tol, size_t max_order,
                     zp_analysis** out) {
  return guarded([&] {
    ZP_REQUIRE(p && out, "null argument");
    zpencil::EnumerationGuard guard;
    if (max_order > 0) guard.max_order = max_order;
    auto* a = new zp_analysis{p->value, zpencil::analyze(p->value, policy(tol), guard)};
    *out = a;
    if (!a->report.validation.ok()) {
      std::string msg = "pencil fails the standing conditions";
      if (!a->report.validation.violations.empty()) {
        msg += ": " + a->report.validation.violations.front().message;
      }
      return fail(ZP_E_VALIDATION, msg);
    }
    return ZP_OK;
  });
}

zp_status zp_validate(const zp_pencil* p, const zp_tolerance* tol, zp_analysis** out) {
  return guarded([&] {
    ZP_REQUIRE(p && out, "null argument");
    zpencil::Report r;
    r.tol = policy(tol);
    r.validation = zpencil::validate(p->value, r.tol);
    auto* a = new zp_analysis{p->value, std::move(r), false};
    *out = a;
    if (!a->report.validation.ok()) {
      return fail(ZP_E_VALIDATION, "pencil fails the standing conditions");
    }
    return ZP_OK;
  });
}

void zp_analysis_free(zp_analysis* a) { delete a; }

size_t zp_analysis_order(const zp_analysis* a) { return a ? a->pencil.order() : 0; }

int zp_analysis_valid(const zp_analysis* a) { return a && a->report.validation.ok() ? 1 : 0; }

zp_status zp_analysis_conditions(const zp_analysis* a, int* c1, int* c2, int* c3) {
  ZP_REQUIRE(a, "null analysis handle");
  const auto& v = a->report.validation;
  if (c1) *c1 = v.c1;
  if (c2) *c2 = v.c2;
  if (c3) *c3 = v.c3;
  return ZP_OK;
}

zp_status zp_analysis_witness(const zp_analysis* a, double* u) {
  ZP_REQUIRE(a && u, "null argument");
  const auto& w = a->report.validation.witness_u;
  if (!w) return fail(ZP_E_VALIDATION, "no witness: condition (3) does not hold");
  std::copy(w->begin(), w->end(), u);
  return ZP_OK;
}

size_t zp_analysis_violation_count(const zp_analysis* a) {
  return a ? a->report.validation.violations.size() : 0;
}

const char* zp_analysis_violation(const zp_analysis* a, size_t i) {
  if (!a || i >= a->report.validation.violations.size()) return nullptr;
  return a->report.validation.violations[i].message.c_str();
}

zp_status zp_analysis_spectrum(const zp_analysis* a, double* mu, double* rho_ab) {
  ZP_REQUIRE_VALID(a);
  if (mu) *mu = a->report.spectral->mu;
  if (rho_ab) *rho_ab = a->report.spectral->rho_ab;
  return ZP_OK;
}

size_t zp_analysis_eigenvalue_count(const zp_analysis* a) {
  return a && a->report.spectral ? a->report.spectral->eigenvalues.size() : 0;
}

zp_status zp_analysis_eigenvalue(const zp_analysis* a, size_t i, double* re, double* im) {
  ZP_REQUIRE_VALID(a);
  const auto& ev = a->report.spectral->eigenvalues;
  if (i >= ev.size()) return fail(ZP_E_OUT_OF_RANGE, "eigenvalue index out of range");
  if (re) *re = ev[i].real();
  if (im) *im = ev[i].imag();
  return ZP_OK;
}

zp_status zp_analysis_sigma(const zp_analysis* a, size_t s, double* out) {
  ZP_REQUIRE_VALID(a);
  ZP_REQUIRE(out, "null argument");
  const auto& sig = a->report.thresholds->sigma;
  if (s < 1 || s > sig.size()) return fail(ZP_E_OUT_OF_RANGE, "sigma index must be in 1..n");
  *out = sig[s - 1];
  return ZP_OK;
}

zp_status zp_analysis_tau(const zp_analysis* a, size_t s, double* out) {
  ZP_REQUIRE_VALID(a);
  ZP_REQUIRE(out, "null argument");
  const auto& tau = a->report.thresholds->tau;
  if (s >= tau.size()) return fail(ZP_E_OUT_OF_RANGE, "tau index must be in 0..n");
  *out = tau[s];
  return ZP_OK;
}

zp_status zp_analysis_argmax(const zp_analysis* a, size_t s, size_t* out, size_t cap, size_t* len) {
  ZP_REQUIRE_VALID(a);
  const auto& arg = a->report.thresholds->argmax;
  if (s < 1 || s > arg.size()) return fail(ZP_E_OUT_OF_RANGE, "argmax index must be in 1..n");
  copy_index_set(arg[s - 1], out, cap, len);
  return ZP_OK;
}

zp_status zp_analysis_classify(const zp_analysis* a, double t, size_t* s) {
  ZP_REQUIRE_VALID(a);
  ZP_REQUIRE(s, "null argument");
  return guarded([&] {
    *s = zpencil::classify_at(a->pencil, t, *a->report.thresholds, a->report.tol).value;
    return ZP_OK;
  });
}

size_t zp_analysis_segment_count(const zp_analysis* a) {
  return a && a->report.partition ? a->report.partition->segments.size() : 0;
}

zp_status zp_analysis_segment(const zp_analysis* a, size_t i, zp_segment* out) {
  ZP_REQUIRE_VALID(a);
  ZP_REQUIRE(out, "null argument");
  const auto& segs = a->report.partition->segments;
  if (i >= segs.size()) return fail(ZP_E_OUT_OF_RANGE, "segment index out of range");
  const auto& g = segs[i];
  *out = zp_segment{g.lo, g.hi, g.lo_closed ? 1 : 0, g.hi_closed ? 1 : 0, g.s.value};
  return ZP_OK;
}

int zp_analysis_gamma_is_union(const zp_analysis* a) {
  return a && a->report.eigen && a->report.eigen->gamma_is_union ? 1 : 0;
}

size_t zp_analysis_class_count(const zp_analysis* a) {
  return a && a->report.eigen ? a->report.eigen->labels.size() : 0;
}

zp_status zp_analysis_class(const zp_analysis* a, size_t i, size_t* vertices, size_t cap,
                            size_t* len, int* singular, int* distinguished) {
  ZP_REQUIRE_VALID(a);
  const auto& labels = a->report.eigen->labels;
  if (i >= labels.size()) return fail(ZP_E_OUT_OF_RANGE, "class index out of range");
  copy_index_set(labels[i].cls, vertices, cap, len);
  if (singular) *singular = labels[i].singular;
  if (distinguished) *distinguished = labels[i].distinguished;
  return ZP_OK;
}

size_t zp_analysis_eigvec_count(const zp_analysis* a) {
  return a && a->report.eigen ? a->report.eigen->basis.size() : 0;
}

zp_status zp_analysis_eigvec(const zp_analysis* a, size_t i, double* values, size_t* support,
                             size_t support_cap, size_t* support_len, size_t* origin,
                             size_t origin_cap, size_t* origin_len) {
  ZP_REQUIRE_VALID(a);
  const auto& basis = a->report.eigen->basis;
  if (i >= basis.size()) return fail(ZP_E_OUT_OF_RANGE, "eigenvector index out of range");
  if (values) std::copy(basis[i].x.begin(), basis[i].x.end(), values);
  copy_index_set(basis[i].support, support, support_cap, support_len);
  copy_index_set(basis[i].origin_class, origin, origin_cap, origin_len);
  return ZP_OK;
}

size_t zp_analysis_bound_count(const zp_analysis* a) { return a ? a->report.bounds.size() : 0; }

zp_status zp_analysis_bound(const zp_analysis* a, size_t i, size_t* cls, size_t cap, size_t* len,
                            size_t* max_s, int* full_order) {
  ZP_REQUIRE_VALID(a);
  const auto& b = a->report.bounds;
  if (i >= b.size()) return fail(ZP_E_OUT_OF_RANGE, "bound index out of range");
  copy_index_set(b[i].cls, cls, cap, len);
  if (max_s) *max_s = b[i].max_s;
  if (full_order) *full_order = b[i].full_order;
  return ZP_OK;
}

zp_status zp_analysis_json(const zp_analysis* a, const char* section, char** out) {
  return guarded([&] {
    ZP_REQUIRE(a && out, "null argument");
    const auto sec = zpencil::parse_section(section ? section : "report");
    if (!a->complete && sec != zpencil::ReportSection::Validation) {
      return fail(ZP_E_INVALID_ARGUMENT, "analysis handle holds validation only");
    }
    *out = dup_string(zpencil::to_json(a->report, sec));
    return ZP_OK;
  });
}

}  // extern "C"
