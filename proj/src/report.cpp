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

#include "zpencil/report.hpp"

#include <json.hpp>

#include "zpencil/error.hpp"

namespace zpencil {

using nlohmann::json;

Report analyze(const Pencil& p, const TolerancePolicy& tol, const EnumerationGuard& guard) {
  Report r;
  r.tol = tol;
  r.guard = guard;
  r.validation = validate(p, tol);
  if (!r.validation.ok()) return r;
  r.spectral = spectral_summary(p, tol);
  r.thresholds = thresholds(p, tol, guard);
  r.partition = partition(p, *r.thresholds, tol);
  r.eigen = pencil_eigenstructure(p, *r.spectral, tol);
  r.bounds = zs_bound(p, *r.thresholds, classes(union_digraph(p, tol)), tol);
  return r;
}

ReportSection parse_section(std::string_view name) {
  if (name == "report" || name == "full") return ReportSection::Full;
  if (name == "validation") return ReportSection::Validation;
  if (name == "spectrum") return ReportSection::Spectrum;
  if (name == "thresholds") return ReportSection::Thresholds;
  if (name == "partition") return ReportSection::Partition;
  if (name == "classes") return ReportSection::Classes;
  if (name == "eigenbasis") return ReportSection::Eigenbasis;
  if (name == "bounds") return ReportSection::Bounds;
  throw Error(ErrorCode::InvalidArgument, "unknown report section '" + std::string(name) + "'");
}

namespace {

json index_json(const IndexSet& s) { return json(s.one_based()); }

json validation_json(const ValidationReport& v) {
  json j;
  j["c1"] = v.c1;
  j["c2"] = v.c2;
  j["c3"] = v.c3;
  j["ok"] = v.ok();
  j["witness_u"] = v.witness_u ? json(*v.witness_u) : json(nullptr);
  json viol = json::array();
  for (const Violation& x : v.violations) {
    json e;
    e["condition"] = x.condition;
    e["row"] = x.row ? json(*x.row + 1) : json(nullptr);
    e["col"] = x.col ? json(*x.col + 1) : json(nullptr);
    e["value"] = x.value;
    e["message"] = x.message;
    viol.push_back(std::move(e));
  }
  j["violations"] = std::move(viol);
  return j;
}

json eigenvalues_json(const SpectralSummary& s) {
  json a = json::array();
  for (const Complex& z : s.eigenvalues) a.push_back({{"re", z.real()}, {"im", z.imag()}});
  return a;
}

json partition_json(const IntervalPartition& p) {
  json a = json::array();
  for (const Segment& seg : p.segments) {
    a.push_back({{"lo", seg.lo},
                 {"hi", seg.hi},
                 {"lo_closed", seg.lo_closed},
                 {"hi_closed", seg.hi_closed},
                 {"s", seg.s.value}});
  }
  return a;
}

json classes_json(const PencilEigenstructure& e) {
  json a = json::array();
  for (const ClassLabel& l : e.labels) {
    a.push_back({{"vertices", index_json(l.cls)},
                 {"singular", l.singular},
                 {"distinguished", l.distinguished}});
  }
  return a;
}

json eigenbasis_json(const PencilEigenstructure& e) {
  json a = json::array();
  for (const EigenBasisVector& v : e.basis) {
    a.push_back({{"origin_class", index_json(v.origin_class)},
                 {"support", index_json(v.support)},
                 {"values", v.x}});
  }
  return a;
}

json bounds_json(const std::vector<ClassBound>& bounds) {
  json a = json::array();
  for (const ClassBound& b : bounds) {
    a.push_back({{"class", index_json(b.cls)},
                 {"size", b.size},
                 {"max_s", b.max_s},
                 {"relation", b.full_order ? "<=" : "<"},
                 {"value", b.full_order ? b.max_s : b.size}});
  }
  return a;
}

json tolerances_json(const Report& r) {
  return {{"rel_sing", r.tol.rel_sing},
          {"rel_eig", r.tol.rel_eig},
          {"abs_floor", r.tol.abs_floor},
          {"max_order", r.guard.max_order}};
}

json warnings_json(const Report& r) {
  json a = json::array();
  if (r.eigen && r.eigen->rho_near_zero && r.spectral->rho_ab != 0.0) {
    a.push_back(std::string("rho_ab is within 10*rel_sing of zero; gamma = ") +
                (r.eigen->gamma_is_union ? "G(A) u G(B)" : "G(A)") + " was chosen");
  }
  return a;
}

json section_json(const Report& r, ReportSection s) {
  const bool ok = r.validation.ok();
  switch (s) {
    case ReportSection::Validation:
      return validation_json(r.validation);
    case ReportSection::Spectrum:
      if (!ok) return nullptr;
      return {{"mu", r.spectral->mu},
              {"rho_ab", r.spectral->rho_ab},
              {"eigenvalues", eigenvalues_json(*r.spectral)}};
    case ReportSection::Thresholds: {
      if (!ok) return nullptr;
      json argmax = json::array();
      for (const IndexSet& j : r.thresholds->argmax) argmax.push_back(index_json(j));
      return {{"sigma", r.thresholds->sigma}, {"tau", r.thresholds->tau}, {"argmax_sets", argmax},
              {"class_at_zero", r.thresholds->class_at_zero}};
    }
    case ReportSection::Partition:
      return ok ? partition_json(*r.partition) : json(nullptr);
    case ReportSection::Classes:
      if (!ok) return nullptr;
      return {{"gamma", r.eigen->gamma_is_union ? "union" : "A"}, {"classes", classes_json(*r.eigen)}};
    case ReportSection::Eigenbasis:
      if (!ok) return nullptr;
      return {{"gamma", r.eigen->gamma_is_union ? "union" : "A"},
              {"rho_ab", r.spectral->rho_ab},
              {"eigenbasis", eigenbasis_json(*r.eigen)}};
    case ReportSection::Bounds:
      return ok ? bounds_json(r.bounds) : json(nullptr);
    case ReportSection::Full:
      break;
  }
  json j;
  j["validation"] = validation_json(r.validation);
  j["tolerances"] = tolerances_json(r);
  j["version"] = r.version;
  j["warnings"] = warnings_json(r);
  if (ok) {
    j["mu"] = r.spectral->mu;
    j["rho_ab"] = r.spectral->rho_ab;
    j["eigenvalues"] = eigenvalues_json(*r.spectral);
    j["sigma"] = r.thresholds->sigma;
    j["tau"] = r.thresholds->tau;
    j["partition"] = partition_json(*r.partition);
    j["gamma"] = r.eigen->gamma_is_union ? "union" : "A";
    j["classes"] = classes_json(*r.eigen);
    j["eigenbasis"] = eigenbasis_json(*r.eigen);
    j["bounds"] = bounds_json(r.bounds);
  } else {
    for (const char* k : {"mu", "rho_ab", "eigenvalues", "sigma", "tau", "partition", "gamma",
                          "classes", "eigenbasis", "bounds"}) {
      j[k] = nullptr;
    }
  }
  return j;
}

}  // namespace

std::string to_json(const Report& r, ReportSection section) { return section_json(r, section).dump(); }

std::string canonicalize_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end()).dump();
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace zpencil
