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

#ifndef ZPENCIL_REPORT_HPP
#define ZPENCIL_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zpencil/eigenstructure.hpp"
#include "zpencil/pencil.hpp"

namespace zpencil {

inline constexpr const char* kVersion = "0.1.0";

/// Everything the analysis computes for one pencil. When validation fails only
/// `validation` is populated.
struct Report {
  ValidationReport validation;
  std::optional<SpectralSummary> spectral;
  std::optional<ThresholdTable> thresholds;
  std::optional<IntervalPartition> partition;
  std::optional<PencilEigenstructure> eigen;
  std::vector<ClassBound> bounds;
  TolerancePolicy tol;
  EnumerationGuard guard;
  std::string version = kVersion;
};

Report analyze(const Pencil& p, const TolerancePolicy& tol, const EnumerationGuard& guard = {});

enum class ReportSection {
  Full,
  Validation,
  Spectrum,
  Thresholds,
  Partition,
  Classes,
  Eigenbasis,
  Bounds,
};

/// Throws InvalidArgument for an unknown name. Names: "report", "validation",
/// "spectrum", "thresholds", "partition", "classes", "eigenbasis", "bounds".
ReportSection parse_section(std::string_view name);

/// Canonical JSON: sorted keys, shortest round-trip numbers, 1-based indices,
/// no whitespace. Re-parsing and re-dumping reproduces the bytes.
std::string to_json(const Report& r, ReportSection section = ReportSection::Full);

/// Parses and re-serializes a JSON document in the canonical form above.
std::string canonicalize_json(std::string_view json);

}  // namespace zpencil

#endif  // ZPENCIL_REPORT_HPP
