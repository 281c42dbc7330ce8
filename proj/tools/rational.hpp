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

#ifndef ZPENCIL_TOOLS_RATIONAL_HPP
#define ZPENCIL_TOOLS_RATIONAL_HPP

#include <charconv>
#include <cmath>
#include <optional>
#include <string>

namespace zpencil::tools {

struct Rational {
  long long num = 0;
  long long den = 1;
};

/// Smallest-denominator p/q (q <= max_den) within tol of x. Display only.
inline std::optional<Rational> nearby_rational(double x, long long max_den = 1000,
                                               double tol = 1e-12) {
  if (!std::isfinite(x)) return std::nullopt;
  for (long long q = 1; q <= max_den; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(x - p / static_cast<double>(q)) <= tol) {
      return Rational{static_cast<long long>(p), q};
    }
  }
  return std::nullopt;
}

/// Shortest decimal that reads back to the same double.
inline std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

/// "0.6666666666666666 (2/3)", or just the decimal when no small rational fits.
inline std::string annotate(double x) {
  std::string s = shortest(x);
  if (auto r = nearby_rational(x); r && r->den != 1) {
    s += " (" + std::to_string(r->num) + "/" + std::to_string(r->den) + ")";
  }
  return s;
}

}  // namespace zpencil::tools

#endif  // ZPENCIL_TOOLS_RATIONAL_HPP
