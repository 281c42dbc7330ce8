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

#ifndef ZPENCIL_SUBSETS_HPP
#define ZPENCIL_SUBSETS_HPP

#include <cstddef>
#include <vector>

#include "zpencil/error.hpp"
#include "zpencil/linalg.hpp"

namespace zpencil {

/// Upper bound on n for routines that enumerate principal submatrices.
struct EnumerationGuard {
  std::size_t max_order = 16;

  void require(std::size_t n) const {
    if (n > max_order) {
      throw Error(ErrorCode::GuardExceeded,
                  "order " + std::to_string(n) + " exceeds the enumeration guard of " +
                      std::to_string(max_order));
    }
  }
};

/// Calls fn(J) for every J subset of {0..n-1} with |J| = s, in lexicographic
/// order. Returning false from fn stops the walk.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t s, Fn&& fn) {
  if (s == 0 || s > n) return;
  std::vector<std::size_t> c(s);
  for (std::size_t a = 0; a < s; ++a) c[a] = a;
  while (true) {
    if (!fn(IndexSet::from_zero_based(c))) return;
    std::size_t a = s;
    while (a > 0 && c[a - 1] == n - s + (a - 1)) --a;
    if (a == 0) return;
    ++c[a - 1];
    for (std::size_t b = a; b < s; ++b) c[b] = c[b - 1] + 1;
  }
}

}  // namespace zpencil

#endif  // ZPENCIL_SUBSETS_HPP
