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


#ifndef ZPENCIL_TESTS_HELPERS_HPP
#define ZPENCIL_TESTS_HELPERS_HPP

#include <zpencil/io.hpp>
#include <zpencil/testkit.hpp>

#include <string>
#include <vector>

namespace zpencil::test {

inline Pencil example(int k) {
  return load_pencil(std::string(ZPENCIL_DATA_DIR) + "/ex" + std::to_string(k) + ".pencil");
}

/// Fixed-seed instances over n = 2..6 and three densities, plus block pencils.
inline std::vector<Pencil> corpus(std::size_t count, std::uint64_t base_seed = 1000,
                                  std::size_t max_n = 6) {
  std::vector<Pencil> out;
  const double densities[] = {0.25, 0.5, 0.9};
  for (std::size_t k = 0; out.size() < count; ++k) {
    if (k % 5 == 4) {
      testkit::BlockConfig cfg;
      cfg.seed = base_seed + k;
      cfg.max_blocks = 3;
      Pencil p = testkit::gen_block_pencil(cfg);
      if (p.order() <= max_n) out.push_back(std::move(p));
      continue;
    }
    testkit::GenConfig cfg;
    cfg.n = 2 + k % (max_n - 1);
    cfg.seed = base_seed + k;
    cfg.density = densities[k % 3];
    out.push_back(testkit::gen_pencil(cfg));
  }
  return out;
}

inline Matrix random_nonnegative(testkit::Rng& rng, std::size_t n, double density) {
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.bernoulli(density)) p.set(i, j, rng.positive(1.0));
    }
  }
  return p;
}

inline std::vector<std::size_t> random_permutation(testkit::Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

}  // namespace zpencil::test

#endif  // ZPENCIL_TESTS_HELPERS_HPP
