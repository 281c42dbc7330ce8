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

#ifndef ZPENCIL_DIGRAPH_HPP
#define ZPENCIL_DIGRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zpencil/linalg.hpp"

namespace zpencil {

using Edge = std::pair<std::size_t, std::size_t>;

/// Directed graph on vertices {0, ..., n-1}. Loops are allowed; duplicate
/// edges collapse.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);
  Digraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return out_.size(); }
  void add_edge(std::size_t j, std::size_t k);
  bool has_edge(std::size_t j, std::size_t k) const;
  const std::vector<std::size_t>& successors(std::size_t j) const { return out_.at(j); }
  /// Sorted lexicographically.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const noexcept;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::vector<std::size_t>> out_;
};

/// Edge (j,k) for every entry with |x_jk| > abs_floor, loops included.
Digraph digraph_of(const Matrix& x, const TolerancePolicy& tol);

Digraph graph_union(const Digraph& g1, const Digraph& g2);

/// Classes (strongly connected components) in topological order of the
/// condensation: if class J has access to class K then J comes first. Ties
/// go to the class holding the smallest vertex.
struct ClassPartition {
  std::vector<IndexSet> classes;
  std::vector<std::size_t> class_of;

  std::size_t size() const noexcept { return classes.size(); }
  friend bool operator==(const ClassPartition&, const ClassPartition&) = default;
};

ClassPartition classes(const Digraph& g);

/// Class-level access relation, stored transitively closed. Every class
/// accesses itself; that is implicit and not listed in edges().
class ReducedGraph {
 public:
  ReducedGraph(ClassPartition base, std::vector<std::vector<char>> access);

  const ClassPartition& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  bool has_access(std::size_t from, std::size_t to) const;
  /// Pairs (J,K), J != K, with J having access to K.
  std::vector<Edge> edges() const;

 private:
  ClassPartition base_;
  std::vector<std::vector<char>> access_;
};

ReducedGraph reduced_graph(const Digraph& g);

/// Vertices having access to some vertex of `targets`; includes targets.
IndexSet access_set(const Digraph& g, const IndexSet& targets);

/// Vertices accessed from some vertex of `sources`; includes sources.
IndexSet reach_set(const Digraph& g, const IndexSet& sources);

/// Length of a shortest directed cycle, loops counting as length 1. Empty for
/// an acyclic graph.
std::optional<std::size_t> girth(const Digraph& g);

/// DOT with vertex labels v1..vn.
std::string to_dot(const Digraph& g, std::string_view name = "G");
/// DOT with class labels C1..Ck; each node lists its vertices.
std::string to_dot(const ReducedGraph& r, std::string_view name = "R");

}  // namespace zpencil

#endif  // ZPENCIL_DIGRAPH_HPP
