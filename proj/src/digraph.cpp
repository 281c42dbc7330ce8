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

#include "zpencil/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <sstream>

#include "zpencil/error.hpp"

namespace zpencil {

namespace {

// reach[j][k] != 0 iff j has access to k (j == k always counts).
std::vector<std::vector<char>> reachability(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = reach[s];
    row[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : g.successors(v)) {
        if (!row[w]) {
          row[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

ClassPartition classes_from_reach(const std::vector<std::vector<char>>& reach) {
  const std::size_t n = reach.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> provisional(n, kNone);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < n; ++j) {
    if (provisional[j] != kNone) continue;
    provisional[j] = groups.size();
    std::vector<std::size_t> members{j};
    for (std::size_t k = j + 1; k < n; ++k) {
      if (provisional[k] == kNone && reach[j][k] && reach[k][j]) {
        provisional[k] = groups.size();
        members.push_back(k);
      }
    }
    groups.push_back(std::move(members));
  }

  // Kahn's algorithm on the condensation; groups are already numbered by
  // smallest vertex, so a min-heap on the group id gives the tie rule.
  const std::size_t k = groups.size();
  std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
  std::vector<std::size_t> indegree(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && reach[groups[a].front()][groups[b].front()]) {
        adj[a][b] = 1;
        ++indegree[b];
      }
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t a = 0; a < k; ++a) {
    if (indegree[a] == 0) ready.push(a);
  }
  ClassPartition out;
  out.class_of.assign(n, 0);
  while (!ready.empty()) {
    const std::size_t a = ready.top();
    ready.pop();
    const std::size_t id = out.classes.size();
    for (std::size_t v : groups[a]) out.class_of[v] = id;
    out.classes.push_back(IndexSet::from_zero_based(groups[a]));
    for (std::size_t b = 0; b < k; ++b) {
      if (adj[a][b] && --indegree[b] == 0) ready.push(b);
    }
  }
  return out;
}

}  // namespace

Digraph::Digraph(std::size_t n) : out_(n) {}

Digraph::Digraph(std::size_t n, const std::vector<Edge>& edges) : out_(n) {
  for (const auto& [j, k] : edges) add_edge(j, k);
}

void Digraph::add_edge(std::size_t j, std::size_t k) {
  if (j >= order() || k >= order()) {
    throw Error(ErrorCode::OutOfRange, "edge endpoint outside vertex range");
  }
  auto& succ = out_[j];
  auto it = std::lower_bound(succ.begin(), succ.end(), k);
  if (it == succ.end() || *it != k) succ.insert(it, k);
}

bool Digraph::has_edge(std::size_t j, std::size_t k) const {
  if (j >= order()) return false;
  return std::binary_search(out_[j].begin(), out_[j].end(), k);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> e;
  for (std::size_t j = 0; j < order(); ++j) {
    for (std::size_t k : out_[j]) e.emplace_back(j, k);
  }
  return e;
}

std::size_t Digraph::edge_count() const noexcept {
  std::size_t c = 0;
  for (const auto& s : out_) c += s.size();
  return c;
}

Digraph digraph_of(const Matrix& x, const TolerancePolicy& tol) {
  if (!x.square()) throw Error(ErrorCode::Dimension, "digraph_of: matrix is not square");
  Digraph g(x.rows());
  for (std::size_t j = 0; j < x.rows(); ++j) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (std::abs(x(j, k)) > tol.abs_floor) g.add_edge(j, k);
    }
  }
  return g;
}

Digraph graph_union(const Digraph& g1, const Digraph& g2) {
  if (g1.order() != g2.order()) {
    throw Error(ErrorCode::Dimension, "graph_union: vertex counts differ");
  }
  Digraph g = g1;
  for (const auto& [j, k] : g2.edges()) g.add_edge(j, k);
  return g;
}

ClassPartition classes(const Digraph& g) { return classes_from_reach(reachability(g)); }

ReducedGraph::ReducedGraph(ClassPartition base, std::vector<std::vector<char>> access)
    : base_(std::move(base)), access_(std::move(access)) {}

bool ReducedGraph::has_access(std::size_t from, std::size_t to) const {
  if (from == to) return true;
  return access_.at(from).at(to) != 0;
}

std::vector<Edge> ReducedGraph::edges() const {
  std::vector<Edge> e;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (a != b && access_[a][b]) e.emplace_back(a, b);
    }
  }
  return e;
}

ReducedGraph reduced_graph(const Digraph& g) {
  const auto reach = reachability(g);
  ClassPartition part = classes_from_reach(reach);
  const std::size_t k = part.size();
  std::vector<std::vector<char>> access(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b) access[a][b] = reach[part.classes[a][0]][part.classes[b][0]];
    }
  }
  return ReducedGraph(std::move(part), std::move(access));
}

namespace {

IndexSet flood(const Digraph& g, const IndexSet& seeds, bool backwards) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [j, k] : g.edges()) {
    if (backwards) {
      adj[k].push_back(j);
    } else {
      adj[j].push_back(k);
    }
  }
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t s : seeds) {
    if (s >= n) throw Error(ErrorCode::OutOfRange, "vertex outside graph");
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) out.push_back(v);
  }
  return IndexSet::from_zero_based(std::move(out));
}

}  // namespace

IndexSet access_set(const Digraph& g, const IndexSet& targets) { return flood(g, targets, true); }

IndexSet reach_set(const Digraph& g, const IndexSet& sources) { return flood(g, sources, false); }

std::optional<std::size_t> girth(const Digraph& g) {
  const std::size_t n = g.order();
  std::optional<std::size_t> best;
  std::vector<std::size_t> dist(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::fill(dist.begin(), dist.end(), 0);
    std::deque<std::size_t> queue;
    for (std::size_t w : g.successors(v)) {
      if (dist[w] == 0) {
        dist[w] = 1;
        queue.push_back(w);
      }
    }
    while (!queue.empty() && dist[v] == 0) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : g.successors(u)) {
        if (dist[w] == 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[v] > 0 && (!best || dist[v] < *best)) best = dist[v];
  }
  return best;
}

std::string to_dot(const Digraph& g, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < g.order(); ++v) os << "  v" << v + 1 << ";\n";
  for (const auto& [j, k] : g.edges()) os << "  v" << j + 1 << " -> v" << k + 1 << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const ReducedGraph& r, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t c = 0; c < r.size(); ++c) {
    os << "  C" << c + 1 << " [label=\"C" << c + 1 << " " << r.base().classes[c].to_string()
       << "\"];\n";
  }
  for (const auto& [a, b] : r.edges()) os << "  C" << a + 1 << " -> C" << b + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace zpencil
