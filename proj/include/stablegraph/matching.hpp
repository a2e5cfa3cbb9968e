// Copyright 2026 The stablegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "stablegraph/errors.hpp"
#include "stablegraph/stable_graph.hpp"

namespace stablegraph {

/// Matched edge indices, ascending.
using Matching = std::vector<EdgeIndex>;

inline constexpr std::size_t kMaxExactMatchingNodes = 20;

/// Scans edges by ascending index and keeps each one whose endpoints are both
/// still free. Self-loops are skipped.
template <class Graph>
Matching greedy_maximal_matching(const Graph& g) {
  if (g.is_directed()) {
    throw WrongKindError("greedy_maximal_matching requires an undirected graph");
  }
  std::vector<char> used(g.node_bound(), 0);
  Matching m;
  for (const EdgeEntry& e : g.edge_list()) {
    if (e.source == e.target || used[e.source.value] || used[e.target.value]) {
      continue;
    }
    used[e.source.value] = used[e.target.value] = 1;
    m.push_back(e.index);
  }
  return m;
}

template <class Graph>
bool is_valid_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(g.node_bound(), 0);
  std::vector<EdgeIndex> seen = m;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (EdgeIndex e : m) {
    if (!g.contains_edge(e)) return false;
    const auto [u, v] = g.endpoints(e);
    if (u == v || used[u.value] || used[v.value]) return false;
    used[u.value] = used[v.value] = 1;
  }
  return true;
}

/// Valid, and no edge could be added without breaking validity.
template <class Graph>
bool is_maximal_matching(const Graph& g, const Matching& m) {
  if (!is_valid_matching(g, m)) return false;
  std::vector<char> used(g.node_bound(), 0);
  for (EdgeIndex e : m) {
    const auto [u, v] = g.endpoints(e);
    used[u.value] = used[v.value] = 1;
  }
  for (const EdgeEntry& e : g.edge_list()) {
    if (e.source != e.target && !used[e.source.value] && !used[e.target.value]) {
      return false;
    }
  }
  return true;
}

namespace detail {

class ExactMatcher {
 public:
  ExactMatcher(std::vector<EdgeEntry> edges, std::size_t bound)
      : edges_(std::move(edges)), used_(bound, 0) {}

  Matching solve(std::size_t perfect) {
    perfect_ = perfect;
    search(0);
    return best_;
  }

 private:
  // Edges are decided in ascending order, include-before-exclude, and only a
  // strictly larger set replaces the incumbent. The first maximum found is
  // therefore the lexicographically smallest one.
  void search(std::size_t i) {
    if (current_.size() > best_.size()) best_ = current_;
    if (best_.size() == perfect_ || i == edges_.size()) return;
    if (current_.size() + bound_from(i) <= best_.size()) return;
    const EdgeEntry& e = edges_[i];
    if (!used_[e.source.value] && !used_[e.target.value]) {
      used_[e.source.value] = used_[e.target.value] = 1;
      current_.push_back(e.index);
      search(i + 1);
      current_.pop_back();
      used_[e.source.value] = used_[e.target.value] = 0;
      if (best_.size() == perfect_) return;
    }
    search(i + 1);
  }

  // Free nodes still touched by an available edge, halved.
  std::size_t bound_from(std::size_t i) {
    std::vector<NodeIndex> touched;
    for (std::size_t j = i; j < edges_.size(); ++j) {
      const EdgeEntry& e = edges_[j];
      if (!used_[e.source.value] && !used_[e.target.value]) {
        touched.push_back(e.source);
        touched.push_back(e.target);
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    return touched.size() / 2;
  }

  std::vector<EdgeEntry> edges_;
  std::vector<char> used_;
  Matching current_;
  Matching best_;
  std::size_t perfect_ = 0;
};

}  // namespace detail

/// Maximum-cardinality matching by exhaustive branch and bound. Among all
/// maximum matchings, returns the lexicographically smallest edge-index set.
/// Limited to graphs of at most kMaxExactMatchingNodes nodes.
template <class Graph>
Matching max_matching_exact(const Graph& g) {
  if (g.is_directed()) {
    throw WrongKindError("max_matching_exact requires an undirected graph");
  }
  if (g.node_count() > kMaxExactMatchingNodes) {
    throw SizeLimitError("max_matching_exact supports at most 20 nodes, got " +
                         std::to_string(g.node_count()));
  }
  std::vector<EdgeEntry> edges = g.edge_list();
  std::erase_if(edges, [](const EdgeEntry& e) { return e.source == e.target; });
  detail::ExactMatcher solver(std::move(edges), g.node_bound());
  return solver.solve(g.node_count() / 2);
}

}  // namespace stablegraph
