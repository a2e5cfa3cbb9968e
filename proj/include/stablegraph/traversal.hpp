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

// Traversals and DAG utilities. All tie-breaking is by ascending node index,
// so every output here is fully determined by the graph's structure.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

#include "stablegraph/errors.hpp"
#include "stablegraph/stable_graph.hpp"

namespace stablegraph {

enum class Reach { descendants, ancestors };

namespace detail {

template <class Graph>
void require_directed(const Graph& g, const char* what) {
  if (!g.is_directed()) {
    throw WrongKindError(std::string(what) + " requires a directed graph");
  }
}

template <class Graph>
void require_node(const Graph& g, NodeIndex n) {
  if (!g.contains_node(n)) {
    throw InvalidIndexError("no node with index " + std::to_string(n.value));
  }
}

// Follows edges forward for directed graphs, both ways otherwise.
template <class Graph>
std::vector<NodeIndex> forward(const Graph& g, NodeIndex n) {
  return g.neighbors(n, g.is_directed() ? Direction::out : Direction::all);
}

// Kahn's algorithm with a min-index ready set. On failure returns the nodes
// that could not be emitted, in `order` after the emitted prefix.
template <class Graph>
bool kahn(const Graph& g, std::vector<NodeIndex>& order) {
  std::vector<std::size_t> indegree(g.node_bound(), 0);
  std::priority_queue<NodeIndex, std::vector<NodeIndex>, std::greater<>> ready;
  for (NodeIndex n : g.node_indices()) {
    indegree[n.value] = g.in_degree(n);
    if (indegree[n.value] == 0) ready.push(n);
  }
  order.clear();
  order.reserve(g.node_count());
  while (!ready.empty()) {
    const NodeIndex n = ready.top();
    ready.pop();
    order.push_back(n);
    for (EdgeIndex e : g.out_edges(n)) {
      const NodeIndex t = g.endpoints(e).second;
      if (--indegree[t.value] == 0) ready.push(t);
    }
  }
  return order.size() == g.node_count();
}

// Every node left over by Kahn still has a left-over predecessor, so walking
// predecessors must eventually revisit a node; that node is on a cycle.
template <class Graph>
NodeIndex cycle_witness(const Graph& g, const std::vector<NodeIndex>& emitted) {
  std::vector<char> done(g.node_bound(), 0);
  for (NodeIndex n : emitted) done[n.value] = 1;
  NodeIndex cur{};
  for (NodeIndex n : g.node_indices()) {
    if (!done[n.value]) {
      cur = n;
      break;
    }
  }
  std::vector<char> on_walk(g.node_bound(), 0);
  while (!on_walk[cur.value]) {
    on_walk[cur.value] = 1;
    for (EdgeIndex e : g.in_edges(cur)) {
      const NodeIndex p = g.endpoints(e).first;
      if (!done[p.value]) {
        cur = p;
        break;
      }
    }
  }
  return cur;
}

}  // namespace detail

/// Breadth-first order from `source`; each layer in ascending discovery order.
template <class Graph>
std::vector<NodeIndex> bfs_order(const Graph& g, NodeIndex source) {
  detail::require_node(g, source);
  std::vector<char> seen(g.node_bound(), 0);
  std::vector<NodeIndex> order{source};
  seen[source.value] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (NodeIndex m : detail::forward(g, order[head])) {
      if (!seen[m.value]) {
        seen[m.value] = 1;
        order.push_back(m);
      }
    }
  }
  return order;
}

/// Depth-first preorder from `source`, children visited in ascending order.
template <class Graph>
std::vector<NodeIndex> dfs_order(const Graph& g, NodeIndex source) {
  detail::require_node(g, source);
  std::vector<char> seen(g.node_bound(), 0);
  std::vector<NodeIndex> order;
  std::vector<NodeIndex> stack{source};
  while (!stack.empty()) {
    const NodeIndex n = stack.back();
    stack.pop_back();
    if (seen[n.value]) continue;
    seen[n.value] = 1;
    order.push_back(n);
    const auto next = detail::forward(g, n);
    for (auto it = next.rbegin(); it != next.rend(); ++it) {
      if (!seen[it->value]) stack.push_back(*it);
    }
  }
  return order;
}

/// Throws CycleError naming a node on some cycle if `g` is not a DAG.
template <class Graph>
std::vector<NodeIndex> topological_sort(const Graph& g) {
  detail::require_directed(g, "topological_sort");
  std::vector<NodeIndex> order;
  if (!detail::kahn(g, order)) throw CycleError(detail::cycle_witness(g, order));
  return order;
}

template <class Graph>
bool is_dag(const Graph& g) {
  detail::require_directed(g, "is_dag");
  std::vector<NodeIndex> order;
  return detail::kahn(g, order);
}

/// Nodes reachable from `n` (forward or backward), excluding `n`, ascending.
template <class Graph>
std::vector<NodeIndex> reachable_set(const Graph& g, NodeIndex n, Reach reach) {
  detail::require_directed(g, "reachable_set");
  detail::require_node(g, n);
  const Direction dir =
      reach == Reach::descendants ? Direction::out : Direction::in;
  std::vector<char> seen(g.node_bound(), 0);
  seen[n.value] = 1;
  std::vector<NodeIndex> stack{n};
  std::vector<NodeIndex> out;
  while (!stack.empty()) {
    const NodeIndex cur = stack.back();
    stack.pop_back();
    for (NodeIndex m : g.neighbors(cur, dir)) {
      if (!seen[m.value]) {
        seen[m.value] = 1;
        out.push_back(m);
        stack.push_back(m);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Groups the nodes accepted by `keep` into maximal chains.
///
/// An edge u -> v between kept nodes links them into the same run only when v
/// is u's sole kept successor and u is v's sole kept predecessor. Runs come
/// out in topological order of their first node.
template <class Graph, class Keep>
std::vector<std::vector<NodeIndex>> collect_linear_runs(const Graph& g,
                                                        Keep&& keep) {
  const std::vector<NodeIndex> order = topological_sort(g);
  std::vector<char> kept(g.node_bound(), 0);
  for (NodeIndex n : order) {
    kept[n.value] = std::invoke(keep, g.node(n)) ? 1 : 0;
  }
  const auto kept_only = [&](std::vector<NodeIndex> ns) {
    std::erase_if(ns, [&](NodeIndex m) { return !kept[m.value]; });
    return ns;
  };

  constexpr index_type kNone = ~index_type{0};
  std::vector<index_type> link_next(g.node_bound(), kNone);
  std::vector<char> has_link_prev(g.node_bound(), 0);
  for (NodeIndex u : order) {
    if (!kept[u.value]) continue;
    const auto succ = kept_only(g.neighbors(u, Direction::out));
    if (succ.size() != 1) continue;
    const NodeIndex v = succ.front();
    if (kept_only(g.neighbors(v, Direction::in)).size() != 1) continue;
    link_next[u.value] = v.value;
    has_link_prev[v.value] = 1;
  }

  std::vector<std::vector<NodeIndex>> runs;
  for (NodeIndex n : order) {
    if (!kept[n.value] || has_link_prev[n.value]) continue;
    std::vector<NodeIndex> run{n};
    for (index_type next = link_next[n.value]; next != kNone;
         next = link_next[next]) {
      run.push_back(NodeIndex{next});
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

}  // namespace stablegraph
