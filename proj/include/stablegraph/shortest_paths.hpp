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
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <thread>
#include <utility>
#include <vector>

#include "stablegraph/errors.hpp"
#include "stablegraph/stable_graph.hpp"

namespace stablegraph {

/// Single-source result. Nodes the search never settled are absent from both
/// maps; there is no infinity sentinel.
struct PathResult {
  std::map<NodeIndex, double> distances;
  /// Predecessor on the chosen shortest path; empty for the source.
  std::map<NodeIndex, std::optional<NodeIndex>> parents;

  bool operator==(const PathResult&) const = default;
};

/// Nodes from the source to `target` along recorded parents, or empty if
/// `target` was not reached.
inline std::vector<NodeIndex> path_to(const PathResult& result,
                                      NodeIndex target) {
  std::vector<NodeIndex> path;
  if (!result.parents.contains(target)) return path;
  for (std::optional<NodeIndex> cur = target; cur;
       cur = result.parents.at(*cur)) {
    path.push_back(*cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace detail {

template <class Graph, class WeightFn>
double checked_weight(const Graph& g, EdgeIndex e, WeightFn& weight) {
  const double w = static_cast<double>(std::invoke(weight, g.edge(e)));
  if (!std::isfinite(w)) throw NonFiniteWeightError(e);
  if (w < 0.0) throw NegativeWeightError(e, w);
  return w;
}

}  // namespace detail

/// Dijkstra from `source` using `weight(edge_payload)` as edge cost.
///
/// Directed edges are followed forward only. The frontier is ordered by
/// (distance, node index), and among equal-cost predecessors the smaller
/// index becomes the parent. With a `target`, the search stops once the
/// target is settled and only settled nodes are reported.
template <class Graph, class WeightFn>
PathResult dijkstra(const Graph& g, NodeIndex source, WeightFn&& weight,
                    std::optional<NodeIndex> target = std::nullopt) {
  if (!g.contains_node(source)) {
    throw InvalidIndexError("no node with index " + std::to_string(source.value));
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr index_type kNone = ~index_type{0};
  const std::size_t bound = g.node_bound();
  std::vector<double> dist(bound, kInf);
  std::vector<index_type> parent(bound, kNone);
  std::vector<char> settled(bound, 0);
  std::vector<NodeIndex> settle_order;

  using Item = std::pair<double, index_type>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  dist[source.value] = 0.0;
  frontier.emplace(0.0, source.value);

  while (!frontier.empty()) {
    const auto [d, u] = frontier.top();
    frontier.pop();
    if (settled[u] || d > dist[u]) continue;
    settled[u] = 1;
    settle_order.push_back(NodeIndex{u});
    if (target && target->value == u) break;

    const NodeIndex un{u};
    for (EdgeIndex e : g.out_edges(un)) {
      const NodeIndex v = g.opposite(e, un);
      const double w = detail::checked_weight(g, e, weight);
      if (settled[v.value]) continue;
      const double candidate = d + w;
      if (candidate < dist[v.value]) {
        dist[v.value] = candidate;
        parent[v.value] = u;
        frontier.emplace(candidate, v.value);
      } else if (candidate == dist[v.value] && u < parent[v.value]) {
        parent[v.value] = u;
      }
    }
  }

  PathResult result;
  for (NodeIndex n : settle_order) {
    result.distances.emplace(n, dist[n.value]);
    result.parents.emplace(n, parent[n.value] == kNone
                                  ? std::nullopt
                                  : std::optional<NodeIndex>(NodeIndex{parent[n.value]}));
  }
  return result;
}

/// Dijkstra from every live node. Sources are distributed over `workers`
/// threads; the result does not depend on the worker count. If any source
/// fails, the error of the smallest failing source is rethrown.
///
/// `weight` is called concurrently from several threads.
template <class Graph, class WeightFn>
std::map<NodeIndex, PathResult> all_pairs_dijkstra(const Graph& g,
                                                   WeightFn&& weight,
                                                   unsigned workers = 0) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::vector<NodeIndex> sources = g.node_indices();
  std::vector<PathResult> results(sources.size());
  std::vector<std::exception_ptr> errors(sources.size());
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (std::size_t i = next++; i < sources.size(); i = next++) {
      try {
        results[i] = dijkstra(g, sources[i], weight);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned spawned =
        static_cast<unsigned>(std::min<std::size_t>(workers, sources.size()));
    for (unsigned t = 1; t < spawned; ++t) pool.emplace_back(work);
    work();
  }

  std::map<NodeIndex, PathResult> out;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.emplace(sources[i], std::move(results[i]));
  }
  return out;
}

/// Hop counts from `source` over the reachable set.
template <class Graph>
std::map<NodeIndex, std::uint64_t> unweighted_distances(const Graph& g,
                                                        NodeIndex source) {
  if (!g.contains_node(source)) {
    throw InvalidIndexError("no node with index " + std::to_string(source.value));
  }
  std::map<NodeIndex, std::uint64_t> out{{source, 0}};
  std::vector<char> seen(g.node_bound(), 0);
  seen[source.value] = 1;
  std::queue<NodeIndex> queue;
  queue.push(source);
  while (!queue.empty()) {
    const NodeIndex n = queue.front();
    queue.pop();
    const std::uint64_t d = out[n];
    for (EdgeIndex e : g.out_edges(n)) {
      const NodeIndex m = g.opposite(e, n);
      if (!seen[m.value]) {
        seen[m.value] = 1;
        out.emplace(m, d + 1);
        queue.push(m);
      }
    }
  }
  return out;
}

}  // namespace stablegraph
