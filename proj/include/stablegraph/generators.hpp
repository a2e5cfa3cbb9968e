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

// Deterministic constructors for a few named graph families. Every generator
// returns an undirected simple graph with contiguous node indices 0..N-1 and
// the node's position label (its creation index) as payload. Edge payloads
// are default constructed.

#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "stablegraph/errors.hpp"
#include "stablegraph/stable_graph.hpp"

namespace stablegraph::generators {

using LabeledGraph = StableGraph<std::int64_t, std::monostate>;

namespace detail {

template <class Graph>
Graph make_nodes(std::uint64_t count) {
  Graph g(GraphOptions{.directed = false, .multigraph = false});
  for (std::uint64_t i = 0; i < count; ++i) {
    g.add_node(typename Graph::node_type(static_cast<std::int64_t>(i)));
  }
  return g;
}

template <class Graph>
void connect(Graph& g, std::uint64_t u, std::uint64_t v) {
  g.add_edge(NodeIndex{u}, NodeIndex{v}, typename Graph::edge_type{});
}

}  // namespace detail

/// GP(n, k): outer cycle 0..n-1, inner star polygon n..2n-1 with step k,
/// spokes i -- n+i. GP(5, 2) is the Petersen graph.
template <class Graph = LabeledGraph>
Graph generalized_petersen(std::int64_t n, std::int64_t k) {
  if (n < 3 || k < 1 || 2 * k >= n) {
    throw ParameterError("generalized_petersen requires n >= 3 and 1 <= k < n/2, got n=" +
                         std::to_string(n) + " k=" + std::to_string(k));
  }
  const auto un = static_cast<std::uint64_t>(n);
  const auto uk = static_cast<std::uint64_t>(k);
  Graph g = detail::make_nodes<Graph>(2 * un);
  for (std::uint64_t i = 0; i < un; ++i) detail::connect(g, i, (i + 1) % un);
  for (std::uint64_t i = 0; i < un; ++i) {
    detail::connect(g, un + i, un + (i + uk) % un);
  }
  for (std::uint64_t i = 0; i < un; ++i) detail::connect(g, i, un + i);
  return g;
}

template <class Graph = LabeledGraph>
Graph petersen() {
  return generalized_petersen<Graph>(5, 2);
}

/// Honeycomb of `rows` x `cols` hexagonal cells.
///
/// Built from cols+1 vertical paths of 2*rows+2 nodes each. Path c, position
/// j has index c*(2*rows+2)+j before trimming. Neighbouring paths c and c+1
/// are joined by a rung at every position j with j % 2 == c % 2. The two
/// corner nodes that would hang off a single edge are then dropped, and the
/// remaining nodes renumbered contiguously in (column, position) order.
template <class Graph = LabeledGraph>
Graph hexagonal_lattice(std::int64_t rows, std::int64_t cols) {
  if (rows < 1 || cols < 1) {
    throw ParameterError("hexagonal_lattice requires rows >= 1 and cols >= 1");
  }
  const auto path_len = static_cast<std::uint64_t>(2 * rows + 2);
  const auto path_count = static_cast<std::uint64_t>(cols + 1);
  const std::uint64_t last_col = path_count - 1;
  // The top of the first path, and whichever end of the last path is not
  // capped by a rung.
  const auto dropped = [&](std::uint64_t c, std::uint64_t j) {
    if (c == 0 && j == path_len - 1) return true;
    return c == last_col && j == (cols % 2 == 1 ? path_len - 1 : 0);
  };

  std::vector<std::uint64_t> id(path_count * path_len, 0);
  std::uint64_t next = 0;
  for (std::uint64_t c = 0; c < path_count; ++c) {
    for (std::uint64_t j = 0; j < path_len; ++j) {
      if (!dropped(c, j)) id[c * path_len + j] = next++;
    }
  }
  Graph g = detail::make_nodes<Graph>(next);
  for (std::uint64_t c = 0; c < path_count; ++c) {
    for (std::uint64_t j = 0; j < path_len; ++j) {
      if (dropped(c, j)) continue;
      const std::uint64_t here = id[c * path_len + j];
      if (j + 1 < path_len && !dropped(c, j + 1)) {
        detail::connect(g, here, id[c * path_len + j + 1]);
      }
      if (c + 1 < path_count && j % 2 == c % 2 && !dropped(c + 1, j)) {
        detail::connect(g, here, id[(c + 1) * path_len + j]);
      }
    }
  }
  return g;
}

/// B_0 is one node; B_k joins the roots of two copies of B_{k-1}, the copy
/// taking indices offset by 2^(k-1). Node 0 is the root.
template <class Graph = LabeledGraph>
Graph binomial_tree(std::int64_t order) {
  if (order < 0 || order > 60) {
    throw ParameterError("binomial_tree requires 0 <= order <= 60, got " +
                         std::to_string(order));
  }
  const std::uint64_t total = std::uint64_t{1} << order;
  Graph g = detail::make_nodes<Graph>(total);
  for (std::uint64_t half = 1; half < total; half *= 2) {
    for (const EdgeEntry& e : g.edge_list()) {
      detail::connect(g, e.source.value + half, e.target.value + half);
    }
    detail::connect(g, 0, half);
  }
  return g;
}

/// rows x cols 4-neighbour lattice; node r*cols + c.
template <class Graph = LabeledGraph>
Graph grid_graph(std::int64_t rows, std::int64_t cols) {
  if (rows < 1 || cols < 1) {
    throw ParameterError("grid_graph requires rows >= 1 and cols >= 1");
  }
  const auto r_count = static_cast<std::uint64_t>(rows);
  const auto c_count = static_cast<std::uint64_t>(cols);
  Graph g = detail::make_nodes<Graph>(r_count * c_count);
  for (std::uint64_t r = 0; r < r_count; ++r) {
    for (std::uint64_t c = 0; c < c_count; ++c) {
      const std::uint64_t here = r * c_count + c;
      if (c + 1 < c_count) detail::connect(g, here, here + 1);
      if (r + 1 < r_count) detail::connect(g, here, here + c_count);
    }
  }
  return g;
}

}  // namespace stablegraph::generators
