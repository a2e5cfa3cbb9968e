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

#include "stablegraph/generators.hpp"

#include <gtest/gtest.h>

#include "stablegraph/traversal.hpp"
#include "support/oracles.hpp"

namespace stablegraph {
namespace {

using generators::LabeledGraph;

bool is_tree(const LabeledGraph& g) {
  if (g.node_count() == 0) return false;
  return g.edge_count() + 1 == g.node_count() &&
         bfs_order(g, g.node_indices().front()).size() == g.node_count();
}

TEST(GeneratorsTest, PetersenShape) {
  const auto g = generators::generalized_petersen(5, 2);
  EXPECT_EQ(g.node_count(), 10u);
  EXPECT_EQ(g.edge_count(), 15u);
  for (NodeIndex n : g.node_indices()) EXPECT_EQ(g.degree(n), 3u);
  // Frozen from the frontier-expansion oracle.
  EXPECT_EQ(testing::diameter(g), 2u);
}

TEST(GeneratorsTest, PrismFromGeneralizedPetersen) {
  const auto g = generators::generalized_petersen(3, 1);
  EXPECT_EQ(g.node_count(), 6u);
  EXPECT_EQ(g.edge_count(), 9u);
  // Two triangles joined by spokes.
  EXPECT_TRUE(g.find_edge(NodeIndex{0}, NodeIndex{1}));
  EXPECT_TRUE(g.find_edge(NodeIndex{3}, NodeIndex{4}));
  EXPECT_TRUE(g.find_edge(NodeIndex{2}, NodeIndex{5}));
}

TEST(GeneratorsTest, PetersenAlwaysCubic) {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const auto g = generators::generalized_petersen(n, k);
      EXPECT_EQ(g.edge_count(), 3u * n);
      for (NodeIndex v : g.node_indices()) EXPECT_EQ(g.degree(v), 3u) << n << "," << k;
    }
  }
}

TEST(GeneratorsTest, PetersenRejectsBadParameters) {
  EXPECT_THROW(generators::generalized_petersen(2, 1), ParameterError);
  EXPECT_THROW(generators::generalized_petersen(5, 0), ParameterError);
  EXPECT_THROW(generators::generalized_petersen(6, 3), ParameterError);
}

TEST(GeneratorsTest, SingleHexagon) {
  const auto g = generators::hexagonal_lattice(1, 1);
  EXPECT_EQ(g.node_count(), 6u);
  EXPECT_EQ(g.edge_count(), 6u);
  for (NodeIndex n : g.node_indices()) EXPECT_EQ(g.degree(n), 2u);
}

TEST(GeneratorsTest, TwoFusedHexagons) {
  const auto g = generators::hexagonal_lattice(1, 2);
  EXPECT_EQ(g.node_count(), 10u);
  EXPECT_EQ(g.edge_count(), 11u);
  const auto oracle = testing::honeycomb_counts(1, 2);
  EXPECT_EQ(oracle, std::make_pair(std::size_t{10}, std::size_t{11}));
}

TEST(GeneratorsTest, TwoByTwoLatticeFaces) {
  const auto g = generators::hexagonal_lattice(2, 2);
  std::size_t max_degree = 0;
  for (NodeIndex n : g.node_indices()) max_degree = std::max(max_degree, g.degree(n));
  EXPECT_EQ(max_degree, 3u);
  // Planar with Euler's formula: V - E + F = 2, four hexagonal faces plus
  // the outer face. Oracle counts: 16 vertices, 19 edges.
  EXPECT_EQ(testing::honeycomb_counts(2, 2), std::make_pair(std::size_t{16}, std::size_t{19}));
  EXPECT_EQ(g.node_count(), 16u);
  EXPECT_EQ(g.edge_count(), 19u);
  EXPECT_EQ(static_cast<long>(g.node_count()) - static_cast<long>(g.edge_count()) + 5, 2);
  // Connected, so the cycle space has exactly one basis cycle per face.
  EXPECT_EQ(bfs_order(g, NodeIndex{0}).size(), g.node_count());
  EXPECT_EQ(g.edge_count() - g.node_count() + 1, 4u);
}

TEST(GeneratorsTest, LatticeMatchesCellEnumeration) {
  for (int rows = 1; rows <= 6; ++rows) {
    for (int cols = 1; cols <= 6; ++cols) {
      const auto g = generators::hexagonal_lattice(rows, cols);
      const auto [v, e] = testing::honeycomb_counts(rows, cols);
      EXPECT_EQ(g.node_count(), v) << rows << "x" << cols;
      EXPECT_EQ(g.edge_count(), e) << rows << "x" << cols;
    }
  }
  EXPECT_THROW(generators::hexagonal_lattice(0, 3), ParameterError);
}

TEST(GeneratorsTest, BinomialTrees) {
  const auto b0 = generators::binomial_tree(0);
  EXPECT_EQ(b0.node_count(), 1u);
  EXPECT_EQ(b0.edge_count(), 0u);

  const auto b3 = generators::binomial_tree(3);
  EXPECT_EQ(b3.node_count(), 8u);
  EXPECT_EQ(b3.edge_count(), 7u);
  EXPECT_EQ(b3.degree(NodeIndex{0}), 3u);

  const auto b5 = generators::binomial_tree(5);
  EXPECT_EQ(b5.node_count(), 32u);
  EXPECT_TRUE(is_tree(b5));

  for (int k = 0; k <= 12; ++k) {
    const auto g = generators::binomial_tree(k);
    EXPECT_EQ(g.node_count(), std::size_t{1} << k);
    EXPECT_TRUE(is_tree(g)) << k;
  }
  EXPECT_THROW(generators::binomial_tree(-1), ParameterError);
  EXPECT_THROW(generators::binomial_tree(61), ParameterError);
}

TEST(GeneratorsTest, Grids) {
  EXPECT_EQ(generators::grid_graph(1, 1).edge_count(), 0u);
  const auto g22 = generators::grid_graph(2, 2);
  EXPECT_EQ(g22.node_count(), 4u);
  EXPECT_EQ(g22.edge_count(), 4u);
  const auto g34 = generators::grid_graph(3, 4);
  EXPECT_EQ(g34.node_count(), 12u);
  // Enumerate 4-neighbour pairs directly.
  std::size_t pairs = 0;
  for (int a = 0; a < 12; ++a) {
    for (int b = a + 1; b < 12; ++b) {
      const int dr = std::abs(a / 4 - b / 4);
      const int dc = std::abs(a % 4 - b % 4);
      if (dr + dc == 1) ++pairs;
    }
  }
  EXPECT_EQ(pairs, 17u);
  EXPECT_EQ(g34.edge_count(), pairs);
  EXPECT_THROW(generators::grid_graph(2, 0), ParameterError);
}

TEST(GeneratorsTest, DeterministicAndContiguous) {
  const auto a = generators::hexagonal_lattice(3, 4);
  const auto b = generators::hexagonal_lattice(3, 4);
  EXPECT_EQ(a.edge_list(), b.edge_list());
  const auto ids = a.node_indices();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    EXPECT_EQ(ids[i].value, i);
    EXPECT_EQ(a.node(ids[i]), static_cast<std::int64_t>(i));
  }
  EXPECT_EQ(a.node_bound(), a.node_count());
}

}  // namespace
}  // namespace stablegraph
