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

#include "stablegraph/stable_graph.hpp"

#include <map>
#include <random>
#include <string>
#include <thread>

#include <gtest/gtest.h>

#include "stablegraph/generators.hpp"
#include "support/churn.hpp"

namespace stablegraph {
namespace {

using Graph = StableGraph<std::string, std::string>;

std::vector<NodeIndex> nodes(std::initializer_list<index_type> ids) {
  std::vector<NodeIndex> out;
  for (index_type i : ids) out.push_back(NodeIndex{i});
  return out;
}

TEST(StableGraphTest, EmptyConstruction) {
  Graph undirected_multi(GraphOptions{.directed = false, .multigraph = true});
  EXPECT_EQ(undirected_multi.node_count(), 0u);
  EXPECT_EQ(undirected_multi.edge_count(), 0u);
  EXPECT_FALSE(undirected_multi.is_directed());
  EXPECT_TRUE(undirected_multi.is_multigraph());
  EXPECT_TRUE(undirected_multi.node_indices().empty());
  EXPECT_TRUE(undirected_multi.edge_list().empty());

  Graph directed_multi(GraphOptions{.directed = true, .multigraph = true});
  EXPECT_TRUE(directed_multi.is_directed());
  EXPECT_EQ(directed_multi.node_count(), 0u);
}

TEST(StableGraphTest, AddNodeAppendsFreshIndices) {
  Graph g;
  EXPECT_EQ(g.add_node("a"), NodeIndex{0});
  EXPECT_EQ(g.add_node("b"), NodeIndex{1});
  EXPECT_EQ(g.add_node("c"), NodeIndex{2});
}

TEST(StableGraphTest, FreedNodeIndexIsReused) {
  Graph g;
  g.add_node("a");
  g.add_node("b");
  g.add_node("c");
  g.remove_node(NodeIndex{1});
  EXPECT_EQ(g.add_node("d"), NodeIndex{1});
}

TEST(StableGraphTest, FreeListIsLastInFirstOut) {
  Graph g;
  for (int i = 0; i < 3; ++i) g.add_node("x");
  g.remove_node(NodeIndex{2});
  g.remove_node(NodeIndex{0});
  // Free list is now 0 -> 2.
  EXPECT_EQ(g.add_node("p"), NodeIndex{0});
  EXPECT_EQ(g.add_node("q"), NodeIndex{2});
  EXPECT_EQ(g.add_node("r"), NodeIndex{3});
  EXPECT_TRUE(g.is_consistent());
}

TEST(StableGraphTest, RemoveNodeDropsIncidentEdgesOnly) {
  Graph g;
  const NodeIndex a = g.add_node("a");
  const NodeIndex b = g.add_node("b");
  const NodeIndex c = g.add_node("c");
  g.add_edge(a, b, "ab");
  g.add_edge(b, c, "bc");
  EXPECT_EQ(g.remove_node(b), "b");
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.node_indices(), nodes({0, 2}));
  EXPECT_EQ(g.node(a), "a");
  EXPECT_EQ(g.node(c), "c");
  EXPECT_TRUE(g.neighbors(a).empty());
  EXPECT_TRUE(g.is_consistent());
}

TEST(StableGraphTest, RemoveVacantNodeThrows) {
  Graph g;
  g.add_node("a");
  g.remove_node(NodeIndex{0});
  EXPECT_THROW(g.remove_node(NodeIndex{0}), InvalidIndexError);
  EXPECT_THROW(g.remove_node(NodeIndex{7}), InvalidIndexError);
}

TEST(StableGraphTest, RemoveOnlyNodeLeavesEmptyGraph) {
  Graph g;
  g.add_node("solo");
  EXPECT_EQ(g.remove_node(NodeIndex{0}), "solo");
  EXPECT_EQ(g.node_count(), 0u);
}

TEST(StableGraphTest, AddEdgeMultigraphKeepsParallelEdges) {
  Graph g(GraphOptions{.directed = false, .multigraph = true});
  g.add_node("0");
  g.add_node("1");
  EXPECT_EQ(g.add_edge(NodeIndex{0}, NodeIndex{1}, "a"), EdgeIndex{0});
  EXPECT_EQ(g.add_edge(NodeIndex{0}, NodeIndex{1}, "b"), EdgeIndex{1});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.neighbors(NodeIndex{0}), nodes({1}));
  EXPECT_EQ(g.edges_between(NodeIndex{1}, NodeIndex{0}).size(), 2u);
}

TEST(StableGraphTest, AddEdgeSimpleGraphReplacesPayload) {
  Graph g(GraphOptions{.directed = true, .multigraph = false});
  g.add_node("0");
  g.add_node("1");
  EXPECT_EQ(g.add_edge(NodeIndex{0}, NodeIndex{1}, "a"), EdgeIndex{0});
  EXPECT_EQ(g.add_edge(NodeIndex{0}, NodeIndex{1}, "b"), EdgeIndex{0});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edge(EdgeIndex{0}), "b");
  // Opposite orientation is a different pair in a directed graph.
  EXPECT_EQ(g.add_edge(NodeIndex{1}, NodeIndex{0}, "c"), EdgeIndex{1});

  Graph u(GraphOptions{.directed = false, .multigraph = false});
  u.add_node("0");
  u.add_node("1");
  u.add_edge(NodeIndex{0}, NodeIndex{1}, "a");
  EXPECT_EQ(u.add_edge(NodeIndex{1}, NodeIndex{0}, "b"), EdgeIndex{0});
  EXPECT_EQ(u.edge_count(), 1u);
}

TEST(StableGraphTest, AddEdgeRejectsVacantEndpoints) {
  Graph g;
  g.add_node("0");
  EXPECT_THROW(g.add_edge(NodeIndex{0}, NodeIndex{1}, "x"), InvalidIndexError);
}

TEST(StableGraphTest, RemoveEdgeFromTriangleKeepsOtherIndices) {
  Graph g;
  for (int i = 0; i < 3; ++i) g.add_node(std::to_string(i));
  g.add_edge(NodeIndex{0}, NodeIndex{1}, "e0");
  g.add_edge(NodeIndex{1}, NodeIndex{2}, "e1");
  g.add_edge(NodeIndex{2}, NodeIndex{0}, "e2");
  EXPECT_EQ(g.remove_edge(EdgeIndex{1}), "e1");
  EXPECT_EQ(g.edge_count(), 2u);
  const auto list = g.edge_list();
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[0], (EdgeEntry{EdgeIndex{0}, NodeIndex{0}, NodeIndex{1}}));
  EXPECT_EQ(list[1], (EdgeEntry{EdgeIndex{2}, NodeIndex{2}, NodeIndex{0}}));
  EXPECT_EQ(g.edge(EdgeIndex{2}), "e2");
  EXPECT_THROW(g.remove_edge(EdgeIndex{1}), InvalidIndexError);
  EXPECT_TRUE(g.is_consistent());
}

TEST(StableGraphTest, RemoveDirectedEdgeUpdatesBothLists) {
  Graph g(GraphOptions{.directed = true});
  g.add_node("0");
  g.add_node("1");
  const EdgeIndex e = g.add_edge(NodeIndex{0}, NodeIndex{1}, "x");
  g.remove_edge(e);
  EXPECT_TRUE(g.out_edges(NodeIndex{0}).empty());
  EXPECT_TRUE(g.in_edges(NodeIndex{1}).empty());
  EXPECT_TRUE(g.is_consistent());
}

TEST(StableGraphTest, PayloadAccess) {
  Graph g;
  const NodeIndex n = g.add_node("a");
  EXPECT_EQ(g.node(n), "a");
  g.set_node(n, "b");
  EXPECT_EQ(g.node(n), "b");
  g.remove_node(n);
  EXPECT_THROW(g.node(n), InvalidIndexError);
}

TEST(StableGraphTest, EdgeEndpointsAsInserted) {
  Graph g;
  for (int i = 0; i < 6; ++i) g.add_node("");
  const EdgeIndex e = g.add_edge(NodeIndex{2}, NodeIndex{5}, "w");
  EXPECT_EQ(g.endpoints(e), std::make_pair(NodeIndex{2}, NodeIndex{5}));
  g.remove_edge(e);
  EXPECT_THROW(g.endpoints(e), InvalidIndexError);
  EXPECT_THROW(g.edge(e), InvalidIndexError);
}

TEST(StableGraphTest, NeighborsSortedAndDirectional) {
  Graph tri;
  for (int i = 0; i < 3; ++i) tri.add_node("");
  tri.add_edge(NodeIndex{0}, NodeIndex{2}, "");
  tri.add_edge(NodeIndex{1}, NodeIndex{0}, "");
  tri.add_edge(NodeIndex{1}, NodeIndex{2}, "");
  EXPECT_EQ(tri.neighbors(NodeIndex{0}), nodes({1, 2}));

  Graph d(GraphOptions{.directed = true});
  for (int i = 0; i < 3; ++i) d.add_node("");
  d.add_edge(NodeIndex{0}, NodeIndex{1}, "");
  d.add_edge(NodeIndex{2}, NodeIndex{0}, "");
  EXPECT_EQ(d.neighbors(NodeIndex{0}, Direction::out), nodes({1}));
  EXPECT_EQ(d.neighbors(NodeIndex{0}, Direction::in), nodes({2}));
  EXPECT_EQ(d.neighbors(NodeIndex{0}, Direction::all), nodes({1, 2}));
}

TEST(StableGraphTest, SelfLoopAccounting) {
  Graph g;
  const NodeIndex n = g.add_node("");
  const EdgeIndex e = g.add_edge(n, n, "loop");
  EXPECT_EQ(g.neighbors(n), nodes({0}));
  EXPECT_EQ(g.degree(n), 2u);
  EXPECT_EQ(g.out_edges(n).size(), 1u);
  EXPECT_TRUE(g.is_consistent());
  g.remove_node(n);
  EXPECT_FALSE(g.contains_edge(e));
  EXPECT_TRUE(g.is_consistent());

  Graph d(GraphOptions{.directed = true});
  const NodeIndex m = d.add_node("");
  d.add_edge(m, m, "loop");
  EXPECT_EQ(d.out_degree(m), 1u);
  EXPECT_EQ(d.in_degree(m), 1u);
  d.remove_node(m);
  EXPECT_EQ(d.edge_count(), 0u);
  EXPECT_TRUE(d.is_consistent());
}

TEST(StableGraphTest, CountsAndHoles) {
  Graph g;
  for (int i = 0; i < 4; ++i) g.add_node("");
  g.remove_node(NodeIndex{1});
  EXPECT_EQ(g.node_indices(), nodes({0, 2, 3}));
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.node_bound(), 4u);
}

TEST(StableGraphTest, PetersenCounts) {
  const auto g = generators::petersen();
  EXPECT_EQ(g.node_count(), 10u);
  EXPECT_EQ(g.edge_count(), 15u);
}

TEST(StableGraphTest, InsertAtPlacesExactIndices) {
  Graph g(GraphOptions{.directed = false, .multigraph = false});
  g.insert_node_at(NodeIndex{5}, "five");
  g.insert_node_at(NodeIndex{2}, "two");
  EXPECT_EQ(g.node_indices(), nodes({2, 5}));
  g.insert_edge_at(EdgeIndex{3}, NodeIndex{2}, NodeIndex{5}, "e");
  EXPECT_THROW(g.insert_edge_at(EdgeIndex{0}, NodeIndex{5}, NodeIndex{2}, "dup"),
               InvalidIndexError);
  EXPECT_THROW(g.insert_node_at(NodeIndex{2}, "again"), InvalidIndexError);
  EXPECT_TRUE(g.is_consistent());
  // Vacant slots below the bound are still handed out.
  EXPECT_LT(g.add_node("new").value, 5u);
  EXPECT_TRUE(g.is_consistent());
}

TEST(StableGraphTest, RandomChurnMatchesShadow) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto report = testing::run_churn(seed, 500, seed % 4 == 0, seed % 2 == 0);
    EXPECT_EQ(report.divergences, 0u) << "seed " << seed;
    EXPECT_TRUE(report.consistent) << "seed " << seed;
  }
}

TEST(StableGraphTest, IdenticalOperationSequencesAreDeterministic) {
  const auto a = testing::run_churn(99, 800, true, true);
  const auto b = testing::run_churn(99, 800, true, true);
  EXPECT_EQ(a.assigned, b.assigned);
}

TEST(StableGraphTest, ConcurrentReaders) {
  const auto g = generators::grid_graph(30, 30);
  std::vector<std::size_t> totals(4, 0);
  {
    std::vector<std::jthread> readers;
    for (std::size_t t = 0; t < totals.size(); ++t) {
      readers.emplace_back([&, t] {
        for (NodeIndex n : g.node_indices()) totals[t] += g.neighbors(n).size();
      });
    }
  }
  for (std::size_t total : totals) EXPECT_EQ(total, 2 * g.edge_count());
}

TEST(StableGraphTest, MovesBetweenThreads) {
  Graph g;
  g.add_node("a");
  std::jthread worker([moved = std::move(g)]() mutable {
    moved.add_node("b");
    EXPECT_EQ(moved.node_count(), 2u);
  });
}

}  // namespace
}  // namespace stablegraph
