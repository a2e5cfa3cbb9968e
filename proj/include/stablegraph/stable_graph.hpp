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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stablegraph/errors.hpp"
#include "stablegraph/index.hpp"

namespace stablegraph {

enum class Direction { out, in, all };

struct GraphOptions {
  bool directed = false;
  /// Parallel edges allowed. When false, adding an edge between an already
  /// connected pair replaces that edge's payload instead.
  bool multigraph = true;
};

struct EdgeEntry {
  EdgeIndex index;
  NodeIndex source;
  NodeIndex target;

  bool operator==(const EdgeEntry&) const = default;
};

namespace detail {

// Slot table with a LIFO free list threaded through the vacant slots.
template <class T>
class SlotTable {
 public:
  index_type insert(T value) {
    ++live_;
    if (free_head_) {
      const index_type idx = *free_head_;
      Slot& slot = slots_[idx];
      free_head_ = slot.next_free;
      slot.next_free.reset();
      slot.value.emplace(std::move(value));
      return idx;
    }
    slots_.push_back(Slot{std::move(value), std::nullopt});
    return slots_.size() - 1;
  }

  // Occupies exactly slot `idx`, growing the table with vacant slots as
  // needed. The slot must currently be vacant or past the end.
  void insert_at(index_type idx, T value) {
    while (slots_.size() < idx) {
      slots_.push_back(Slot{std::nullopt, free_head_});
      free_head_ = slots_.size() - 1;
    }
    if (idx == slots_.size()) {
      slots_.push_back(Slot{std::move(value), std::nullopt});
      ++live_;
      return;
    }
    unlink_free(idx);
    slots_[idx].value.emplace(std::move(value));
    ++live_;
  }

  T erase(index_type idx) {
    Slot& slot = slots_[idx];
    T out = std::move(*slot.value);
    slot.value.reset();
    slot.next_free = free_head_;
    free_head_ = idx;
    --live_;
    return out;
  }

  bool contains(index_type idx) const noexcept {
    return idx < slots_.size() && slots_[idx].value.has_value();
  }

  T& operator[](index_type idx) { return *slots_[idx].value; }
  const T& operator[](index_type idx) const { return *slots_[idx].value; }

  std::size_t live() const noexcept { return live_; }
  std::size_t bound() const noexcept { return slots_.size(); }

  // Occupied and free-listed slots partition the table, and the free list
  // is acyclic.
  bool sound() const {
    std::vector<char> seen(slots_.size(), 0);
    std::size_t occupied = 0;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (slots_[i].value) {
        seen[i] = 1;
        ++occupied;
        if (slots_[i].next_free) return false;
      }
    }
    if (occupied != live_) return false;
    std::size_t vacant = 0;
    for (auto cur = free_head_; cur; cur = slots_[*cur].next_free) {
      if (*cur >= slots_.size() || seen[*cur]) return false;
      seen[*cur] = 1;
      ++vacant;
    }
    return occupied + vacant == slots_.size();
  }

 private:
  struct Slot {
    std::optional<T> value;
    std::optional<index_type> next_free;
  };

  void unlink_free(index_type idx) {
    if (slots_[idx].value) {
      throw InvalidIndexError("slot " + std::to_string(idx) +
                              " is already occupied");
    }
    if (free_head_ == idx) {
      free_head_ = slots_[idx].next_free;
    } else {
      for (auto cur = free_head_; cur; cur = slots_[*cur].next_free) {
        if (slots_[*cur].next_free == idx) {
          slots_[*cur].next_free = slots_[idx].next_free;
          break;
        }
      }
    }
    slots_[idx].next_free.reset();
  }

  std::vector<Slot> slots_;
  std::optional<index_type> free_head_;
  std::size_t live_ = 0;
};

inline void erase_one(std::vector<EdgeIndex>& list, EdgeIndex e) {
  auto it = std::find(list.begin(), list.end(), e);
  if (it != list.end()) {
    *it = list.back();
    list.pop_back();
  }
}

}  // namespace detail

/// Adjacency-list graph whose node and edge indices stay fixed while the
/// element lives. Freed slots are reused most-recently-freed first.
///
/// Payloads of type `N` (nodes) and `E` (edges) are stored but never
/// inspected; algorithms reach them only through caller callbacks.
///
/// Undirected graphs keep one incidence list per node (a self-loop appears
/// once in it). Directed graphs keep separate out- and in-lists.
///
/// Not internally synchronized: one writer or many readers at a time.
template <class N, class E>
class StableGraph {
 public:
  using node_type = N;
  using edge_type = E;

  StableGraph() = default;
  explicit StableGraph(GraphOptions options) : options_(options) {}

  bool is_directed() const noexcept { return options_.directed; }
  bool is_multigraph() const noexcept { return options_.multigraph; }
  GraphOptions options() const noexcept { return options_; }

  std::size_t node_count() const noexcept { return nodes_.live(); }
  std::size_t edge_count() const noexcept { return edges_.live(); }

  /// One past the largest node index ever allocated; suitable for sizing
  /// index-addressed scratch arrays.
  std::size_t node_bound() const noexcept { return nodes_.bound(); }
  std::size_t edge_bound() const noexcept { return edges_.bound(); }

  bool contains_node(NodeIndex n) const noexcept {
    return nodes_.contains(n.value);
  }
  bool contains_edge(EdgeIndex e) const noexcept {
    return edges_.contains(e.value);
  }

  NodeIndex add_node(N payload) {
    return NodeIndex{nodes_.insert(NodeEntry{std::move(payload), {}, {}})};
  }

  /// Removes `n` and every incident edge; returns the node's payload.
  N remove_node(NodeIndex n) {
    check_node(n);
    std::vector<EdgeIndex> incident = nodes_[n.value].out;
    const auto& in = nodes_[n.value].in;
    incident.insert(incident.end(), in.begin(), in.end());
    std::sort(incident.begin(), incident.end());
    incident.erase(std::unique(incident.begin(), incident.end()),
                   incident.end());
    for (EdgeIndex e : incident) remove_edge(e);
    return std::move(nodes_.erase(n.value).payload);
  }

  EdgeIndex add_edge(NodeIndex u, NodeIndex v, E payload) {
    check_node(u);
    check_node(v);
    if (!options_.multigraph) {
      if (auto existing = find_edge(u, v)) {
        edges_[existing->value].payload = std::move(payload);
        return *existing;
      }
    }
    const EdgeIndex e{edges_.insert(EdgeRecord{u, v, std::move(payload)})};
    link(e, u, v);
    return e;
  }

  E remove_edge(EdgeIndex e) {
    check_edge(e);
    const EdgeRecord& rec = edges_[e.value];
    if (options_.directed) {
      detail::erase_one(nodes_[rec.source.value].out, e);
      detail::erase_one(nodes_[rec.target.value].in, e);
    } else {
      detail::erase_one(nodes_[rec.source.value].out, e);
      if (rec.target != rec.source) {
        detail::erase_one(nodes_[rec.target.value].out, e);
      }
    }
    return std::move(edges_.erase(e.value).payload);
  }

  /// Places a node at exactly index `n`, which must be vacant. Used when
  /// restoring a graph whose indices have holes.
  void insert_node_at(NodeIndex n, N payload) {
    if (contains_node(n)) {
      throw InvalidIndexError("node " + std::to_string(n.value) +
                              " already exists");
    }
    nodes_.insert_at(n.value, NodeEntry{std::move(payload), {}, {}});
  }

  /// Places an edge at exactly index `e`, which must be vacant. In a simple
  /// graph an already connected pair is rejected rather than replaced.
  void insert_edge_at(EdgeIndex e, NodeIndex u, NodeIndex v, E payload) {
    check_node(u);
    check_node(v);
    if (contains_edge(e)) {
      throw InvalidIndexError("edge " + std::to_string(e.value) +
                              " already exists");
    }
    if (!options_.multigraph && find_edge(u, v)) {
      throw InvalidIndexError("simple graph already has an edge between " +
                              std::to_string(u.value) + " and " +
                              std::to_string(v.value));
    }
    edges_.insert_at(e.value, EdgeRecord{u, v, std::move(payload)});
    link(e, u, v);
  }

  const N& node(NodeIndex n) const {
    check_node(n);
    return nodes_[n.value].payload;
  }
  N& node(NodeIndex n) {
    check_node(n);
    return nodes_[n.value].payload;
  }
  void set_node(NodeIndex n, N payload) { node(n) = std::move(payload); }

  const E& edge(EdgeIndex e) const {
    check_edge(e);
    return edges_[e.value].payload;
  }
  E& edge(EdgeIndex e) {
    check_edge(e);
    return edges_[e.value].payload;
  }
  void set_edge(EdgeIndex e, E payload) { edge(e) = std::move(payload); }

  /// (source, target) as inserted.
  std::pair<NodeIndex, NodeIndex> endpoints(EdgeIndex e) const {
    check_edge(e);
    const EdgeRecord& rec = edges_[e.value];
    return {rec.source, rec.target};
  }

  /// The endpoint of `e` that is not `n` (or `n` itself for a self-loop).
  NodeIndex opposite(EdgeIndex e, NodeIndex n) const {
    const EdgeRecord& rec = edges_[e.value];
    return rec.source == n ? rec.target : rec.source;
  }

  /// Raw incidence lists, unordered. For undirected graphs both return the
  /// node's single list.
  std::span<const EdgeIndex> out_edges(NodeIndex n) const {
    check_node(n);
    return nodes_[n.value].out;
  }
  std::span<const EdgeIndex> in_edges(NodeIndex n) const {
    check_node(n);
    return options_.directed ? std::span<const EdgeIndex>(nodes_[n.value].in)
                             : std::span<const EdgeIndex>(nodes_[n.value].out);
  }

  /// Incident edge indices in ascending order, without duplicates.
  std::vector<EdgeIndex> incident_edges(NodeIndex n,
                                        Direction dir = Direction::all) const {
    check_node(n);
    const NodeEntry& entry = nodes_[n.value];
    std::vector<EdgeIndex> out;
    if (!options_.directed || dir != Direction::in) {
      out.insert(out.end(), entry.out.begin(), entry.out.end());
    }
    if (options_.directed && dir != Direction::out) {
      out.insert(out.end(), entry.in.begin(), entry.in.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Distinct neighbours in ascending index order. Direction is ignored for
  /// undirected graphs.
  std::vector<NodeIndex> neighbors(NodeIndex n,
                                   Direction dir = Direction::all) const {
    check_node(n);
    const NodeEntry& entry = nodes_[n.value];
    std::vector<NodeIndex> out;
    if (!options_.directed) {
      out.reserve(entry.out.size());
      for (EdgeIndex e : entry.out) out.push_back(opposite(e, n));
    } else {
      if (dir != Direction::in) {
        for (EdgeIndex e : entry.out) out.push_back(edges_[e.value].target);
      }
      if (dir != Direction::out) {
        for (EdgeIndex e : entry.in) out.push_back(edges_[e.value].source);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Edge-end count. An undirected self-loop contributes 2.
  std::size_t degree(NodeIndex n) const {
    check_node(n);
    const NodeEntry& entry = nodes_[n.value];
    if (options_.directed) return entry.out.size() + entry.in.size();
    std::size_t d = 0;
    for (EdgeIndex e : entry.out) d += edges_[e.value].source == edges_[e.value].target ? 2 : 1;
    return d;
  }
  std::size_t out_degree(NodeIndex n) const { return out_edges(n).size(); }
  std::size_t in_degree(NodeIndex n) const { return in_edges(n).size(); }

  /// Every live edge joining u to v (either orientation when undirected),
  /// ascending.
  std::vector<EdgeIndex> edges_between(NodeIndex u, NodeIndex v) const {
    check_node(u);
    check_node(v);
    std::vector<EdgeIndex> out;
    for (EdgeIndex e : nodes_[u.value].out) {
      const EdgeRecord& rec = edges_[e.value];
      if (options_.directed ? rec.target == v : opposite(e, u) == v) {
        out.push_back(e);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<EdgeIndex> find_edge(NodeIndex u, NodeIndex v) const {
    check_node(u);
    check_node(v);
    for (EdgeIndex e : nodes_[u.value].out) {
      const EdgeRecord& rec = edges_[e.value];
      if (options_.directed ? rec.target == v : opposite(e, u) == v) return e;
    }
    return std::nullopt;
  }

  std::vector<NodeIndex> node_indices() const {
    std::vector<NodeIndex> out;
    out.reserve(nodes_.live());
    for (index_type i = 0; i < nodes_.bound(); ++i) {
      if (nodes_.contains(i)) out.push_back(NodeIndex{i});
    }
    return out;
  }

  std::vector<EdgeIndex> edge_indices() const {
    std::vector<EdgeIndex> out;
    out.reserve(edges_.live());
    for (index_type i = 0; i < edges_.bound(); ++i) {
      if (edges_.contains(i)) out.push_back(EdgeIndex{i});
    }
    return out;
  }

  /// (index, source, target) ascending by edge index.
  std::vector<EdgeEntry> edge_list() const {
    std::vector<EdgeEntry> out;
    out.reserve(edges_.live());
    for (index_type i = 0; i < edges_.bound(); ++i) {
      if (edges_.contains(i)) {
        const EdgeRecord& rec = edges_[i];
        out.push_back(EdgeEntry{EdgeIndex{i}, rec.source, rec.target});
      }
    }
    return out;
  }

  /// Full structural self-check: free lists, incidence lists, counts and
  /// simple-graph uniqueness. Linear-ish; meant for tests.
  bool is_consistent() const {
    if (!nodes_.sound() || !edges_.sound()) return false;
    std::vector<std::size_t> out_seen(nodes_.bound(), 0);
    std::vector<std::size_t> in_seen(nodes_.bound(), 0);
    for (index_type i = 0; i < edges_.bound(); ++i) {
      if (!edges_.contains(i)) continue;
      const EdgeRecord& rec = edges_[i];
      if (!contains_node(rec.source) || !contains_node(rec.target)) {
        return false;
      }
      const EdgeIndex e{i};
      const auto count = [&](const std::vector<EdgeIndex>& list) {
        return std::count(list.begin(), list.end(), e);
      };
      const NodeEntry& src = nodes_[rec.source.value];
      const NodeEntry& dst = nodes_[rec.target.value];
      if (options_.directed) {
        if (count(src.out) != 1 || count(dst.in) != 1) return false;
        ++out_seen[rec.source.value];
        ++in_seen[rec.target.value];
      } else {
        if (count(src.out) != 1 || count(dst.out) != 1) return false;
        ++out_seen[rec.source.value];
        if (rec.source != rec.target) ++out_seen[rec.target.value];
      }
      if (!options_.multigraph && edges_between(rec.source, rec.target).size() != 1) {
        return false;
      }
    }
    for (index_type i = 0; i < nodes_.bound(); ++i) {
      if (!nodes_.contains(i)) continue;
      const NodeEntry& entry = nodes_[i];
      if (entry.out.size() != out_seen[i]) return false;
      if (entry.in.size() != (options_.directed ? in_seen[i] : 0)) return false;
    }
    return true;
  }

 private:
  struct NodeEntry {
    N payload;
    std::vector<EdgeIndex> out;
    std::vector<EdgeIndex> in;
  };

  struct EdgeRecord {
    NodeIndex source;
    NodeIndex target;
    E payload;
  };

  void link(EdgeIndex e, NodeIndex u, NodeIndex v) {
    nodes_[u.value].out.push_back(e);
    if (options_.directed) {
      nodes_[v.value].in.push_back(e);
    } else if (u != v) {
      nodes_[v.value].out.push_back(e);
    }
  }

  void check_node(NodeIndex n) const {
    if (!nodes_.contains(n.value)) {
      throw InvalidIndexError("no node with index " + std::to_string(n.value));
    }
  }

  void check_edge(EdgeIndex e) const {
    if (!edges_.contains(e.value)) {
      throw InvalidIndexError("no edge with index " + std::to_string(e.value));
    }
  }

  GraphOptions options_;
  detail::SlotTable<NodeEntry> nodes_;
  detail::SlotTable<EdgeRecord> edges_;
};

}  // namespace stablegraph
