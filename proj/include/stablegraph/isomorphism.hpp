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

// VF2 graph and subgraph isomorphism.
//
// ARGUMENT ORDER: every subgraph routine takes (host, pattern) and produces
// mappings from pattern node indices to host node indices. Matcher callbacks
// receive (pattern payload, host payload).
//
// The search visits pattern nodes in a fixed VF2++-style order (BFS from the
// highest-degree node, most-connected-first within a level) and prunes with
// the classic VF2 consistency rules plus one-step look-ahead on the terminal
// sets. Host candidates are tried in ascending index order, so the sequence
// of emitted mappings is deterministic.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "stablegraph/errors.hpp"
#include "stablegraph/stable_graph.hpp"

namespace stablegraph {

/// Pattern node index -> host node index.
using IsoMapping = std::map<NodeIndex, NodeIndex>;

enum class MatchOrdering {
  vf2pp,
  /// Pattern nodes in ascending index order; for testing the heuristic.
  ascending,
};

template <class Graph>
struct MatchSemantics {
  using NodeMatcher = std::function<bool(const typename Graph::node_type&,
                                         const typename Graph::node_type&)>;
  using EdgeMatcher = std::function<bool(const typename Graph::edge_type&,
                                         const typename Graph::edge_type&)>;

  /// true: pattern non-edges must map to host non-edges and parallel edge
  /// counts must be equal. false (monomorphism): host may have extra edges.
  bool induced = true;
  NodeMatcher node_match;
  EdgeMatcher edge_match;
  MatchOrdering ordering = MatchOrdering::vf2pp;
};

namespace detail {

inline constexpr std::size_t kUnmapped = ~std::size_t{0};

struct Arc {
  std::size_t to;
  std::vector<EdgeIndex> edges;
};

// Dense snapshot of a graph: live nodes renumbered 0..n-1 in index order,
// parallel edges grouped per neighbour, arc lists sorted by neighbour.
struct CompactGraph {
  bool directed = false;
  std::vector<NodeIndex> ids;
  std::vector<std::vector<Arc>> out;
  std::vector<std::vector<Arc>> in;  // unused when undirected
  std::vector<std::vector<std::size_t>> adjacent;  // distinct, no self
  std::vector<std::size_t> degree;

  std::size_t size() const { return ids.size(); }

  const std::vector<Arc>& preds(std::size_t u) const {
    return directed ? in[u] : out[u];
  }

  const Arc* arc(std::size_t u, std::size_t v) const {
    const auto& list = out[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Arc& a, std::size_t x) { return a.to < x; });
    return it != list.end() && it->to == v ? &*it : nullptr;
  }

  std::size_t multiplicity(std::size_t u, std::size_t v) const {
    const Arc* a = arc(u, v);
    return a ? a->edges.size() : 0;
  }
};

inline void group_arcs(std::vector<std::pair<std::size_t, EdgeIndex>>& raw,
                       std::vector<Arc>& arcs) {
  std::sort(raw.begin(), raw.end());
  for (const auto& [to, e] : raw) {
    if (arcs.empty() || arcs.back().to != to) arcs.push_back(Arc{to, {}});
    arcs.back().edges.push_back(e);
  }
}

template <class Graph>
CompactGraph compact(const Graph& g) {
  CompactGraph c;
  c.directed = g.is_directed();
  c.ids = g.node_indices();
  std::vector<std::size_t> dense(g.node_bound(), kUnmapped);
  for (std::size_t i = 0; i < c.ids.size(); ++i) dense[c.ids[i].value] = i;

  const std::size_t n = c.ids.size();
  c.out.resize(n);
  c.adjacent.resize(n);
  c.degree.resize(n);
  if (c.directed) c.in.resize(n);
  std::vector<std::pair<std::size_t, EdgeIndex>> raw;
  for (std::size_t u = 0; u < n; ++u) {
    const NodeIndex id = c.ids[u];
    raw.clear();
    for (EdgeIndex e : g.out_edges(id)) {
      raw.emplace_back(dense[g.opposite(e, id).value], e);
    }
    group_arcs(raw, c.out[u]);
    if (c.directed) {
      raw.clear();
      for (EdgeIndex e : g.in_edges(id)) {
        raw.emplace_back(dense[g.endpoints(e).first.value], e);
      }
      group_arcs(raw, c.in[u]);
    }
    c.degree[u] = g.degree(id);
    auto& adj = c.adjacent[u];
    for (const Arc& a : c.out[u]) adj.push_back(a.to);
    if (c.directed) {
      for (const Arc& a : c.in[u]) adj.push_back(a.to);
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    std::erase(adj, u);
  }
  return c;
}

// Does a matcher-respecting assignment of each pattern edge to a distinct
// host edge exist? Small augmenting-path bipartite matching; `exact` also
// requires the two edge groups to have equal size.
template <class Graph>
bool edge_groups_compatible(const Graph& pattern, std::span<const EdgeIndex> pe,
                            const Graph& host, std::span<const EdgeIndex> he,
                            bool exact,
                            const typename MatchSemantics<Graph>::EdgeMatcher& match) {
  if (exact ? pe.size() != he.size() : pe.size() > he.size()) return false;
  if (!match || pe.empty()) return true;
  std::vector<std::vector<char>> ok(pe.size(), std::vector<char>(he.size(), 0));
  for (std::size_t i = 0; i < pe.size(); ++i) {
    for (std::size_t j = 0; j < he.size(); ++j) {
      ok[i][j] = match(pattern.edge(pe[i]), host.edge(he[j])) ? 1 : 0;
    }
  }
  std::vector<std::size_t> owner(he.size(), kUnmapped);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < he.size(); ++j) {
      if (!ok[i][j] || visited[j]) continue;
      visited[j] = 1;
      if (owner[j] == kUnmapped || augment(owner[j])) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < pe.size(); ++i) {
    visited.assign(he.size(), 0);
    if (!augment(i)) return false;
  }
  return true;
}

inline std::vector<std::size_t> match_order(const CompactGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> order;
  order.reserve(n);
  if (n == 0) return order;

  // Connected components (ignoring direction), labelled in index order.
  std::vector<std::size_t> comp(n, kUnmapped);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != kUnmapped) continue;
    const std::size_t id = members.size();
    members.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      members[id].push_back(u);
      for (std::size_t v : g.adjacent[u]) {
        if (comp[v] == kUnmapped) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
  }
  const auto root_of = [&](const std::vector<std::size_t>& nodes) {
    std::size_t best = kUnmapped;
    for (std::size_t u : nodes) {
      if (best == kUnmapped || g.degree[u] > g.degree[best] ||
          (g.degree[u] == g.degree[best] && u < best)) {
        best = u;
      }
    }
    return best;
  };

  // The component holding the overall highest-degree node goes first, then
  // the rest by decreasing size (ties: lowest member index).
  std::vector<std::size_t> comp_order(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) comp_order[i] = i;
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const std::size_t first = comp[root_of(all)];
  std::stable_sort(comp_order.begin(), comp_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if ((a == first) != (b == first)) return a == first;
                     return members[a].size() > members[b].size();
                   });

  std::vector<char> placed(n, 0);
  std::vector<char> discovered(n, 0);
  std::vector<std::size_t> conn(n, 0);
  for (std::size_t c : comp_order) {
    std::vector<std::size_t> level{root_of(members[c])};
    discovered[level.front()] = 1;
    while (!level.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t u : level) {
        for (std::size_t v : g.adjacent[u]) {
          if (!discovered[v]) {
            discovered[v] = 1;
            next.push_back(v);
          }
        }
      }
      // Greedy pick within the level: most already-ordered neighbours,
      // then highest degree, then lowest index.
      while (!level.empty()) {
        auto best = level.begin();
        for (auto it = level.begin() + 1; it != level.end(); ++it) {
          const std::size_t u = *it;
          const std::size_t b = *best;
          if (conn[u] != conn[b] ? conn[u] > conn[b]
              : g.degree[u] != g.degree[b] ? g.degree[u] > g.degree[b]
                                           : u < b) {
            best = it;
          }
        }
        const std::size_t u = *best;
        level.erase(best);
        order.push_back(u);
        placed[u] = 1;
        for (std::size_t v : g.adjacent[u]) ++conn[v];
      }
      level = std::move(next);
    }
  }
  return order;
}

enum class Mode { isomorphism, induced, monomorphism };

template <class Graph>
class Vf2Search {
 public:
  Vf2Search(const Graph& host, const Graph& pattern,
            const MatchSemantics<Graph>& sem, Mode mode)
      : host_graph_(host),
        pattern_graph_(pattern),
        sem_(sem),
        induced_(mode != Mode::monomorphism),
        host_(compact(host)),
        pattern_(compact(pattern)) {
    if (host.is_directed() != pattern.is_directed()) {
      throw DirectednessMismatchError(
          "host and pattern must both be directed or both undirected");
    }
    if (sem.ordering == MatchOrdering::vf2pp) {
      order_ = match_order(pattern_);
    } else {
      order_.resize(pattern_.size());
      for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    }
    impossible_ = pattern_.size() > host_.size();
    if (mode == Mode::isomorphism) {
      impossible_ = impossible_ || pattern_.size() != host_.size() ||
                    pattern.edge_count() != host.edge_count();
    }
    core_p_.assign(pattern_.size(), kUnmapped);
    core_h_.assign(host_.size(), kUnmapped);
    t_out_p_.assign(pattern_.size(), 0);
    t_in_p_.assign(pattern_.size(), 0);
    t_out_h_.assign(host_.size(), 0);
    t_in_h_.assign(host_.size(), 0);
  }

  /// Calls `visit(mapping)` for each mapping until it returns false.
  /// Returns the number of mappings visited.
  template <class Visitor>
  std::size_t run(Visitor&& visit) {
    if (impossible_) return 0;
    const std::size_t np = pattern_.size();
    std::size_t emitted = 0;
    if (np == 0) {
      visit(IsoMapping{});
      return 1;
    }
    struct Frame {
      std::vector<std::size_t> candidates;
      std::size_t pos = 0;
      std::size_t chosen = kUnmapped;
    };
    std::vector<Frame> frames(np);
    std::size_t depth = 0;
    frames[0].candidates = candidates(order_[0]);
    while (true) {
      Frame& f = frames[depth];
      const std::size_t p = order_[depth];
      if (f.chosen != kUnmapped) {
        unassign(depth, p, f.chosen);
        f.chosen = kUnmapped;
      }
      while (f.pos < f.candidates.size()) {
        const std::size_t h = f.candidates[f.pos++];
        if (core_h_[h] == kUnmapped && feasible(p, h)) {
          assign(depth, p, h);
          f.chosen = h;
          break;
        }
      }
      if (f.chosen == kUnmapped) {
        if (depth == 0) return emitted;
        --depth;
        continue;
      }
      if (depth + 1 == np) {
        ++emitted;
        if (!visit(current())) return emitted;
        continue;
      }
      ++depth;
      frames[depth].candidates = candidates(order_[depth]);
      frames[depth].pos = 0;
      frames[depth].chosen = kUnmapped;
    }
  }

 private:
  IsoMapping current() const {
    IsoMapping m;
    for (std::size_t p = 0; p < core_p_.size(); ++p) {
      m.emplace(pattern_.ids[p], host_.ids[core_p_[p]]);
    }
    return m;
  }

  // Host nodes worth trying for pattern node p: the matching neighbourhood
  // of an already mapped neighbour's image, or every host node.
  std::vector<std::size_t> candidates(std::size_t p) const {
    std::vector<std::size_t> out;
    for (const Arc& a : pattern_.out[p]) {
      if (a.to != p && core_p_[a.to] != kUnmapped) {
        for (const Arc& b : host_.preds(core_p_[a.to])) {
          if (core_h_[b.to] == kUnmapped) out.push_back(b.to);
        }
        return out;
      }
    }
    if (pattern_.directed) {
      for (const Arc& a : pattern_.in[p]) {
        if (a.to != p && core_p_[a.to] != kUnmapped) {
          for (const Arc& b : host_.out[core_p_[a.to]]) {
            if (core_h_[b.to] == kUnmapped) out.push_back(b.to);
          }
          return out;
        }
      }
    }
    for (std::size_t h = 0; h < host_.size(); ++h) {
      if (core_h_[h] == kUnmapped) out.push_back(h);
    }
    return out;
  }

  // Pattern arc p->q against host arc h->k under the active semantics.
  bool arcs_compatible(std::size_t p, std::size_t q, std::size_t h,
                       std::size_t k) const {
    const Arc* pa = pattern_.arc(p, q);
    const Arc* ha = host_.arc(h, k);
    const std::span<const EdgeIndex> pe = pa ? std::span<const EdgeIndex>(pa->edges)
                                             : std::span<const EdgeIndex>();
    const std::span<const EdgeIndex> he = ha ? std::span<const EdgeIndex>(ha->edges)
                                             : std::span<const EdgeIndex>();
    return edge_groups_compatible(pattern_graph_, pe, host_graph_, he, induced_,
                                  sem_.edge_match);
  }

  bool feasible(std::size_t p, std::size_t h) const {
    if (pattern_.out[p].size() > host_.out[h].size()) return false;
    if (pattern_.directed && pattern_.in[p].size() > host_.in[h].size()) {
      return false;
    }
    if (sem_.node_match &&
        !sem_.node_match(pattern_graph_.node(pattern_.ids[p]),
                         host_graph_.node(host_.ids[h]))) {
      return false;
    }
    if (!arcs_compatible(p, p, h, h)) return false;

    // Edges to already mapped pattern neighbours must exist in the host.
    for (const Arc& a : pattern_.out[p]) {
      const std::size_t q = a.to;
      if (q == p || core_p_[q] == kUnmapped) continue;
      if (!arcs_compatible(p, q, h, core_p_[q])) return false;
    }
    if (pattern_.directed) {
      for (const Arc& a : pattern_.in[p]) {
        const std::size_t q = a.to;
        if (q == p || core_p_[q] == kUnmapped) continue;
        if (!arcs_compatible(q, p, core_p_[q], h)) return false;
      }
    }
    // Induced: host edges to mapped nodes must have pattern counterparts.
    if (induced_) {
      for (const Arc& b : host_.out[h]) {
        const std::size_t k = b.to;
        if (k == h || core_h_[k] == kUnmapped) continue;
        if (pattern_.multiplicity(p, core_h_[k]) == 0) return false;
      }
      if (host_.directed) {
        for (const Arc& b : host_.in[h]) {
          const std::size_t k = b.to;
          if (k == h || core_h_[k] == kUnmapped) continue;
          if (pattern_.multiplicity(core_h_[k], p) == 0) return false;
        }
      }
    }
    return look_ahead(p, h);
  }

  struct Counts {
    std::size_t t_in = 0;
    std::size_t t_out = 0;
    std::size_t fresh = 0;
    std::size_t total = 0;
  };

  static Counts classify(const std::vector<Arc>& arcs, std::size_t self,
                         const std::vector<std::size_t>& core,
                         const std::vector<std::size_t>& t_in,
                         const std::vector<std::size_t>& t_out) {
    Counts c;
    for (const Arc& a : arcs) {
      const std::size_t x = a.to;
      if (x == self || core[x] != kUnmapped) continue;
      ++c.total;
      const bool in = t_in[x] != 0;
      const bool out = t_out[x] != 0;
      if (in) ++c.t_in;
      if (out) ++c.t_out;
      if (!in && !out) ++c.fresh;
    }
    return c;
  }

  bool counts_fit(const Counts& pc, const Counts& hc) const {
    if (pc.t_in > hc.t_in || pc.t_out > hc.t_out) return false;
    if (induced_) return pc.fresh <= hc.fresh;
    return pc.total <= hc.total;
  }

  // One-step look-ahead: unmapped neighbours of p in each terminal set must
  // fit into the corresponding sets around h.
  bool look_ahead(std::size_t p, std::size_t h) const {
    const Counts ps = classify(pattern_.out[p], p, core_p_, t_in_p_, t_out_p_);
    const Counts hs = classify(host_.out[h], h, core_h_, t_in_h_, t_out_h_);
    if (!counts_fit(ps, hs)) return false;
    if (!pattern_.directed) return true;
    const Counts pp = classify(pattern_.in[p], p, core_p_, t_in_p_, t_out_p_);
    const Counts hp = classify(host_.in[h], h, core_h_, t_in_h_, t_out_h_);
    return counts_fit(pp, hp);
  }

  static void mark(const CompactGraph& g, std::size_t u, std::size_t stamp,
                   std::vector<std::size_t>& t_in,
                   std::vector<std::size_t>& t_out) {
    // Undirected graphs use t_out only.
    for (const Arc& a : g.out[u]) {
      if (t_out[a.to] == 0) t_out[a.to] = stamp;
    }
    if (g.directed) {
      for (const Arc& a : g.in[u]) {
        if (t_in[a.to] == 0) t_in[a.to] = stamp;
      }
    }
  }

  static void unmark(const CompactGraph& g, std::size_t u, std::size_t stamp,
                     std::vector<std::size_t>& t_in,
                     std::vector<std::size_t>& t_out) {
    for (const Arc& a : g.out[u]) {
      if (t_out[a.to] == stamp) t_out[a.to] = 0;
    }
    if (g.directed) {
      for (const Arc& a : g.in[u]) {
        if (t_in[a.to] == stamp) t_in[a.to] = 0;
      }
    }
  }

  void assign(std::size_t depth, std::size_t p, std::size_t h) {
    core_p_[p] = h;
    core_h_[h] = p;
    mark(pattern_, p, depth + 1, t_in_p_, t_out_p_);
    mark(host_, h, depth + 1, t_in_h_, t_out_h_);
  }

  void unassign(std::size_t depth, std::size_t p, std::size_t h) {
    core_p_[p] = kUnmapped;
    core_h_[h] = kUnmapped;
    unmark(pattern_, p, depth + 1, t_in_p_, t_out_p_);
    unmark(host_, h, depth + 1, t_in_h_, t_out_h_);
  }

  const Graph& host_graph_;
  const Graph& pattern_graph_;
  const MatchSemantics<Graph>& sem_;
  bool induced_;
  CompactGraph host_;
  CompactGraph pattern_;
  std::vector<std::size_t> order_;
  bool impossible_ = false;
  std::vector<std::size_t> core_p_, core_h_;
  std::vector<std::size_t> t_out_p_, t_in_p_, t_out_h_, t_in_h_;
};

}  // namespace detail

/// Pattern node visiting order used by the search.
template <class Graph>
std::vector<NodeIndex> vf2pp_order(const Graph& pattern) {
  const detail::CompactGraph c = detail::compact(pattern);
  std::vector<NodeIndex> out;
  for (std::size_t u : detail::match_order(c)) out.push_back(c.ids[u]);
  return out;
}

/// Calls `visit(const IsoMapping&) -> bool` for each mapping of `pattern`
/// into `host` until it returns false; returns how many were visited.
template <class Graph, class Visitor>
std::size_t for_each_subgraph_mapping(const Graph& host, const Graph& pattern,
                                      const MatchSemantics<Graph>& sem,
                                      Visitor&& visit) {
  detail::Vf2Search<Graph> search(
      host, pattern, sem,
      sem.induced ? detail::Mode::induced : detail::Mode::monomorphism);
  return search.run(visit);
}

template <class Graph>
std::vector<IsoMapping> vf2_mappings(const Graph& host, const Graph& pattern,
                                     const MatchSemantics<Graph>& sem = {},
                                     std::optional<std::size_t> limit = std::nullopt) {
  std::vector<IsoMapping> out;
  if (limit && *limit == 0) {
    if (host.is_directed() != pattern.is_directed()) {
      throw DirectednessMismatchError(
          "host and pattern must both be directed or both undirected");
    }
    return out;
  }
  for_each_subgraph_mapping(host, pattern, sem, [&](const IsoMapping& m) {
    out.push_back(m);
    return !limit || out.size() < *limit;
  });
  return out;
}

template <class Graph>
bool is_subgraph_isomorphic(const Graph& host, const Graph& pattern,
                            const MatchSemantics<Graph>& sem = {}) {
  return !vf2_mappings(host, pattern, sem, 1).empty();
}

/// An isomorphism from `a` onto `b` (keys are a's nodes), if one exists.
/// `sem.induced` is ignored; matchers get (a payload, b payload).
template <class Graph>
std::optional<IsoMapping> find_isomorphism(const Graph& a, const Graph& b,
                                           const MatchSemantics<Graph>& sem = {}) {
  detail::Vf2Search<Graph> search(b, a, sem, detail::Mode::isomorphism);
  std::optional<IsoMapping> found;
  search.run([&](const IsoMapping& m) {
    found = m;
    return false;
  });
  return found;
}

template <class Graph>
bool is_isomorphic(const Graph& a, const Graph& b,
                   const MatchSemantics<Graph>& sem = {}) {
  return find_isomorphism(a, b, sem).has_value();
}

/// Checks a mapping by direct inspection of every pattern node pair.
/// Returns false (never throws) on any malformed input.
template <class Graph>
bool verify_mapping(const Graph& host, const Graph& pattern,
                    const MatchSemantics<Graph>& sem, const IsoMapping& m) {
  if (host.is_directed() != pattern.is_directed()) return false;
  const std::vector<NodeIndex> nodes = pattern.node_indices();
  if (m.size() != nodes.size()) return false;
  std::vector<NodeIndex> images;
  for (NodeIndex p : nodes) {
    auto it = m.find(p);
    if (it == m.end() || !host.contains_node(it->second)) return false;
    images.push_back(it->second);
    if (sem.node_match && !sem.node_match(pattern.node(p), host.node(it->second))) {
      return false;
    }
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    return false;
  }
  const auto pair_ok = [&](NodeIndex a, NodeIndex b) {
    const auto pe = pattern.edges_between(a, b);
    const auto he = host.edges_between(m.at(a), m.at(b));
    return detail::edge_groups_compatible(pattern, std::span<const EdgeIndex>(pe),
                                          host, std::span<const EdgeIndex>(he),
                                          sem.induced, sem.edge_match);
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::size_t from = pattern.is_directed() ? 0 : i;
    for (std::size_t j = from; j < nodes.size(); ++j) {
      if (!pair_ok(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

/// First monomorphism of the circuit's interaction graph into the device's
/// coupling graph, keyed by interaction node.
template <class Graph>
std::optional<IsoMapping> vf2_layout(const Graph& device, const Graph& interaction) {
  if (device.is_directed() || interaction.is_directed()) {
    throw WrongKindError("vf2_layout requires undirected graphs");
  }
  MatchSemantics<Graph> sem;
  sem.induced = false;
  auto found = vf2_mappings(device, interaction, sem, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

}  // namespace stablegraph
