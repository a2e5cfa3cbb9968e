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

#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "stablegraph/stablegraph.hpp"

namespace stablegraph::cli {

namespace {

// Raised for bad input that is not already a GraphError.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  Context(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  std::ostream& out;
  std::ostream& err;
  bool quiet = false;
  std::string out_path;
  bool directed_edges = false;

  void diag(const std::string& msg) const {
    if (!quiet) err << "sgraph: " << msg << "\n";
  }

  void emit(const std::string& text) const {
    if (out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
    file << text;
  }

  void emit(const OrderedJson& j) const { emit(j.dump() + "\n"); }

  JsonGraph load(const std::string& path) const {
    if (path.size() > 6 && path.ends_with(".edges")) {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot open " + path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      return from_edge_list(buffer.str(), directed_edges);
    }
    return read_graph_file(path);
  }
};

NodeIndex node_arg(const JsonGraph& g, std::int64_t id, const char* what) {
  if (id < 0 || !g.contains_node(NodeIndex{static_cast<index_type>(id)})) {
    throw UsageError(std::string(what) + " " + std::to_string(id) +
                     " is not a node of the graph");
  }
  return NodeIndex{static_cast<index_type>(id)};
}

OrderedJson mapping_json(const IsoMapping& m) {
  OrderedJson j = OrderedJson::object();
  for (const auto& [p, h] : m) j[std::to_string(p.value)] = h.value;
  return j;
}

MatchSemantics<JsonGraph> payload_semantics(bool match_nodes, bool match_edges) {
  MatchSemantics<JsonGraph> sem;
  const auto equal = [](const Json& a, const Json& b) { return a == b; };
  if (match_nodes) sem.node_match = equal;
  if (match_edges) sem.edge_match = equal;
  return sem;
}

struct GenerateArgs {
  std::string family;
  std::optional<std::int64_t> n, k, rows, cols, order;
};

int cmd_generate(const Context& ctx, const GenerateArgs& a) {
  const auto need = [&](const std::optional<std::int64_t>& v, const char* flag) {
    if (!v) throw UsageError(a.family + " requires " + flag);
    return *v;
  };
  JsonGraph g;
  if (a.family == "petersen") {
    g = generators::generalized_petersen<JsonGraph>(a.n.value_or(5), a.k.value_or(2));
  } else if (a.family == "hexagonal-lattice") {
    g = generators::hexagonal_lattice<JsonGraph>(need(a.rows, "--rows"),
                                                 need(a.cols, "--cols"));
  } else if (a.family == "binomial-tree") {
    g = generators::binomial_tree<JsonGraph>(need(a.order, "--order"));
  } else if (a.family == "grid") {
    g = generators::grid_graph<JsonGraph>(need(a.rows, "--rows"), need(a.cols, "--cols"));
  } else {
    throw UsageError("unknown family " + a.family);
  }
  ctx.emit(write_graph(g));
  if (!ctx.out_path.empty()) {
    OrderedJson counts;
    counts["nodes"] = g.node_count();
    counts["edges"] = g.edge_count();
    ctx.out << counts.dump() << "\n";
  }
  return kSuccess;
}

int cmd_info(const Context& ctx, const std::string& path) {
  const JsonGraph g = ctx.load(path);
  OrderedJson j;
  j["directed"] = g.is_directed();
  j["multigraph"] = g.is_multigraph();
  j["nodes"] = g.node_count();
  j["edges"] = g.edge_count();
  if (g.is_directed()) j["is_dag"] = is_dag(g);
  ctx.emit(j);
  return kSuccess;
}

struct ShortestPathArgs {
  std::string graph;
  std::int64_t source = 0;
  std::optional<std::int64_t> target;
  std::optional<std::string> weight_key;
  std::optional<double> default_weight;
};

int cmd_shortest_path(const Context& ctx, const ShortestPathArgs& a) {
  const JsonGraph g = ctx.load(a.graph);
  const NodeIndex source = node_arg(g, a.source, "source");
  std::optional<NodeIndex> target;
  if (a.target) target = node_arg(g, *a.target, "target");

  const auto lookup = [&](const Json& payload) -> std::optional<double> {
    if (!payload.is_object()) return std::nullopt;
    auto it = payload.find(*a.weight_key);
    if (it == payload.end() || !it->is_number()) return std::nullopt;
    return it->get<double>();
  };
  if (a.weight_key && !a.default_weight) {
    for (EdgeIndex e : g.edge_indices()) {
      if (!lookup(g.edge(e))) {
        throw UsageError("edge " + std::to_string(e.value) + " has no numeric \"" +
                         *a.weight_key + "\" field");
      }
    }
  }
  const auto weight = [&](const Json& payload) {
    if (!a.weight_key) return 1.0;
    return lookup(payload).value_or(a.default_weight.value_or(1.0));
  };

  const PathResult result = dijkstra(g, source, weight, target);
  OrderedJson j;
  OrderedJson distances = OrderedJson::object();
  for (const auto& [n, d] : result.distances) distances[std::to_string(n.value)] = d;
  j["distances"] = std::move(distances);
  int code = kSuccess;
  if (target) {
    const auto path = path_to(result, *target);
    if (path.empty()) {
      j["path"] = nullptr;
      code = kDomainFailure;
      ctx.diag("target " + std::to_string(target->value) + " is unreachable");
    } else {
      OrderedJson nodes = OrderedJson::array();
      for (NodeIndex n : path) nodes.push_back(n.value);
      j["path"] = std::move(nodes);
    }
  }
  ctx.emit(j);
  return code;
}

int cmd_topo(const Context& ctx, const std::string& path) {
  const JsonGraph g = ctx.load(path);
  try {
    OrderedJson j = OrderedJson::array();
    for (NodeIndex n : topological_sort(g)) j.push_back(n.value);
    ctx.emit(j);
    return kSuccess;
  } catch (const CycleError& e) {
    ctx.diag(e.what());
    return kDomainFailure;
  }
}

struct IsoArgs {
  std::string first;
  std::string second;
  bool induced = true;
  std::size_t mappings = 1;
  bool match_nodes = false;
  bool match_edges = false;
};

int cmd_isomorphic(const Context& ctx, const IsoArgs& a) {
  const JsonGraph first = ctx.load(a.first);
  const JsonGraph second = ctx.load(a.second);
  const auto found =
      find_isomorphism(first, second, payload_semantics(a.match_nodes, a.match_edges));
  OrderedJson j;
  j["isomorphic"] = found.has_value();
  j["mapping"] = found ? mapping_json(*found) : OrderedJson(nullptr);
  ctx.emit(j);
  return found ? kSuccess : kDomainFailure;
}

int cmd_subisomorphic(const Context& ctx, const IsoArgs& a) {
  const JsonGraph host = ctx.load(a.first);
  const JsonGraph pattern = ctx.load(a.second);
  MatchSemantics<JsonGraph> sem = payload_semantics(a.match_nodes, a.match_edges);
  sem.induced = a.induced;
  const auto found = vf2_mappings(host, pattern, sem, a.mappings);
  OrderedJson list = OrderedJson::array();
  for (const IsoMapping& m : found) list.push_back(mapping_json(m));
  OrderedJson j;
  j["found"] = !found.empty();
  j["mappings"] = std::move(list);
  ctx.emit(j);
  return found.empty() ? kDomainFailure : kSuccess;
}

int cmd_layout(const Context& ctx, const std::string& device_path,
               const std::string& circuit_path) {
  const JsonGraph device = ctx.load(device_path);
  const JsonGraph circuit = ctx.load(circuit_path);
  const auto layout = vf2_layout(device, circuit);
  OrderedJson j;
  j["layout"] = layout ? mapping_json(*layout) : OrderedJson(nullptr);
  ctx.emit(j);
  if (!layout) ctx.diag("no layout: circuit connectivity does not embed in the device");
  return layout ? kSuccess : kDomainFailure;
}

int cmd_matching(const Context& ctx, const std::string& path, bool exact) {
  const JsonGraph g = ctx.load(path);
  const Matching m = exact ? max_matching_exact(g) : greedy_maximal_matching(g);
  OrderedJson j = OrderedJson::array();
  for (EdgeIndex e : m) j.push_back(e.value);
  ctx.emit(j);
  return kSuccess;
}

int cmd_dot(const Context& ctx, const std::string& path,
            const std::optional<std::string>& label_key) {
  const JsonGraph g = ctx.load(path);
  std::function<std::string(const Json&)> label;
  if (label_key) {
    label = [key = *label_key](const Json& payload) -> std::string {
      if (!payload.is_object()) return "";
      auto it = payload.find(key);
      if (it == payload.end()) return "";
      return it->is_string() ? it->get<std::string>() : it->dump();
    };
  }
  ctx.emit(to_dot(g, label));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx(out, err);
  CLI::App app{"Stable-index graph toolkit", "sgraph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--quiet", ctx.quiet, "Suppress diagnostics on stderr");
  app.add_option("-o,--out", ctx.out_path, "Write the result to PATH instead of stdout");
  app.add_flag("--directed", ctx.directed_edges,
               "Treat .edges input files as directed");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a named graph family");
  generate->add_option("family", gen.family,
                       "petersen | hexagonal-lattice | binomial-tree | grid")
      ->required();
  generate->add_option("--n", gen.n, "Petersen outer ring size (default 5)");
  generate->add_option("--k", gen.k, "Petersen inner step (default 2)");
  generate->add_option("--rows", gen.rows);
  generate->add_option("--cols", gen.cols);
  generate->add_option("--order", gen.order);

  std::string info_path;
  auto* info = app.add_subcommand("info", "Print graph summary");
  info->add_option("graph", info_path)->required();

  ShortestPathArgs sp;
  auto* shortest = app.add_subcommand("shortest-path", "Dijkstra from a source node");
  shortest->add_option("graph", sp.graph)->required();
  shortest->add_option("--source", sp.source)->required();
  shortest->add_option("--target", sp.target);
  shortest->add_option("--weight-key", sp.weight_key,
                       "Edge payload field holding the weight (default: unit weights)");
  shortest->add_option("--default-weight", sp.default_weight,
                       "Weight for edges lacking the weight field");

  std::string topo_path;
  auto* topo = app.add_subcommand("topo", "Topological order of a DAG");
  topo->add_option("graph", topo_path)->required();

  IsoArgs iso;
  auto* isomorphic = app.add_subcommand("isomorphic", "Full graph isomorphism");
  isomorphic->add_option("first", iso.first)->required();
  isomorphic->add_option("second", iso.second)->required();
  isomorphic->add_flag("--match-node-data", iso.match_nodes);
  isomorphic->add_flag("--match-edge-data", iso.match_edges);

  IsoArgs sub;
  auto* subiso = app.add_subcommand("subisomorphic",
                                    "Find mappings of PATTERN into HOST");
  subiso->add_option("host", sub.first)->required();
  subiso->add_option("pattern", sub.second)->required();
  subiso->add_option("--induced", sub.induced, "true: induced subgraph; false: monomorphism");
  subiso->add_option("--mappings", sub.mappings, "Maximum mappings to report (default 1)")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  subiso->add_flag("--match-node-data", sub.match_nodes);
  subiso->add_flag("--match-edge-data", sub.match_edges);

  std::string device_path, circuit_path;
  auto* layout = app.add_subcommand("layout", "Place circuit qubits on a device");
  layout->add_option("device", device_path)->required();
  layout->add_option("circuit", circuit_path)->required();

  std::string matching_path;
  bool exact = false;
  auto* matching = app.add_subcommand("matching", "Greedy maximal matching");
  matching->add_option("graph", matching_path)->required();
  matching->add_flag("--exact", exact, "Exact maximum matching (at most 20 nodes)");

  std::string dot_path;
  std::optional<std::string> label_key;
  auto* dot = app.add_subcommand("dot", "Graphviz DOT output");
  dot->add_option("graph", dot_path)->required();
  dot->add_option("--label-key", label_key, "Node payload field used as label");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    ctx.diag(e.what());
    return kUsageError;
  }

  try {
    if (*generate) return cmd_generate(ctx, gen);
    if (*info) return cmd_info(ctx, info_path);
    if (*shortest) return cmd_shortest_path(ctx, sp);
    if (*topo) return cmd_topo(ctx, topo_path);
    if (*isomorphic) return cmd_isomorphic(ctx, iso);
    if (*subiso) return cmd_subisomorphic(ctx, sub);
    if (*layout) return cmd_layout(ctx, device_path, circuit_path);
    if (*matching) return cmd_matching(ctx, matching_path, exact);
    if (*dot) return cmd_dot(ctx, dot_path, label_key);
  } catch (const GraphError& e) {
    ctx.diag(e.what());
    return kUsageError;
  } catch (const UsageError& e) {
    ctx.diag(e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    ctx.diag(e.what());
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace stablegraph::cli
