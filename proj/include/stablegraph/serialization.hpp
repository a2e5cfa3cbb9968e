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

// Graph files and interchange formats.
//
// The graph document is one JSON object:
//
//   {"directed": false, "multigraph": true,
//    "nodes": [{"id": 0, "data": ...}, ...],
//    "edges": [{"id": 0, "source": 0, "target": 1, "data": ...}, ...]}
//
// Ids are the graph's node and edge indices and may have holes. "data" is
// optional and defaults to null. Free-list state is not stored, so a
// restored graph may hand out different indices on its next insertion.

#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stablegraph/errors.hpp"
#include "stablegraph/stable_graph.hpp"

namespace stablegraph {

using Json = nlohmann::json;
/// Keeps keys in insertion order; used for emitted documents.
using OrderedJson = nlohmann::ordered_json;

/// Graph whose payloads are JSON values; what files load into.
using JsonGraph = StableGraph<Json, Json>;

struct DocumentNode {
  index_type id = 0;
  Json data;

  bool operator==(const DocumentNode&) const = default;
};

struct DocumentEdge {
  index_type id = 0;
  index_type source = 0;
  index_type target = 0;
  Json data;

  bool operator==(const DocumentEdge&) const = default;
};

struct GraphDocument {
  bool directed = false;
  bool multigraph = true;
  std::vector<DocumentNode> nodes;  // ascending id
  std::vector<DocumentEdge> edges;  // ascending id

  bool operator==(const GraphDocument&) const = default;
};

/// Throws UnrepresentablePayloadError for values JSON cannot carry
/// faithfully (NaN, infinities, binary blobs, discarded values).
void check_representable(const Json& value);

/// Snapshot of `g`, converting payloads with the given callbacks.
template <class Graph, class NodeToJson, class EdgeToJson>
GraphDocument to_document(const Graph& g, NodeToJson&& node_json,
                          EdgeToJson&& edge_json) {
  GraphDocument doc;
  doc.directed = g.is_directed();
  doc.multigraph = g.is_multigraph();
  for (NodeIndex n : g.node_indices()) {
    Json data = std::invoke(node_json, g.node(n));
    check_representable(data);
    doc.nodes.push_back(DocumentNode{n.value, std::move(data)});
  }
  for (const EdgeEntry& e : g.edge_list()) {
    Json data = std::invoke(edge_json, g.edge(e.index));
    check_representable(data);
    doc.edges.push_back(
        DocumentEdge{e.index.value, e.source.value, e.target.value, std::move(data)});
  }
  return doc;
}

GraphDocument to_document(const JsonGraph& g);

/// Rebuilds a graph with exactly the document's node and edge indices.
/// Throws SchemaError for duplicate ids, dangling endpoints, or parallel
/// edges in a document marked as a simple graph.
JsonGraph from_document(const GraphDocument& doc);

/// Parses and validates the JSON object form. Throws SchemaError.
GraphDocument document_from_json(const Json& j);
OrderedJson document_to_json(const GraphDocument& doc);

JsonGraph read_graph(std::istream& in);
JsonGraph read_graph_file(const std::filesystem::path& path);
/// Compact single-line JSON plus a trailing newline.
std::string write_graph(const JsonGraph& g);

/// Parses "u v" / "u v w" lines; '#' starts a comment line. Creates nodes
/// 0..max id with null payloads and one edge per line, in line order. A
/// weight w becomes the edge payload {"weight": w}. Throws ParseError.
JsonGraph from_edge_list(std::string_view text, bool directed);

std::string escape_dot_label(std::string_view text);

/// Graphviz DOT text. Nodes are named N_<index>; with a `label` callback each
/// node line carries its (escaped) label.
template <class Graph>
std::string to_dot(
    const Graph& g,
    const std::function<std::string(const typename Graph::node_type&)>& label = {}) {
  std::ostringstream os;
  os << (g.is_directed() ? "digraph {\n" : "graph {\n");
  for (NodeIndex n : g.node_indices()) {
    os << "  N_" << n.value;
    if (label) os << " [label=\"" << escape_dot_label(label(g.node(n))) << "\"]";
    os << ";\n";
  }
  const char* connector = g.is_directed() ? " -> " : " -- ";
  for (const EdgeEntry& e : g.edge_list()) {
    os << "  N_" << e.source.value << connector << "N_" << e.target.value << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace stablegraph
