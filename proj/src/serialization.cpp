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

#include "stablegraph/serialization.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>

namespace stablegraph {

namespace {

index_type read_id(const Json& obj, const char* key, const char* what) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(std::string(what) + " is missing \"" + key + "\"");
  }
  if (!it->is_number_integer() ||
      (!it->is_number_unsigned() && it->get<std::int64_t>() < 0)) {
    throw SchemaError(std::string(what) + " \"" + key +
                      "\" must be a non-negative integer");
  }
  return it->get<index_type>();
}

bool read_flag(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing \"") + key + "\"");
  if (!it->is_boolean()) {
    throw SchemaError(std::string("\"") + key + "\" must be a boolean");
  }
  return it->get<bool>();
}

const Json& read_array(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing \"") + key + "\"");
  if (!it->is_array()) {
    throw SchemaError(std::string("\"") + key + "\" must be an array");
  }
  return *it;
}

Json read_data(const Json& obj) {
  auto it = obj.find("data");
  return it == obj.end() ? Json() : *it;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

void check_representable(const Json& value) {
  switch (value.type()) {
    case Json::value_t::number_float:
      if (!std::isfinite(value.get<double>())) {
        throw UnrepresentablePayloadError("non-finite number in payload");
      }
      return;
    case Json::value_t::binary:
    case Json::value_t::discarded:
      throw UnrepresentablePayloadError("payload has no JSON representation");
    case Json::value_t::array:
    case Json::value_t::object:
      for (const Json& child : value) check_representable(child);
      return;
    default:
      return;
  }
}

GraphDocument to_document(const JsonGraph& g) {
  const auto same = [](const Json& j) { return j; };
  return to_document(g, same, same);
}

JsonGraph from_document(const GraphDocument& doc) {
  std::vector<const DocumentNode*> nodes;
  for (const DocumentNode& n : doc.nodes) nodes.push_back(&n);
  std::sort(nodes.begin(), nodes.end(),
            [](const DocumentNode* a, const DocumentNode* b) { return a->id < b->id; });
  std::vector<const DocumentEdge*> edges;
  for (const DocumentEdge& e : doc.edges) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(),
            [](const DocumentEdge* a, const DocumentEdge* b) { return a->id < b->id; });

  JsonGraph g(GraphOptions{.directed = doc.directed, .multigraph = doc.multigraph});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0 && nodes[i]->id == nodes[i - 1]->id) {
      throw SchemaError("duplicate node id " + std::to_string(nodes[i]->id));
    }
    g.insert_node_at(NodeIndex{nodes[i]->id}, nodes[i]->data);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const DocumentEdge& e = *edges[i];
    if (i > 0 && e.id == edges[i - 1]->id) {
      throw SchemaError("duplicate edge id " + std::to_string(e.id));
    }
    if (!g.contains_node(NodeIndex{e.source}) || !g.contains_node(NodeIndex{e.target})) {
      throw SchemaError("edge " + std::to_string(e.id) +
                        " references a node that does not exist");
    }
    try {
      g.insert_edge_at(EdgeIndex{e.id}, NodeIndex{e.source}, NodeIndex{e.target}, e.data);
    } catch (const InvalidIndexError& err) {
      throw SchemaError("edge " + std::to_string(e.id) + ": " + err.what());
    }
  }
  return g;
}

GraphDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("graph document must be a JSON object");
  GraphDocument doc;
  doc.directed = read_flag(j, "directed");
  doc.multigraph = read_flag(j, "multigraph");
  for (const Json& n : read_array(j, "nodes")) {
    if (!n.is_object()) throw SchemaError("node entries must be objects");
    doc.nodes.push_back(DocumentNode{read_id(n, "id", "node"), read_data(n)});
  }
  for (const Json& e : read_array(j, "edges")) {
    if (!e.is_object()) throw SchemaError("edge entries must be objects");
    doc.edges.push_back(DocumentEdge{read_id(e, "id", "edge"),
                                     read_id(e, "source", "edge"),
                                     read_id(e, "target", "edge"), read_data(e)});
  }
  return doc;
}

OrderedJson document_to_json(const GraphDocument& doc) {
  OrderedJson nodes = OrderedJson::array();
  for (const DocumentNode& n : doc.nodes) {
    OrderedJson entry = {{"id", n.id}};
    if (!n.data.is_null()) entry["data"] = OrderedJson(n.data);
    nodes.push_back(std::move(entry));
  }
  OrderedJson edges = OrderedJson::array();
  for (const DocumentEdge& e : doc.edges) {
    OrderedJson entry = {{"id", e.id}, {"source", e.source}, {"target", e.target}};
    if (!e.data.is_null()) entry["data"] = OrderedJson(e.data);
    edges.push_back(std::move(entry));
  }
  OrderedJson out = OrderedJson::object();
  out["directed"] = doc.directed;
  out["multigraph"] = doc.multigraph;
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  return out;
}

JsonGraph read_graph(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& err) {
    throw SchemaError(std::string("invalid JSON: ") + err.what());
  }
  return from_document(document_from_json(j));
}

JsonGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  return read_graph(in);
}

std::string write_graph(const JsonGraph& g) {
  return document_to_json(to_document(g)).dump() + "\n";
}

JsonGraph from_edge_list(std::string_view text, bool directed) {
  struct Line {
    index_type u, v;
    std::optional<double> w;
  };
  std::vector<Line> lines;
  index_type max_id = 0;
  bool any = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      const auto end = line.find_first_of(" \t");
      tokens.push_back(line.substr(0, end));
      line = end == std::string_view::npos ? std::string_view{} : trim(line.substr(end));
    }
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(line_no, "expected \"u v\" or \"u v w\"");
    }
    const auto parse_id = [&](std::string_view tok) {
      index_type value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "invalid node id \"" + std::string(tok) + "\"");
      }
      return value;
    };
    Line parsed{parse_id(tokens[0]), parse_id(tokens[1]), std::nullopt};
    if (tokens.size() == 3) {
      const std::string tok(tokens[2]);
      char* end = nullptr;
      const double w = std::strtod(tok.c_str(), &end);
      if (tok.empty() || end != tok.c_str() + tok.size() || !std::isfinite(w)) {
        throw ParseError(line_no, "invalid weight \"" + tok + "\"");
      }
      parsed.w = w;
    }
    max_id = std::max({max_id, parsed.u, parsed.v});
    any = true;
    lines.push_back(parsed);
  }

  JsonGraph g(GraphOptions{.directed = directed, .multigraph = true});
  if (any) {
    for (index_type i = 0; i <= max_id; ++i) g.add_node(Json());
  }
  for (const Line& l : lines) {
    Json payload;
    if (l.w) payload = Json{{"weight", *l.w}};
    g.add_edge(NodeIndex{l.u}, NodeIndex{l.v}, std::move(payload));
  }
  return g;
}

std::string escape_dot_label(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace stablegraph
