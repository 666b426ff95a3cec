// Copyright 2026 The hypereuler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hypereuler/derived.hpp"
#include "hypereuler/graph.hpp"
#include "hypereuler/hypergraph.hpp"

// Text format:
//
//   hypergraph <name>        (or: graph <name>, every edge of size 2)
//   vertices v1 v2 ...
//   edge <id>: v1 v2 ...
//
// '#' starts a comment; blank lines are skipped.

namespace hypereuler::io {

class ParseError : public HypergraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : HypergraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class DocumentKind { kHypergraph, kGraph };

struct Document {
  DocumentKind kind = DocumentKind::kHypergraph;
  std::string name;
  Hypergraph hypergraph;
};

namespace detail {

inline std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace detail

inline Document parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  int stage = 0;  // 0 header, 1 vertices, 2 edges
  DocumentKind kind = DocumentKind::kHypergraph;
  std::string name;
  std::vector<std::string> vertices;
  std::unordered_map<std::string, std::size_t> vertex_line;
  std::vector<EdgeSpec> edges;
  std::unordered_set<std::string> edge_ids;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = detail::tokens(line);
    if (toks.empty()) continue;
    if (stage == 0) {
      if (toks[0] != "hypergraph" && toks[0] != "graph") {
        throw ParseError(line_no, "expected 'hypergraph <name>' or 'graph <name>'");
      }
      if (toks.size() != 2) throw ParseError(line_no, "header takes exactly one name");
      kind = toks[0] == "graph" ? DocumentKind::kGraph : DocumentKind::kHypergraph;
      name = toks[1];
      stage = 1;
      continue;
    }
    if (stage == 1) {
      if (toks[0] != "vertices") throw ParseError(line_no, "expected 'vertices ...'");
      if (toks.size() < 2) throw ParseError(line_no, "vertex set is empty");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!vertex_line.emplace(toks[i], line_no).second) {
          throw ParseError(line_no, "duplicate vertex identifier '" + toks[i] + "'");
        }
        vertices.push_back(toks[i]);
      }
      stage = 2;
      continue;
    }
    if (toks[0] != "edge") throw ParseError(line_no, "expected 'edge <id>: ...'");
    // The id may be glued to the colon ("e1:") or separated from it ("e1 :").
    std::string rest(line.substr(line.find("edge") + 4));
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "missing ':' after edge identifier");
    auto id_tokens = detail::tokens(rest.substr(0, colon));
    if (id_tokens.size() != 1) throw ParseError(line_no, "edge needs exactly one identifier");
    const std::string& id = id_tokens[0];
    if (!edge_ids.insert(id).second) throw ParseError(line_no, "duplicate edge identifier '" + id + "'");
    EdgeSpec spec{id, detail::tokens(rest.substr(colon + 1))};
    std::unordered_set<std::string> seen;
    for (const auto& v : spec.vertices) {
      if (!vertex_line.contains(v)) throw ParseError(line_no, "edge '" + id + "' references unknown vertex '" + v + "'");
      if (!seen.insert(v).second) throw ParseError(line_no, "vertex '" + v + "' repeated in edge '" + id + "'");
    }
    if (kind == DocumentKind::kGraph && spec.vertices.size() != 2) {
      throw ParseError(line_no, "graph edge '" + id + "' must have exactly two ends");
    }
    edges.push_back(std::move(spec));
  }
  if (stage == 0) throw ParseError(line_no + 1, "missing header");
  if (stage == 1) throw ParseError(line_no + 1, "missing 'vertices' line");
  return Document{kind, std::move(name), Hypergraph::build(std::move(vertices), edges)};
}

inline Document read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HypergraphError("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse(text);
}

/// Emits the text format; vertex and edge order follow the indices.
inline std::string emit(const Hypergraph& h, const std::string& name, DocumentKind kind = DocumentKind::kHypergraph) {
  std::ostringstream out;
  out << (kind == DocumentKind::kGraph ? "graph " : "hypergraph ") << name << "\nvertices";
  for (const auto& v : h.vertex_ids()) out << ' ' << v;
  out << '\n';
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    out << "edge " << h.edge_id(e) << ':';
    for (VertexIndex v : h.edge(e)) out << ' ' << h.vertex_id(v);
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Incidence graph in DOT. Nodes are "v:<id>" (ellipse, side=v) and
/// "e:<id>" (box, side=e).
inline std::string incidence_dot(const Hypergraph& h, const std::string& name) {
  std::ostringstream out;
  out << "graph " << detail::quoted(name) << " {\n";
  for (const auto& v : h.vertex_ids()) {
    out << "  " << detail::quoted("v:" + v) << " [label=" << detail::quoted(v) << ", shape=ellipse, side=v];\n";
  }
  for (const auto& e : h.edge_ids()) {
    out << "  " << detail::quoted("e:" + e) << " [label=" << detail::quoted(e)
        << ", shape=box, style=filled, fillcolor=lightgrey, side=e];\n";
  }
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    for (VertexIndex v : h.edge(e)) {
      out << "  " << detail::quoted("v:" + h.vertex_id(v)) << " -- " << detail::quoted("e:" + h.edge_id(e)) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

/// Intersection graph in DOT; every node is an edge of h (side=e) and each
/// line carries the intersection size.
inline std::string intersection_dot(const Hypergraph& h, const std::string& name, derived::IntersectionMode mode,
                                    std::size_t ell = 1) {
  Graph g = derived::intersection_graph(h, mode, ell);
  std::ostringstream out;
  out << "graph " << detail::quoted(name) << " {\n";
  for (const auto& e : h.edge_ids()) {
    out << "  " << detail::quoted("e:" + e) << " [label=" << detail::quoted(e) << ", shape=box, side=e];\n";
  }
  for (const auto& [a, b] : g.edges()) {
    out << "  " << detail::quoted("e:" + h.edge_id(a)) << " -- " << detail::quoted("e:" + h.edge_id(b))
        << " [label=\"" << intersection_size(h.edge(a), h.edge(b)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hypereuler::io
