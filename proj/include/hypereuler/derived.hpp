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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypereuler/graph.hpp"
#include "hypereuler/hypergraph.hpp"

namespace hypereuler::derived {

/// Bipartite incidence graph. Nodes [0, order) are v-vertices in vertex
/// index order, nodes [order, order + size) are e-vertices in edge index
/// order. Graph edge i is flag i of `Hypergraph::flags()`.
class IncidenceGraph {
 public:
  explicit IncidenceGraph(const Hypergraph& h) : order_(h.order()), size_(h.size()), graph_(h.order() + h.size()) {
    labels_.reserve(order_ + size_);
    for (const auto& id : h.vertex_ids()) labels_.push_back(id);
    for (const auto& id : h.edge_ids()) labels_.push_back(id);
    edge_offset_.push_back(0);
    for (EdgeIndex e = 0; e < size_; ++e) {
      for (VertexIndex v : h.edge(e)) {
        graph_.add_edge(v, order_ + e);
        flags_.push_back({v, e});
      }
      edge_offset_.push_back(flags_.size());
    }
  }

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return order_; }  // number of v-vertices
  std::size_t size() const noexcept { return size_; }    // number of e-vertices

  bool is_v_vertex(std::size_t node) const noexcept { return node < order_; }
  bool is_e_vertex(std::size_t node) const noexcept { return node >= order_ && node < order_ + size_; }
  std::size_t v_node(VertexIndex v) const noexcept { return v; }
  std::size_t e_node(EdgeIndex e) const noexcept { return order_ + e; }
  VertexIndex vertex_of(std::size_t node) const noexcept { return node; }
  EdgeIndex edge_of(std::size_t node) const noexcept { return node - order_; }

  /// Identifier of the hypergraph vertex or edge behind a node.
  const std::string& label(std::size_t node) const { return labels_.at(node); }
  const Flag& flag(std::size_t graph_edge) const { return flags_.at(graph_edge); }
  const std::vector<Flag>& flags() const noexcept { return flags_; }

  /// Graph edge carrying flag (v, e), if v ∈ e.
  std::optional<std::size_t> flag_index(VertexIndex v, EdgeIndex e) const {
    auto first = flags_.begin() + static_cast<std::ptrdiff_t>(edge_offset_.at(e));
    auto last = flags_.begin() + static_cast<std::ptrdiff_t>(edge_offset_.at(e + 1));
    auto it = std::lower_bound(first, last, Flag{v, e},
                               [](const Flag& a, const Flag& b) { return a.vertex < b.vertex; });
    if (it == last || it->vertex != v) return std::nullopt;
    return static_cast<std::size_t>(it - flags_.begin());
  }

 private:
  std::size_t order_;
  std::size_t size_;
  Graph graph_;
  std::vector<std::string> labels_;
  std::vector<Flag> flags_;
  std::vector<std::size_t> edge_offset_;
};

inline IncidenceGraph incidence_graph(const Hypergraph& h) { return IncidenceGraph(h); }

enum class IntersectionMode {
  kAny,      // |e ∩ f| ≥ 1
  kExactly,  // |e ∩ f| = ℓ
  kAtLeast,  // |e ∩ f| ≥ ℓ
};

/// Intersection graph on the edge set; node i is edge i.
inline Graph intersection_graph(const Hypergraph& h, IntersectionMode mode, std::size_t ell = 1) {
  if (mode != IntersectionMode::kAny && ell == 0) {
    throw HypergraphError("intersection threshold must be positive");
  }
  Graph g(h.size());
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    for (EdgeIndex f = e + 1; f < h.size(); ++f) {
      std::size_t common = intersection_size(h.edge(e), h.edge(f));
      bool adjacent = false;
      switch (mode) {
        case IntersectionMode::kAny:
          adjacent = common >= 1;
          break;
        case IntersectionMode::kExactly:
          adjacent = common == ell;
          break;
        case IntersectionMode::kAtLeast:
          adjacent = common >= ell;
          break;
      }
      if (adjacent) g.add_edge(e, f);
    }
  }
  return g;
}

/// Digraph on the edge set with an arc e → f whenever f has exactly one
/// vertex outside e and the two edges share at least three vertices.
struct D3Digraph {
  std::size_t node_count = 0;
  std::vector<std::pair<EdgeIndex, EdgeIndex>> arcs;
  std::vector<std::vector<EdgeIndex>> out;
  std::vector<std::vector<EdgeIndex>> in;

  bool has_arc(EdgeIndex from, EdgeIndex to) const {
    for (EdgeIndex w : out.at(from)) {
      if (w == to) return true;
    }
    return false;
  }
};

inline D3Digraph d3_digraph(const Hypergraph& h) {
  D3Digraph d;
  d.node_count = h.size();
  d.out.assign(h.size(), {});
  d.in.assign(h.size(), {});
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    for (EdgeIndex f = 0; f < h.size(); ++f) {
      if (e == f) continue;
      std::size_t common = intersection_size(h.edge(e), h.edge(f));
      if (common >= 3 && h.edge_size(f) - common == 1) {
        d.arcs.emplace_back(e, f);
        d.out[e].push_back(f);
        d.in[f].push_back(e);
      }
    }
  }
  return d;
}

}  // namespace hypereuler::derived
