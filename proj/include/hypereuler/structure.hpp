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
#include <numeric>
#include <vector>

#include "hypereuler/derived.hpp"
#include "hypereuler/graph.hpp"
#include "hypereuler/hypergraph.hpp"

namespace hypereuler::structure {

/// A connected component: its vertices and the edges among them. Isolated
/// vertices form components without edges.
struct Component {
  std::vector<VertexIndex> vertices;
  std::vector<EdgeIndex> edges;
};

/// Connected components, computed on the incidence graph.
inline std::vector<Component> components(const Hypergraph& h) {
  require_no_empty_edges(h);
  derived::IncidenceGraph g(h);
  std::size_t count = 0;
  auto label = component_labels(g.graph(), {}, {}, &count);
  std::vector<Component> out(count);
  for (VertexIndex v = 0; v < h.order(); ++v) out[label[g.v_node(v)]].vertices.push_back(v);
  for (EdgeIndex e = 0; e < h.size(); ++e) out[label[g.e_node(e)]].edges.push_back(e);
  return out;
}

inline std::size_t component_count(const Hypergraph& h) {
  require_no_empty_edges(h);
  derived::IncidenceGraph g(h);
  std::size_t count = 0;
  component_labels(g.graph(), {}, {}, &count);
  return count;
}

inline bool is_connected(const Hypergraph& h) { return component_count(h) == 1; }

/// Number of components of H − e (vertex set unchanged).
inline std::size_t component_count_without(const Hypergraph& h, EdgeIndex removed) {
  require_no_empty_edges(h);
  derived::IncidenceGraph g(h);
  std::vector<bool> alive(g.graph().node_count(), true);
  alive[g.e_node(removed)] = false;
  std::size_t count = 0;
  component_labels(g.graph(), alive, {}, &count);
  return count;
}

struct CutEdgeReport {
  EdgeIndex edge;
  std::size_t components_before;  // cc(H)
  std::size_t components_after;   // cc(H − e)
  bool strong;                    // cc(H − e) = cc(H) + |e| − 1
};

/// Every edge whose deletion increases the number of components.
inline std::vector<CutEdgeReport> cut_edges(const Hypergraph& h) {
  const std::size_t before = component_count(h);
  std::vector<CutEdgeReport> out;
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    std::size_t after = component_count_without(h, e);
    if (after > before) out.push_back({e, before, after, after == before + h.edge_size(e) - 1});
  }
  return out;
}

struct Block {
  std::vector<EdgeIndex> edges;              // empty for an isolated-vertex block
  std::vector<VertexIndex> vertices;
  std::vector<VertexIndex> separating;       // separating vertices of H inside the block
};

/// Separating vertices: v-vertices that are cut vertices of the incidence graph.
inline std::vector<VertexIndex> separating_vertices(const Hypergraph& h) {
  require_no_empty_edges(h);
  derived::IncidenceGraph g(h);
  auto bic = biconnected_components(g.graph());
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (bic.articulation[g.v_node(v)]) out.push_back(v);
  }
  return out;
}

/// Blocks of H. Biconnected components of the incidence graph that share an
/// e-vertex are merged, since an edge cannot be split between blocks; each
/// merged class yields one block. Isolated vertices are blocks on their own.
/// Blocks are ordered by their lowest edge index, isolated-vertex blocks last.
inline std::vector<Block> blocks(const Hypergraph& h) {
  require_no_empty_edges(h);
  derived::IncidenceGraph g(h);
  auto bic = biconnected_components(g.graph());

  std::vector<std::size_t> parent(h.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // First e-vertex seen per biconnected component.
  std::vector<std::size_t> representative(bic.component_count, kNone);
  for (std::size_t fe = 0; fe < g.graph().edge_count(); ++fe) {
    EdgeIndex e = g.flag(fe).edge;
    std::size_t c = bic.edge_component[fe];
    if (representative[c] == kNone) {
      representative[c] = e;
    } else {
      std::size_t a = find(representative[c]);
      std::size_t b = find(e);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::vector<bool> separating(h.order(), false);
  for (VertexIndex v = 0; v < h.order(); ++v) separating[v] = bic.articulation[g.v_node(v)];

  std::vector<std::size_t> slot(h.size(), kNone);
  std::vector<Block> out;
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    std::size_t root = find(e);
    if (slot[root] == kNone) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].edges.push_back(e);
  }
  for (auto& block : out) {
    std::vector<bool> seen(h.order(), false);
    for (EdgeIndex e : block.edges) {
      for (VertexIndex v : h.edge(e)) seen[v] = true;
    }
    for (VertexIndex v = 0; v < h.order(); ++v) {
      if (!seen[v]) continue;
      block.vertices.push_back(v);
      if (separating[v]) block.separating.push_back(v);
    }
  }
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == 0) out.push_back({{}, {v}, {}});
  }
  return out;
}

}  // namespace hypereuler::structure
