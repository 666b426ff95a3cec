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
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hypereuler {

/// Undirected multigraph on dense node indices. Edges are stored in
/// insertion order and addressed by index; adjacency lists record
/// (neighbour, edge index) pairs in insertion order, which makes every
/// traversal below deterministic.
class Graph {
 public:
  struct Incidence {
    std::size_t neighbour;
    std::size_t edge;
  };

  Graph() = default;
  explicit Graph(std::size_t nodes) : adjacency_(nodes) {}

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::size_t add_node() {
    adjacency_.emplace_back();
    return adjacency_.size() - 1;
  }

  std::size_t add_edge(std::size_t u, std::size_t v) {
    if (u >= node_count() || v >= node_count()) throw std::out_of_range("graph edge endpoint");
    if (u == v) throw std::invalid_argument("graph loops are not supported");
    std::size_t id = edges_.size();
    edges_.emplace_back(u, v);
    adjacency_[u].push_back({v, id});
    adjacency_[v].push_back({u, id});
    return id;
  }

  const std::pair<std::size_t, std::size_t>& edge(std::size_t id) const { return edges_.at(id); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  std::span<const Incidence> adjacent(std::size_t u) const { return adjacency_.at(u); }
  std::size_t degree(std::size_t u) const { return adjacency_.at(u).size(); }

  std::size_t other_end(std::size_t edge_id, std::size_t u) const {
    const auto& [a, b] = edges_.at(edge_id);
    return a == u ? b : a;
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    for (const auto& inc : adjacency_.at(u)) {
      if (inc.neighbour == v) return true;
    }
    return false;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// Component label per node, restricted to nodes with `alive[u]` and edges
/// with `edge_alive[e]` (empty spans mean "everything"). Dead nodes get kNone.
/// Labels are assigned in order of the lowest node of each component.
inline std::vector<std::size_t> component_labels(const Graph& g, const std::vector<bool>& alive = {},
                                                 const std::vector<bool>& edge_alive = {},
                                                 std::size_t* count = nullptr) {
  std::vector<std::size_t> label(g.node_count(), kNone);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    if (label[s] != kNone || (!alive.empty() && !alive[s])) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& inc : g.adjacent(u)) {
        if (!edge_alive.empty() && !edge_alive[inc.edge]) continue;
        if (!alive.empty() && !alive[inc.neighbour]) continue;
        if (label[inc.neighbour] == kNone) {
          label[inc.neighbour] = next;
          stack.push_back(inc.neighbour);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return label;
}

/// Two-colouring when the graph is bipartite.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> colour(g.node_count(), -1);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (const auto& inc : g.adjacent(u)) {
        if (colour[inc.neighbour] == -1) {
          colour[inc.neighbour] = 1 - colour[u];
          queue.push_back(inc.neighbour);
        } else if (colour[inc.neighbour] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

struct Biconnectivity {
  /// Biconnected component of every edge.
  std::vector<std::size_t> edge_component;
  std::size_t component_count = 0;
  std::vector<bool> articulation;
};

/// Hopcroft–Tarjan biconnected components, iterative.
inline Biconnectivity biconnected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  Biconnectivity out;
  out.edge_component.assign(g.edge_count(), kNone);
  out.articulation.assign(n, false);
  std::vector<std::size_t> disc(n, kNone), low(n, 0), parent_edge(n, kNone), next_child(n, 0);
  std::vector<std::size_t> edge_stack;
  std::size_t timer = 0;

  struct Frame {
    std::size_t node;
  };
  std::vector<Frame> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != kNone) continue;
    disc[root] = low[root] = timer++;
    std::size_t root_children = 0;
    stack.push_back({root});
    while (!stack.empty()) {
      std::size_t u = stack.back().node;
      auto adj = g.adjacent(u);
      if (next_child[u] < adj.size()) {
        const auto inc = adj[next_child[u]++];
        if (inc.edge == parent_edge[u]) continue;
        std::size_t w = inc.neighbour;
        if (disc[w] == kNone) {
          edge_stack.push_back(inc.edge);
          parent_edge[w] = inc.edge;
          disc[w] = low[w] = timer++;
          if (u == root) ++root_children;
          stack.push_back({w});
        } else if (disc[w] < disc[u]) {
          edge_stack.push_back(inc.edge);
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      if (stack.empty()) break;
      std::size_t p = stack.back().node;
      low[p] = std::min(low[p], low[u]);
      if (low[u] >= disc[p]) {
        if (p != root) out.articulation[p] = true;
        std::size_t id = out.component_count++;
        while (true) {
          std::size_t e = edge_stack.back();
          edge_stack.pop_back();
          out.edge_component[e] = id;
          if (e == parent_edge[u]) break;
        }
      }
    }
    if (root_children > 1) out.articulation[root] = true;
  }
  return out;
}

/// Euler circuit of the subgraph formed by edges with `usable[e]`, starting
/// at `start`, by Hierholzer's algorithm. Every usable edge must lie in the
/// component of `start` and every node must have even usable degree.
/// Returns the node sequence (first == last) and the edge sequence.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> euler_circuit(
    const Graph& g, const std::vector<bool>& usable, std::size_t start) {
  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> cursor(g.node_count(), 0);
  // (node, edge used to arrive)
  std::vector<std::pair<std::size_t, std::size_t>> stack{{start, kNone}};
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
  while (!stack.empty()) {
    std::size_t u = stack.back().first;
    auto adj = g.adjacent(u);
    bool advanced = false;
    while (cursor[u] < adj.size()) {
      const auto inc = adj[cursor[u]++];
      if (!usable[inc.edge] || used[inc.edge]) continue;
      used[inc.edge] = true;
      stack.push_back({inc.neighbour, inc.edge});
      advanced = true;
      break;
    }
    if (!advanced) {
      nodes.push_back(u);
      if (stack.back().second != kNone) edges.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(nodes.begin(), nodes.end());
  std::reverse(edges.begin(), edges.end());
  return {std::move(nodes), std::move(edges)};
}

/// Decomposes the usable edges of an even graph into edge-disjoint cycles
/// (each a closed node sequence with distinct internal nodes). Cycles are
/// peeled from the lowest node carrying a usable edge.
inline std::vector<std::vector<std::size_t>> cycle_decomposition(const Graph& g, const std::vector<bool>& usable) {
  std::vector<bool> left(usable.begin(), usable.end());
  std::vector<std::size_t> remaining(g.node_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (left[e]) {
      ++remaining[g.edge(e).first];
      ++remaining[g.edge(e).second];
    }
  }
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    if (remaining[u] % 2 != 0) throw std::invalid_argument("cycle decomposition of a non-even graph");
  }
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> position(g.node_count(), kNone);
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    while (remaining[s] > 0) {
      // Walk unused edges until a node repeats, then cut off that cycle.
      std::vector<std::size_t> path{s};
      std::vector<std::size_t> path_edges;
      position[s] = 0;
      std::size_t u = s;
      while (true) {
        std::size_t chosen = kNone;
        for (const auto& inc : g.adjacent(u)) {
          if (left[inc.edge] && (path_edges.empty() || inc.edge != path_edges.back())) {
            chosen = inc.edge;
            break;
          }
        }
        std::size_t w = g.other_end(chosen, u);
        left[chosen] = false;
        --remaining[u];
        --remaining[w];
        path_edges.push_back(chosen);
        if (position[w] != kNone) {
          std::size_t from = position[w];
          std::vector<std::size_t> cycle(path.begin() + static_cast<std::ptrdiff_t>(from), path.end());
          cycle.push_back(w);
          for (std::size_t i = from + 1; i < path.size(); ++i) position[path[i]] = kNone;
          path.resize(from + 1);
          path_edges.resize(from);
          cycles.push_back(std::move(cycle));
          if (path.size() == 1) {
            position[s] = kNone;
            break;
          }
          u = w;
          continue;
        }
        position[w] = path.size();
        path.push_back(w);
        u = w;
      }
    }
  }
  return cycles;
}

}  // namespace hypereuler
