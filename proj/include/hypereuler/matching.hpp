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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hypereuler/derived.hpp"
#include "hypereuler/graph.hpp"
#include "hypereuler/hypergraph.hpp"

namespace hypereuler::matching {

struct Matching {
  std::vector<std::size_t> mate;  // kNone when unmatched
  std::size_t size = 0;

  bool perfect() const noexcept { return 2 * size == mate.size(); }
};

namespace detail {

// Edmonds' blossom algorithm, BFS formulation with explicit base array.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.node_count()), mate_(n_, kNone), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  Matching run() {
    for (std::size_t root = 0; root < n_; ++root) {
      if (mate_[root] != kNone) continue;
      std::size_t end = find_augmenting_path(root);
      while (end != kNone) {
        std::size_t pv = parent_[end];
        std::size_t ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    Matching m;
    m.mate = mate_;
    for (std::size_t u = 0; u < n_; ++u) {
      if (mate_[u] != kNone && u < mate_[u]) ++m.size;
    }
    return m;
  }

 private:
  std::size_t lowest_common_ancestor(std::size_t a, std::size_t b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::size_t find_augmenting_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t v = queue[head];
      for (const auto& inc : g_.adjacent(v)) {
        std::size_t to = inc.neighbour;
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          std::size_t current = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, current, to);
          mark_path(to, current, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = current;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          used_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> mate_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace detail

/// Maximum-cardinality matching of a loopless graph (Edmonds).
inline Matching max_matching(const Graph& g) { return detail::Blossom(g).run(); }

/// Graph with loops: a loop-free link graph plus a loop count per vertex.
/// Each loop adds two to its vertex's degree.
struct LoopyGraph {
  std::size_t node_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> links;
  std::vector<std::size_t> loops;

  std::size_t link_degree(std::size_t u) const {
    std::size_t d = 0;
    for (const auto& [a, b] : links) d += (a == u) + (b == u);
    return d;
  }
  std::size_t degree(std::size_t u) const { return link_degree(u) + 2 * loops.at(u); }
};

/// Tutte-style gadget reducing an f-factor of a LoopyGraph to a perfect
/// matching. Per original vertex v the gadget holds parts S_v, T_v, U_v
/// with |S_v| = deg(v) − f(v), |T_v| = deg(v) − 2ℓ(v) and |U_v| = 2ℓ(v);
/// S_v is joined completely to T_v ∪ U_v, U_v carries the pairs
/// (0,1), (2,3), …, and every link uv contributes one edge between a
/// T_u slot and a T_v slot. Slots are consumed in link order.
struct GadgetGraph {
  struct Parts {
    std::size_t s_begin = 0, s_count = 0;
    std::size_t t_begin = 0, t_count = 0;
    std::size_t u_begin = 0, u_count = 0;
  };
  Graph graph;
  std::vector<Parts> parts;
  std::vector<std::size_t> owner;         // original vertex of each gadget node
  std::vector<std::size_t> link_edge;     // gadget edge of each link
  std::vector<std::size_t> link_of_edge;  // link index of each gadget edge, kNone otherwise
  std::vector<std::size_t> loop_owner;    // original vertex of each U-pair edge, kNone otherwise
};

inline GadgetGraph build_gadget(const LoopyGraph& x, std::span<const std::size_t> f) {
  if (f.size() != x.node_count || x.loops.size() != x.node_count) {
    throw HypergraphError("f-factor input sizes do not match the graph");
  }
  GadgetGraph out;
  out.parts.resize(x.node_count);
  std::vector<std::size_t> link_deg(x.node_count, 0);
  for (const auto& [a, b] : x.links) {
    if (a == b || a >= x.node_count || b >= x.node_count) throw HypergraphError("invalid link");
    ++link_deg[a];
    ++link_deg[b];
  }
  for (std::size_t v = 0; v < x.node_count; ++v) {
    std::size_t deg = link_deg[v] + 2 * x.loops[v];
    if (f[v] > deg) throw HypergraphError("f(v) exceeds deg(v)");
  }
  std::size_t next = 0;
  for (std::size_t v = 0; v < x.node_count; ++v) {
    auto& p = out.parts[v];
    std::size_t deg = link_deg[v] + 2 * x.loops[v];
    p.s_begin = next;
    p.s_count = deg - f[v];
    next += p.s_count;
    p.t_begin = next;
    p.t_count = link_deg[v];
    next += p.t_count;
    p.u_begin = next;
    p.u_count = 2 * x.loops[v];
    next += p.u_count;
  }
  out.graph = Graph(next);
  out.owner.assign(next, kNone);
  auto record = [&](std::size_t id, std::size_t link, std::size_t loop) {
    out.link_of_edge.resize(id + 1, kNone);
    out.loop_owner.resize(id + 1, kNone);
    out.link_of_edge[id] = link;
    out.loop_owner[id] = loop;
  };
  for (std::size_t v = 0; v < x.node_count; ++v) {
    const auto& p = out.parts[v];
    for (std::size_t i = p.s_begin; i < p.u_begin + p.u_count; ++i) out.owner[i] = v;
    for (std::size_t s = 0; s < p.s_count; ++s) {
      for (std::size_t t = 0; t < p.t_count; ++t) record(out.graph.add_edge(p.s_begin + s, p.t_begin + t), kNone, kNone);
      for (std::size_t u = 0; u < p.u_count; ++u) record(out.graph.add_edge(p.s_begin + s, p.u_begin + u), kNone, kNone);
    }
    for (std::size_t u = 0; u + 1 < p.u_count; u += 2) {
      record(out.graph.add_edge(p.u_begin + u, p.u_begin + u + 1), kNone, v);
    }
  }
  std::vector<std::size_t> slot(x.node_count, 0);
  out.link_edge.resize(x.links.size());
  for (std::size_t l = 0; l < x.links.size(); ++l) {
    auto [a, b] = x.links[l];
    std::size_t ta = out.parts[a].t_begin + slot[a]++;
    std::size_t tb = out.parts[b].t_begin + slot[b]++;
    std::size_t id = out.graph.add_edge(ta, tb);
    record(id, l, kNone);
    out.link_edge[l] = id;
  }
  return out;
}

struct FFactor {
  std::vector<bool> links;           // chosen links
  std::vector<std::size_t> loops;    // chosen loops per vertex
};

/// Spanning subgraph with deg(v) = f(v) for every v (loops count twice),
/// or nullopt when the gadget has no perfect matching.
inline std::optional<FFactor> f_factor(const LoopyGraph& x, std::span<const std::size_t> f) {
  GadgetGraph gadget = build_gadget(x, f);
  Matching m = max_matching(gadget.graph);
  if (!m.perfect()) return std::nullopt;
  FFactor out;
  out.links.assign(x.links.size(), false);
  out.loops.assign(x.node_count, 0);
  for (std::size_t id = 0; id < gadget.graph.edge_count(); ++id) {
    auto [a, b] = gadget.graph.edge(id);
    if (m.mate[a] != b) continue;
    if (gadget.link_of_edge[id] != kNone) out.links[gadget.link_of_edge[id]] = true;
    if (gadget.loop_owner[id] != kNone) ++out.loops[gadget.loop_owner[id]];
  }
  return out;
}

/// Subgraph of the incidence graph that is 2-regular on e-vertices and even
/// on v-vertices. `selected[i]` refers to incidence-graph edge (flag) i.
struct EfFactor {
  std::vector<bool> selected;
  std::vector<std::size_t> degree;  // per incidence-graph node
};

inline bool is_ef_factor(const derived::IncidenceGraph& g, const std::vector<bool>& selected) {
  if (selected.size() != g.graph().edge_count()) return false;
  std::vector<std::size_t> degree(g.graph().node_count(), 0);
  for (std::size_t id = 0; id < selected.size(); ++id) {
    if (!selected[id]) continue;
    ++degree[g.graph().edge(id).first];
    ++degree[g.graph().edge(id).second];
  }
  for (std::size_t node = 0; node < degree.size(); ++node) {
    if (g.is_e_vertex(node) && degree[node] != 2) return false;
    if (g.is_v_vertex(node) && degree[node] % 2 != 0) return false;
  }
  return true;
}

/// EF-factor through the f-factor reduction: ⌊deg(v)/2⌋ loops on every
/// v-vertex, f(e) = 2 and f(v) = 2⌊deg(v)/2⌋; the loops of the resulting
/// f-factor are discarded.
inline std::optional<EfFactor> ef_factor(const derived::IncidenceGraph& g) {
  const Graph& base = g.graph();
  for (std::size_t node = 0; node < base.node_count(); ++node) {
    if (g.is_e_vertex(node) && base.degree(node) < 2) return std::nullopt;
  }
  LoopyGraph x;
  x.node_count = base.node_count();
  x.links = base.edges();
  x.loops.assign(x.node_count, 0);
  std::vector<std::size_t> f(x.node_count, 0);
  for (std::size_t node = 0; node < x.node_count; ++node) {
    if (g.is_e_vertex(node)) {
      f[node] = 2;
    } else {
      x.loops[node] = base.degree(node) / 2;
      f[node] = 2 * x.loops[node];
    }
  }
  auto factor = f_factor(x, f);
  if (!factor) return std::nullopt;
  EfFactor out;
  out.selected = factor->links;
  out.degree.assign(x.node_count, 0);
  for (std::size_t id = 0; id < out.selected.size(); ++id) {
    if (!out.selected[id]) continue;
    ++out.degree[base.edge(id).first];
    ++out.degree[base.edge(id).second];
  }
  return out;
}

}  // namespace hypereuler::matching
