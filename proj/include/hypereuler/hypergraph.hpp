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
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hypereuler {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// Raised for malformed input: unknown identifiers, violated preconditions,
/// inputs a solver refuses (empty edges, disconnected input where required).
class HypergraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge description used when building a hypergraph from identifiers.
struct EdgeSpec {
  std::string id;
  std::vector<std::string> vertices;
};

/// A (vertex, edge) incidence pair.
struct Flag {
  VertexIndex vertex;
  EdgeIndex edge;
  friend bool operator==(const Flag&, const Flag&) = default;
  friend auto operator<=>(const Flag&, const Flag&) = default;
};

/// Finite hypergraph with named vertices and named edges.
///
/// Vertices and edges are addressed by dense indices in declaration order;
/// identifiers are kept alongside so that every derived object can be
/// reported in the caller's vocabulary. Parallel edges (equal incidence
/// sets, distinct identifiers) and singleton edges are ordinary edges.
/// Empty edges are representable because restriction operators produce
/// them, but the solvers reject them.
///
/// Values are immutable after construction.
class Hypergraph {
 public:
  /// Validating constructor from identifiers.
  ///
  /// Throws HypergraphError on an empty vertex set, duplicate vertex or
  /// edge identifiers, a vertex repeated inside one edge, or an edge that
  /// references an unknown vertex.
  static Hypergraph build(std::vector<std::string> vertices,
                          const std::vector<EdgeSpec>& edges) {
    Hypergraph h;
    if (vertices.empty()) throw HypergraphError("vertex set is empty");
    h.vertex_ids_ = std::move(vertices);
    for (VertexIndex v = 0; v < h.vertex_ids_.size(); ++v) {
      if (!h.vertex_lookup_.emplace(h.vertex_ids_[v], v).second) {
        throw HypergraphError("duplicate vertex identifier '" + h.vertex_ids_[v] + "'");
      }
    }
    for (const auto& spec : edges) {
      std::vector<VertexIndex> members;
      members.reserve(spec.vertices.size());
      for (const auto& name : spec.vertices) {
        auto it = h.vertex_lookup_.find(name);
        if (it == h.vertex_lookup_.end()) {
          throw HypergraphError("edge '" + spec.id + "' references unknown vertex '" + name + "'");
        }
        members.push_back(it->second);
      }
      h.add_edge(spec.id, std::move(members));
    }
    h.index_incidence();
    return h;
  }

  /// Index-based constructor for internal use by derived-hypergraph operations.
  static Hypergraph from_indices(std::vector<std::string> vertex_ids,
                                 std::vector<std::string> edge_ids,
                                 std::vector<std::vector<VertexIndex>> edges) {
    if (edge_ids.size() != edges.size()) throw HypergraphError("edge id/incidence count mismatch");
    Hypergraph h;
    if (vertex_ids.empty()) throw HypergraphError("vertex set is empty");
    h.vertex_ids_ = std::move(vertex_ids);
    for (VertexIndex v = 0; v < h.vertex_ids_.size(); ++v) {
      if (!h.vertex_lookup_.emplace(h.vertex_ids_[v], v).second) {
        throw HypergraphError("duplicate vertex identifier '" + h.vertex_ids_[v] + "'");
      }
    }
    for (EdgeIndex e = 0; e < edges.size(); ++e) {
      for (VertexIndex v : edges[e]) {
        if (v >= h.vertex_ids_.size()) throw HypergraphError("edge '" + edge_ids[e] + "' references unknown vertex");
      }
      h.add_edge(std::move(edge_ids[e]), std::move(edges[e]));
    }
    h.index_incidence();
    return h;
  }

  std::size_t order() const noexcept { return vertex_ids_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
  const std::string& edge_id(EdgeIndex e) const { return edge_ids_.at(e); }
  const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }
  const std::vector<std::string>& edge_ids() const noexcept { return edge_ids_; }

  /// Sorted vertex indices of edge `e`.
  std::span<const VertexIndex> edge(EdgeIndex e) const { return edges_.at(e); }
  /// Sorted indices of the edges containing `v`.
  std::span<const EdgeIndex> incident(VertexIndex v) const { return incidence_.at(v); }

  std::size_t degree(VertexIndex v) const { return incidence_.at(v).size(); }
  std::size_t edge_size(EdgeIndex e) const { return edges_.at(e).size(); }

  bool contains(EdgeIndex e, VertexIndex v) const {
    const auto& members = edges_.at(e);
    return std::binary_search(members.begin(), members.end(), v);
  }

  std::optional<VertexIndex> find_vertex(std::string_view id) const {
    auto it = vertex_lookup_.find(std::string(id));
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<EdgeIndex> find_edge(std::string_view id) const {
    auto it = edge_lookup_.find(std::string(id));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
  }

  VertexIndex vertex_index(std::string_view id) const {
    if (auto v = find_vertex(id)) return *v;
    throw HypergraphError("unknown vertex '" + std::string(id) + "'");
  }
  EdgeIndex edge_index(std::string_view id) const {
    if (auto e = find_edge(id)) return *e;
    throw HypergraphError("unknown edge '" + std::string(id) + "'");
  }

  bool has_empty_edge() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.empty(); });
  }

  std::size_t flag_count() const noexcept {
    std::size_t total = 0;
    for (const auto& e : edges_) total += e.size();
    return total;
  }

  /// All flags, grouped by edge in index order.
  std::vector<Flag> flags() const {
    std::vector<Flag> out;
    out.reserve(flag_count());
    for (EdgeIndex e = 0; e < edges_.size(); ++e) {
      for (VertexIndex v : edges_[e]) out.push_back({v, e});
    }
    return out;
  }

  std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(edges_.size());
    for (EdgeIndex e = 0; e < edges_.size(); ++e) {
      EdgeSpec spec{edge_ids_[e], {}};
      for (VertexIndex v : edges_[e]) spec.vertices.push_back(vertex_ids_[v]);
      out.push_back(std::move(spec));
    }
    return out;
  }

 private:
  Hypergraph() = default;

  void add_edge(std::string id, std::vector<VertexIndex> members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw HypergraphError("edge '" + id + "' lists a vertex twice");
    }
    if (!edge_lookup_.emplace(id, edges_.size()).second) {
      throw HypergraphError("duplicate edge identifier '" + id + "'");
    }
    edge_ids_.push_back(std::move(id));
    edges_.push_back(std::move(members));
  }

  void index_incidence() {
    incidence_.assign(vertex_ids_.size(), {});
    for (EdgeIndex e = 0; e < edges_.size(); ++e) {
      for (VertexIndex v : edges_[e]) incidence_[v].push_back(e);
    }
  }

  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<std::vector<VertexIndex>> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

/// Size of the intersection of two sorted index ranges.
inline std::size_t intersection_size(std::span<const VertexIndex> a, std::span<const VertexIndex> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

inline std::vector<VertexIndex> intersection(std::span<const VertexIndex> a, std::span<const VertexIndex> b) {
  std::vector<VertexIndex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct Stats {
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> edge_sizes;
  std::vector<VertexIndex> odd_vertices;
  std::size_t flag_count = 0;
  std::size_t rank = 0;    // max edge size
  std::size_t corank = 0;  // min edge size; 0 when there are no edges
  bool uniform = false;
  bool regular = false;
  bool linear = false;
};

inline Stats stats(const Hypergraph& h) {
  Stats s;
  for (VertexIndex v = 0; v < h.order(); ++v) {
    s.degrees.push_back(h.degree(v));
    if (h.degree(v) % 2 == 1) s.odd_vertices.push_back(v);
  }
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    s.edge_sizes.push_back(h.edge_size(e));
    s.flag_count += h.edge_size(e);
  }
  if (!s.edge_sizes.empty()) {
    auto [lo, hi] = std::minmax_element(s.edge_sizes.begin(), s.edge_sizes.end());
    s.corank = *lo;
    s.rank = *hi;
  }
  s.uniform = !s.edge_sizes.empty() && s.rank == s.corank;
  s.regular = std::adjacent_find(s.degrees.begin(), s.degrees.end(), std::not_equal_to<>()) == s.degrees.end();
  s.linear = true;
  for (EdgeIndex e = 0; e < h.size() && s.linear; ++e) {
    for (EdgeIndex f = e + 1; f < h.size(); ++f) {
      if (intersection_size(h.edge(e), h.edge(f)) > 1) {
        s.linear = false;
        break;
      }
    }
  }
  return s;
}

/// Hypersubgraph induced by an edge subset: the chosen edges on the union of
/// their vertex sets. An empty selection is rejected since a hypergraph
/// needs at least one vertex.
inline Hypergraph induced_by_edges(const Hypergraph& h, std::vector<EdgeIndex> chosen) {
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  if (chosen.empty()) throw HypergraphError("edge-induced hypersubgraph of an empty edge set");
  std::vector<bool> keep(h.order(), false);
  for (EdgeIndex e : chosen) {
    if (e >= h.size()) throw HypergraphError("unknown edge index");
    for (VertexIndex v : h.edge(e)) keep[v] = true;
  }
  std::vector<std::size_t> remap(h.order(), 0);
  std::vector<std::string> vertex_ids;
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (keep[v]) {
      remap[v] = vertex_ids.size();
      vertex_ids.push_back(h.vertex_id(v));
    }
  }
  std::vector<std::string> edge_ids;
  std::vector<std::vector<VertexIndex>> edges;
  for (EdgeIndex e : chosen) {
    edge_ids.push_back(h.edge_id(e));
    std::vector<VertexIndex> members;
    for (VertexIndex v : h.edge(e)) members.push_back(remap[v]);
    edges.push_back(std::move(members));
  }
  return Hypergraph::from_indices(std::move(vertex_ids), std::move(edge_ids), std::move(edges));
}

namespace detail {

inline Hypergraph restrict_impl(const Hypergraph& h, std::vector<VertexIndex> vertices,
                                std::vector<EdgeIndex> chosen, bool drop_empty) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  if (vertices.empty()) throw HypergraphError("restriction to an empty vertex set");
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> remap(h.order(), kAbsent);
  std::vector<std::string> vertex_ids;
  for (VertexIndex v : vertices) {
    if (v >= h.order()) throw HypergraphError("unknown vertex index");
    remap[v] = vertex_ids.size();
    vertex_ids.push_back(h.vertex_id(v));
  }
  std::vector<std::string> edge_ids;
  std::vector<std::vector<VertexIndex>> edges;
  for (EdgeIndex e : chosen) {
    if (e >= h.size()) throw HypergraphError("unknown edge index");
    std::vector<VertexIndex> members;
    for (VertexIndex v : h.edge(e)) {
      if (remap[v] != kAbsent) members.push_back(remap[v]);
    }
    if (drop_empty && members.empty()) continue;
    edge_ids.push_back(h.edge_id(e));
    edges.push_back(std::move(members));
  }
  return Hypergraph::from_indices(std::move(vertex_ids), std::move(edge_ids), std::move(edges));
}

inline std::vector<EdgeIndex> all_edges(const Hypergraph& h) {
  std::vector<EdgeIndex> out(h.size());
  for (EdgeIndex e = 0; e < h.size(); ++e) out[e] = e;
  return out;
}

}  // namespace detail

/// Subhypergraph induced by a vertex subset: every edge is intersected with
/// the subset and edges that become empty are deleted.
inline Hypergraph induced_by_vertices(const Hypergraph& h, std::vector<VertexIndex> vertices) {
  return detail::restrict_impl(h, std::move(vertices), detail::all_edges(h), true);
}

/// The hypergraph on `vertices` with edge set { e ∩ vertices : e ∈ chosen }.
/// Edges that become empty are kept.
inline Hypergraph restrict(const Hypergraph& h, std::vector<VertexIndex> vertices, std::vector<EdgeIndex> chosen) {
  return detail::restrict_impl(h, std::move(vertices), std::move(chosen), false);
}

/// H minus one edge; the vertex set is unchanged.
inline Hypergraph delete_edge(const Hypergraph& h, EdgeIndex removed) {
  std::vector<EdgeIndex> kept;
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    if (e != removed) kept.push_back(e);
  }
  std::vector<VertexIndex> all(h.order());
  for (VertexIndex v = 0; v < h.order(); ++v) all[v] = v;
  return restrict(h, std::move(all), std::move(kept));
}

/// The dual: vertices are the edges of `h`, and every vertex v of `h`
/// becomes the edge { e : v ∈ e } carrying v's identifier.
inline Hypergraph dual(const Hypergraph& h) {
  if (h.size() == 0) throw HypergraphError("dual of a hypergraph without edges");
  if (h.has_empty_edge()) throw HypergraphError("dual of a hypergraph with an empty edge");
  std::vector<std::vector<VertexIndex>> edges;
  edges.reserve(h.order());
  for (VertexIndex v = 0; v < h.order(); ++v) {
    auto inc = h.incident(v);
    edges.emplace_back(inc.begin(), inc.end());
  }
  return Hypergraph::from_indices(h.edge_ids(), h.vertex_ids(), std::move(edges));
}

/// Sorted list of sorted identifier lists; equal for hypergraphs with the
/// same labelled incidence structure regardless of edge names and order.
inline std::vector<std::vector<std::string>> canonical_form(const Hypergraph& h) {
  std::vector<std::vector<std::string>> out;
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    std::vector<std::string> names;
    for (VertexIndex v : h.edge(e)) names.push_back(h.vertex_id(v));
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Throws unless every edge is non-empty; solvers call this on entry.
inline void require_no_empty_edges(const Hypergraph& h) {
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    if (h.edge_size(e) == 0) throw HypergraphError("edge '" + h.edge_id(e) + "' is empty");
  }
}

}  // namespace hypereuler
