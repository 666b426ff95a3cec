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
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypereuler/derived.hpp"
#include "hypereuler/graph.hpp"
#include "hypereuler/hypergraph.hpp"
#include "hypereuler/matching.hpp"
#include "hypereuler/structure.hpp"
#include "hypereuler/trail.hpp"

namespace hypereuler::euler {

namespace detail {

// Converts an alternating incidence-graph node sequence that starts at a
// v-vertex into a hypergraph trail.
inline Trail trail_from_nodes(const derived::IncidenceGraph& g, std::span<const std::size_t> nodes) {
  Trail t;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i % 2 == 0) {
      t.anchors.push_back(g.vertex_of(nodes[i]));
    } else {
      t.edges.push_back(g.edge_of(nodes[i]));
    }
  }
  return t;
}

// Rotates a closed incidence-graph cycle (first == last) to start at a v-vertex.
inline std::vector<std::size_t> start_at_v_vertex(const derived::IncidenceGraph& g, std::vector<std::size_t> cycle) {
  if (!cycle.empty() && g.is_e_vertex(cycle.front())) {
    cycle.pop_back();
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    cycle.push_back(cycle.front());
  }
  return cycle;
}

inline bool all_even(const Hypergraph& h) {
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (h.degree(v) % 2 != 0) return false;
  }
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    if (h.edge_size(e) % 2 != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Euler family read off an EF-factor: one closed trail per non-trivial
/// component, each an Euler circuit started at the component's lowest
/// v-vertex.
inline EulerFamily family_from_factor(const derived::IncidenceGraph& g, const std::vector<bool>& selected) {
  std::size_t count = 0;
  auto label = component_labels(g.graph(), {}, selected, &count);
  std::vector<std::size_t> start(count, kNone);
  for (std::size_t id = 0; id < selected.size(); ++id) {
    if (!selected[id]) continue;
    std::size_t v = g.graph().edge(id).first;  // flags are stored (v-node, e-node)
    std::size_t c = label[v];
    if (start[c] == kNone || v < start[c]) start[c] = v;
  }
  EulerFamily family;
  for (std::size_t c = 0; c < count; ++c) {
    if (start[c] == kNone) continue;
    auto [nodes, edges] = euler_circuit(g.graph(), selected, start[c]);
    family.push_back(detail::trail_from_nodes(g, nodes));
  }
  return concatenate_at_shared_anchors(std::move(family));
}

/// Selected-flag mask of an Euler family: the anchor flags of its trails.
inline std::vector<bool> factor_from_family(const derived::IncidenceGraph& g, const EulerFamily& family) {
  std::vector<bool> selected(g.graph().edge_count(), false);
  for (const Trail& t : family) {
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      for (VertexIndex v : {t.anchors[i], t.anchors[i + 1]}) {
        auto id = g.flag_index(v, t.edges[i]);
        if (!id) throw HypergraphError("trail anchor outside its edge");
        selected[*id] = true;
      }
    }
  }
  return selected;
}

/// Closed trail traversing every flag exactly once, or nullopt when some
/// degree or edge size is odd. Requires a connected input.
inline std::optional<Trail> flag_tour(const Hypergraph& h) {
  require_no_empty_edges(h);
  if (!structure::is_connected(h)) throw HypergraphError("flag-traversing tour needs a connected hypergraph");
  if (h.size() == 0 || !detail::all_even(h)) return std::nullopt;
  derived::IncidenceGraph g(h);
  std::vector<bool> usable(g.graph().edge_count(), true);
  VertexIndex start = 0;
  while (h.degree(start) == 0) ++start;
  auto [nodes, edges] = euler_circuit(g.graph(), usable, g.v_node(start));
  return detail::trail_from_nodes(g, nodes);
}

/// Cycles of H whose anchor flags partition the flag set; exists exactly
/// when every degree and edge size is even. Connectivity is not required.
inline std::optional<std::vector<Trail>> flag_cycle_cover(const Hypergraph& h) {
  require_no_empty_edges(h);
  if (!detail::all_even(h)) return std::nullopt;
  derived::IncidenceGraph g(h);
  std::vector<bool> usable(g.graph().edge_count(), true);
  std::vector<Trail> out;
  for (auto& cycle : cycle_decomposition(g.graph(), usable)) {
    auto rotated = detail::start_at_v_vertex(g, std::move(cycle));
    out.push_back(detail::trail_from_nodes(g, rotated));
  }
  return out;
}

struct NecessaryReport {
  std::size_t edge_count = 0;
  std::size_t half_degree_sum = 0;     // Σ ⌊deg(v)/2⌋
  std::size_t odd_vertex_count = 0;    // |V_odd|
  long long excess_sum = 0;            // Σ (|e| − 2)
  bool degree_inequality = false;      // |E| ≤ Σ ⌊deg(v)/2⌋
  bool odd_vertex_inequality = false;  // |V_odd| ≤ Σ (|e| − 2)
  bool corank_at_least_two = false;
  std::vector<EdgeIndex> edges_with_one_non_pendant;  // edges with < 2 vertices of degree ≥ 2

  bool passes_inequalities() const noexcept { return degree_inequality && odd_vertex_inequality; }
  bool passes_all() const noexcept {
    return passes_inequalities() && corank_at_least_two && edges_with_one_non_pendant.empty();
  }
};

/// Necessary conditions for an Euler family. The two counting inequalities
/// are equivalent; disagreement raises std::logic_error.
inline NecessaryReport check_necessary(const Hypergraph& h) {
  NecessaryReport r;
  r.edge_count = h.size();
  for (VertexIndex v = 0; v < h.order(); ++v) {
    r.half_degree_sum += h.degree(v) / 2;
    r.odd_vertex_count += h.degree(v) % 2;
  }
  r.corank_at_least_two = true;
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    r.excess_sum += static_cast<long long>(h.edge_size(e)) - 2;
    if (h.edge_size(e) < 2) r.corank_at_least_two = false;
    std::size_t non_pendant = 0;
    for (VertexIndex v : h.edge(e)) non_pendant += h.degree(v) >= 2;
    if (non_pendant < 2) r.edges_with_one_non_pendant.push_back(e);
  }
  r.degree_inequality = r.edge_count <= r.half_degree_sum;
  r.odd_vertex_inequality = static_cast<long long>(r.odd_vertex_count) <= r.excess_sum;
  if (r.degree_inequality != r.odd_vertex_inequality) {
    throw std::logic_error("necessary-condition inequalities disagree");
  }
  return r;
}

/// Euler family via an EF-factor of the incidence graph, or nullopt when
/// none exists. A hypergraph without edges has the empty family.
inline std::optional<EulerFamily> euler_family(const Hypergraph& h) {
  require_no_empty_edges(h);
  if (h.size() == 0) return EulerFamily{};
  derived::IncidenceGraph g(h);
  auto factor = matching::ef_factor(g);
  if (!factor) return std::nullopt;
  return family_from_factor(g, factor->selected);
}

enum class TourOutcome { kFound, kNone, kBudgetExceeded };

struct TourResult {
  TourOutcome outcome = TourOutcome::kNone;
  std::optional<Trail> tour;
  std::uint64_t expansions = 0;
};

namespace detail {

class TourSearch {
 public:
  TourSearch(const Hypergraph& h, std::optional<std::uint64_t> budget)
      : h_(h), g_(h), budget_(budget), used_(h.size(), false) {}

  TourResult run() {
    TourResult result;
    const EdgeIndex first = 0;
    used_[first] = true;
    for (VertexIndex start : h_.edge(first)) {
      for (VertexIndex next : h_.edge(first)) {
        if (next == start) continue;
        trail_.anchors = {start, next};
        trail_.edges = {first};
        start_ = start;
        if (search(next, 1)) {
          result.outcome = TourOutcome::kFound;
          result.tour = trail_;
          result.expansions = expansions_;
          return result;
        }
        if (exhausted_) {
          result.outcome = TourOutcome::kBudgetExceeded;
          result.expansions = expansions_;
          return result;
        }
      }
    }
    result.outcome = TourOutcome::kNone;
    result.expansions = expansions_;
    return result;
  }

 private:
  // Unused e-vertices and the start anchor must stay reachable from the
  // current anchor through v-vertices and unused e-vertices.
  bool residual_connected(VertexIndex current) {
    const Graph& graph = g_.graph();
    std::vector<bool> seen(graph.node_count(), false);
    std::vector<std::size_t> stack{g_.v_node(current)};
    seen[g_.v_node(current)] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& inc : graph.adjacent(u)) {
        std::size_t w = inc.neighbour;
        if (seen[w]) continue;
        if (g_.is_e_vertex(w) && used_[g_.edge_of(w)]) continue;
        seen[w] = true;
        stack.push_back(w);
      }
    }
    if (!seen[g_.v_node(start_)]) return false;
    for (EdgeIndex e = 0; e < h_.size(); ++e) {
      if (!used_[e] && !seen[g_.e_node(e)]) return false;
    }
    return true;
  }

  bool search(VertexIndex current, std::size_t placed) {
    if (budget_ && expansions_ >= *budget_) {
      exhausted_ = true;
      return false;
    }
    ++expansions_;
    if (placed == h_.size()) return current == start_;
    if (!residual_connected(current)) return false;
    const bool last = placed + 1 == h_.size();
    for (EdgeIndex e : h_.incident(current)) {
      if (used_[e]) continue;
      for (VertexIndex next : h_.edge(e)) {
        if (next == current) continue;
        if (last && next != start_) continue;
        used_[e] = true;
        trail_.edges.push_back(e);
        trail_.anchors.push_back(next);
        if (search(next, placed + 1)) return true;
        trail_.edges.pop_back();
        trail_.anchors.pop_back();
        used_[e] = false;
        if (exhausted_) return false;
      }
    }
    return false;
  }

  const Hypergraph& h_;
  derived::IncidenceGraph g_;
  std::optional<std::uint64_t> budget_;
  std::vector<bool> used_;
  Trail trail_;
  VertexIndex start_ = 0;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Exhaustive search for an Euler tour: incidence-graph trails that visit
/// every e-vertex exactly once. `budget` caps the number of search nodes;
/// nullopt means unlimited. A definite kNone is reported only after the
/// search space is exhausted.
inline TourResult euler_tour_exact(const Hypergraph& h, std::optional<std::uint64_t> budget = std::nullopt) {
  require_no_empty_edges(h);
  if (h.size() < 2) return {};
  return detail::TourSearch(h, budget).run();
}

/// Greedy merging of family components: whenever e1 and e2 lie in different
/// trails and share vertices v1 ≠ v2 with flags (v1,e1), (v2,e2) in use,
/// the two flags are swapped for (v1,e2), (v2,e1), joining the trails.
inline EulerFamily merge_components(const Hypergraph& h, const EulerFamily& family) {
  if (auto why = family_violation(h, family); !why.empty()) throw HypergraphError("invalid Euler family: " + why);
  derived::IncidenceGraph g(h);
  std::vector<bool> selected = factor_from_family(g, family);
  while (true) {
    std::size_t count = 0;
    auto label = component_labels(g.graph(), {}, selected, &count);
    bool swapped = false;
    for (EdgeIndex e1 = 0; e1 < h.size() && !swapped; ++e1) {
      for (EdgeIndex e2 = 0; e2 < h.size() && !swapped; ++e2) {
        if (e1 == e2 || label[g.e_node(e1)] == label[g.e_node(e2)]) continue;
        auto common = intersection(h.edge(e1), h.edge(e2));
        for (VertexIndex v1 : common) {
          if (swapped) break;
          if (!selected[*g.flag_index(v1, e1)]) continue;
          for (VertexIndex v2 : common) {
            if (v2 == v1 || !selected[*g.flag_index(v2, e2)]) continue;
            selected[*g.flag_index(v1, e1)] = false;
            selected[*g.flag_index(v2, e2)] = false;
            selected[*g.flag_index(v1, e2)] = true;
            selected[*g.flag_index(v2, e1)] = true;
            swapped = true;
            break;
          }
        }
      }
    }
    if (!swapped) break;
  }
  return family_from_factor(g, selected);
}

/// Outcome of the D₃ sufficient condition. `parent` describes the spanning
/// forest of in-arborescences (kNone marks a root) when applicable.
struct D3Result {
  bool applicable = false;
  std::vector<std::size_t> parent;
  std::optional<EulerFamily> family;
};

/// True when `parent` is a spanning forest of D whose trees are
/// in-arborescences of order at least two.
inline bool is_nontrivial_in_forest(const derived::D3Digraph& d, std::span<const std::size_t> parent) {
  const std::size_t n = d.node_count;
  if (parent.size() != n) return false;
  std::vector<std::size_t> children(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (parent[x] == kNone) continue;
    if (!d.has_arc(x, parent[x])) return false;
    ++children[parent[x]];
  }
  std::vector<std::size_t> root_of(n, kNone);
  std::vector<std::size_t> tree_size(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = x;
    std::size_t steps = 0;
    while (parent[y] != kNone) {
      y = parent[y];
      if (++steps > n) return false;  // cycle
    }
    root_of[x] = y;
    ++tree_size[y];
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (parent[x] == kNone && tree_size[x] < 2) return false;
  }
  return true;
}

namespace detail {

// Spanning forest of non-trivial in-arborescences. Out-degree-0 vertices
// must be roots and each needs its own child, which is a bipartite
// matching; every other vertex points along one out-arc and cycles of the
// resulting functional graph are broken at their lowest vertex.
inline std::optional<std::vector<std::size_t>> d3_forest(const derived::D3Digraph& d) {
  const std::size_t n = d.node_count;
  Graph bipartite(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (!d.out[s].empty()) continue;
    for (std::size_t c : d.in[s]) bipartite.add_edge(s, c);
  }
  auto m = matching::max_matching(bipartite);
  std::vector<std::size_t> parent(n, kNone);
  for (std::size_t s = 0; s < n; ++s) {
    if (!d.out[s].empty()) continue;
    if (m.mate[s] == kNone) return std::nullopt;
    parent[m.mate[s]] = s;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!d.out[x].empty() && parent[x] == kNone) parent[x] = d.out[x].front();
  }
  std::vector<int> state(n, 0);  // 0 unseen, 1 on current path, 2 done
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> path;
    std::size_t y = x;
    while (y != kNone && state[y] == 0) {
      state[y] = 1;
      path.push_back(y);
      y = parent[y];
    }
    if (y != kNone && state[y] == 1) {
      auto it = std::find(path.begin(), path.end(), y);
      std::size_t lowest = *std::min_element(it, path.end());
      parent[lowest] = kNone;
    }
    for (std::size_t p : path) state[p] = 2;
  }
  return parent;
}

}  // namespace detail

/// Applies the D₃ sufficient condition: when D₃(H) has a spanning
/// vertex-disjoint union of non-trivial in-arborescences, builds an Euler
/// family by peeling leaves and rerouting; a single arborescence yields an
/// Euler tour. Otherwise reports inapplicable, which says nothing about H.
inline D3Result d3_sufficient(const Hypergraph& h) {
  D3Result result;
  if (h.size() < 2) return result;
  auto d = derived::d3_digraph(h);
  auto forest = detail::d3_forest(d);
  if (!forest || !is_nontrivial_in_forest(d, *forest)) return result;
  result.applicable = true;
  result.parent = *forest;

  const std::size_t n = d.node_count;
  std::vector<std::size_t> parent = *forest;
  std::vector<bool> alive(n, true);
  auto root_of = [&](std::size_t x) {
    while (parent[x] != kNone) x = parent[x];
    return x;
  };
  // Peel leaves from trees of order ≥ 3 until every tree has order 2.
  std::vector<std::pair<EdgeIndex, EdgeIndex>> peeled;
  while (true) {
    std::vector<std::size_t> tree_size(n, 0), children(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      ++tree_size[root_of(x)];
      if (parent[x] != kNone) ++children[parent[x]];
    }
    std::size_t leaf = kNone;
    for (std::size_t x = 0; x < n && leaf == kNone; ++x) {
      if (alive[x] && parent[x] != kNone && children[x] == 0 && tree_size[root_of(x)] >= 3) leaf = x;
    }
    if (leaf == kNone) break;
    peeled.emplace_back(leaf, parent[leaf]);
    alive[leaf] = false;
  }
  EulerFamily family;
  for (std::size_t x = 0; x < n; ++x) {
    if (!alive[x] || parent[x] == kNone) continue;
    EdgeIndex e = x;
    EdgeIndex f = parent[x];
    auto common = intersection(h.edge(e), h.edge(f));
    family.push_back(Trail{{common[0], common[1], common[0]}, {e, f}});
  }
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    auto [e, f] = *it;
    for (Trail& t : family) {
      auto pos = std::find(t.edges.begin(), t.edges.end(), f);
      if (pos == t.edges.end()) continue;
      std::size_t i = static_cast<std::size_t>(pos - t.edges.begin());
      VertexIndex before = t.anchors[i];
      VertexIndex after = t.anchors[i + 1];
      VertexIndex w = kNone;
      for (VertexIndex c : intersection(h.edge(e), h.edge(f))) {
        if (c != before && c != after) {
          w = c;
          break;
        }
      }
      auto at = static_cast<std::ptrdiff_t>(i);
      if (h.contains(e, after)) {
        // … before f w e after …
        t.anchors.insert(t.anchors.begin() + at + 1, w);
        t.edges.insert(t.edges.begin() + at + 1, e);
      } else {
        // … before e w f after …
        t.anchors.insert(t.anchors.begin() + at + 1, w);
        t.edges.insert(t.edges.begin() + at, e);
      }
      break;
    }
  }
  family = concatenate_at_shared_anchors(std::move(family));
  if (auto why = family_violation(h, family); !why.empty()) {
    throw std::logic_error("D3 construction produced an invalid family: " + why);
  }
  result.family = std::move(family);
  return result;
}

/// Spanning subgraph of the intersection graph L(H) traced by a family:
/// a single edge per trail of length 2, a cycle per longer trail.
inline Graph project_to_intersection(const Hypergraph& h, const EulerFamily& family) {
  if (auto why = family_violation(h, family); !why.empty()) throw HypergraphError("invalid Euler family: " + why);
  Graph out(h.size());
  for (const Trail& t : family) {
    const std::size_t k = t.edges.size();
    if (k == 2) {
      out.add_edge(t.edges[0], t.edges[1]);
      continue;
    }
    for (std::size_t i = 0; i < k; ++i) out.add_edge(t.edges[i], t.edges[(i + 1) % k]);
  }
  return out;
}

enum class LiftCase {
  kMaxDegreeTwo,      // L(H) with every vertex degree at most 2
  kBipartiteTwoPlus,  // L₂*(H), which must be bipartite
  kThreePlus,         // L₃*(H)
};

namespace detail {

// Picks labels c_i ∈ lists[i] around a cycle so that neighbours differ.
inline std::optional<std::vector<VertexIndex>> list_colour_cycle(const std::vector<std::vector<VertexIndex>>& lists) {
  const std::size_t k = lists.size();
  for (VertexIndex first : lists[0]) {
    std::vector<std::vector<VertexIndex>> reach(k);
    reach[0] = {first};
    for (std::size_t i = 1; i < k; ++i) {
      for (VertexIndex c : lists[i]) {
        bool ok = std::any_of(reach[i - 1].begin(), reach[i - 1].end(), [&](VertexIndex p) { return p != c; });
        if (ok) reach[i].push_back(c);
      }
    }
    std::vector<VertexIndex> labels(k);
    bool found = false;
    for (VertexIndex c : reach[k - 1]) {
      if (c != first) {
        labels[k - 1] = c;
        found = true;
        break;
      }
    }
    if (!found) continue;
    for (std::size_t i = k - 1; i-- > 1;) {
      for (VertexIndex c : reach[i]) {
        if (c != labels[i + 1]) {
          labels[i] = c;
          break;
        }
      }
    }
    labels[0] = first;
    return labels;
  }
  return std::nullopt;
}

}  // namespace detail

/// Lifts a cycle e_0 … e_{k-1} of the intersection graph to a closed strict
/// trail v_0 e_0 v_1 e_1 … v_{k-1} e_{k-1} v_0 with v_i ∈ e_{i-1} ∩ e_i.
/// Anchors are chosen greedily (first anchor anywhere, then avoiding the
/// previous one, the last avoiding both neighbours). When the last choice
/// is blocked in the bipartite L₂* case, positions whose intersection is
/// exactly the blocked pair are relabelled alternately and the remaining
/// positions are recoloured around them.
inline std::optional<Trail> lift_cycle(const Hypergraph& h, std::span<const EdgeIndex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) return std::nullopt;
  std::vector<std::vector<VertexIndex>> lists(k);
  for (std::size_t i = 0; i < k; ++i) {
    lists[i] = intersection(h.edge(cycle[(i + k - 1) % k]), h.edge(cycle[i]));
    if (lists[i].empty()) return std::nullopt;
  }
  auto as_trail = [&](const std::vector<VertexIndex>& labels) {
    Trail t;
    for (std::size_t i = 0; i < k; ++i) {
      t.anchors.push_back(labels[i]);
      t.edges.push_back(cycle[i]);
    }
    t.anchors.push_back(labels[0]);
    return t;
  };

  std::vector<VertexIndex> labels(k, kNone);
  labels[0] = lists[0].front();
  bool greedy_ok = true;
  for (std::size_t i = 1; i + 1 < k && greedy_ok; ++i) {
    auto it = std::find_if(lists[i].begin(), lists[i].end(), [&](VertexIndex c) { return c != labels[i - 1]; });
    if (it == lists[i].end()) {
      greedy_ok = false;
    } else {
      labels[i] = *it;
    }
  }
  if (greedy_ok) {
    auto& last = lists[k - 1];
    auto it = std::find_if(last.begin(), last.end(),
                           [&](VertexIndex c) { return c != labels[0] && c != labels[k - 2]; });
    if (it != last.end()) {
      labels[k - 1] = *it;
      return as_trail(labels);
    }
    // Blocked: lists[k-1] == {labels[0], labels[k-2]}. Alternate the two
    // labels along maximal runs of positions with exactly this pair.
    std::vector<VertexIndex> pair{std::min(labels[0], labels[k - 2]), std::max(labels[0], labels[k - 2])};
    if (last == pair) {
      std::vector<bool> in_run(k);
      for (std::size_t i = 0; i < k; ++i) in_run[i] = lists[i] == pair;
      std::vector<std::vector<VertexIndex>> fixed = lists;
      if (std::all_of(in_run.begin(), in_run.end(), [](bool b) { return b; })) {
        if (k % 2 == 0) {
          for (std::size_t i = 0; i < k; ++i) labels[i] = pair[i % 2];
          return as_trail(labels);
        }
      } else {
        std::size_t begin = 0;
        while (in_run[begin]) ++begin;  // a position outside every run
        std::size_t parity = 0;
        for (std::size_t step = 1; step <= k; ++step) {
          std::size_t i = (begin + step) % k;
          if (!in_run[i]) {
            parity = 0;
            continue;
          }
          fixed[i] = {pair[parity]};
          parity ^= 1;
        }
        if (auto coloured = detail::list_colour_cycle(fixed)) return as_trail(*coloured);
      }
    }
  }
  if (auto coloured = detail::list_colour_cycle(lists)) return as_trail(*coloured);
  return std::nullopt;
}

/// Lifts vertex-disjoint cycles (and, in the L₂*/L₃* cases, single edges)
/// of an intersection graph covering E to an Euler family. Throws when
/// the case condition does not hold for `h` and `components`.
inline EulerFamily lift_from_intersection(const Hypergraph& h, LiftCase which,
                                          const std::vector<std::vector<EdgeIndex>>& components) {
  require_no_empty_edges(h);
  std::size_t threshold = 1;
  switch (which) {
    case LiftCase::kMaxDegreeTwo:
      for (VertexIndex v = 0; v < h.order(); ++v) {
        if (h.degree(v) > 2) throw HypergraphError("case condition unmet: a vertex has degree above 2");
      }
      break;
    case LiftCase::kBipartiteTwoPlus:
      threshold = 2;
      if (!bipartition(derived::intersection_graph(h, derived::IntersectionMode::kAtLeast, 2))) {
        throw HypergraphError("case condition unmet: the 2*-intersection graph is not bipartite");
      }
      break;
    case LiftCase::kThreePlus:
      threshold = 3;
      break;
  }
  std::vector<std::size_t> covered(h.size(), 0);
  for (const auto& comp : components) {
    for (EdgeIndex e : comp) {
      if (e >= h.size()) throw HypergraphError("unknown edge index in component");
      ++covered[e];
    }
  }
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    if (covered[e] != 1) throw HypergraphError("components must cover every edge exactly once");
  }
  EulerFamily family;
  for (const auto& comp : components) {
    const std::size_t k = comp.size();
    if (k < 2 || (k == 2 && which == LiftCase::kMaxDegreeTwo)) {
      throw HypergraphError("case condition unmet: component is not a cycle");
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (k == 2 && i == 1) break;
      if (intersection_size(h.edge(comp[i]), h.edge(comp[(i + 1) % k])) < threshold) {
        throw HypergraphError("case condition unmet: consecutive edges are not adjacent in the intersection graph");
      }
    }
    if (k == 2) {
      auto common = intersection(h.edge(comp[0]), h.edge(comp[1]));
      family.push_back(Trail{{common[0], common[1], common[0]}, {comp[0], comp[1]}});
      continue;
    }
    auto t = lift_cycle(h, comp);
    if (!t) throw std::logic_error("cycle lift failed under a verified case condition");
    family.push_back(std::move(*t));
  }
  family = concatenate_at_shared_anchors(std::move(family));
  if (auto why = family_violation(h, family); !why.empty()) {
    throw std::logic_error("lifted family is invalid: " + why);
  }
  return family;
}

/// Euler family assembled block by block: a family for every block, then
/// trails with a common anchor are concatenated.
inline std::optional<EulerFamily> solve_by_blocks(const Hypergraph& h) {
  require_no_empty_edges(h);
  EulerFamily family;
  for (const auto& block : structure::blocks(h)) {
    if (block.edges.empty()) continue;
    Hypergraph part = induced_by_edges(h, block.edges);
    auto sub = euler_family(part);
    if (!sub) return std::nullopt;
    for (const Trail& t : *sub) {
      Trail mapped;
      for (VertexIndex v : t.anchors) mapped.anchors.push_back(h.vertex_index(part.vertex_id(v)));
      for (EdgeIndex e : t.edges) mapped.edges.push_back(h.edge_index(part.edge_id(e)));
      family.push_back(std::move(mapped));
    }
  }
  family = concatenate_at_shared_anchors(std::move(family));
  if (auto why = family_violation(h, family); !why.empty()) {
    throw std::logic_error("block-wise family is invalid: " + why);
  }
  return family;
}

}  // namespace hypereuler::euler
