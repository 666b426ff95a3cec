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
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypereuler/derived.hpp"
#include "hypereuler/euler.hpp"
#include "hypereuler/graph.hpp"
#include "hypereuler/hypergraph.hpp"
#include "hypereuler/matching.hpp"
#include "hypereuler/oracle.hpp"
#include "hypereuler/trail.hpp"

namespace hypereuler::certify {

// ---------------------------------------------------------------------------
// Lovász parity-factor conditions

/// One (S, T) pair, stated on the hypergraph: E'' = S, V' = T ∩ V, E' = T ∩ E.
struct LovaszWitness {
  std::vector<EdgeIndex> e_double_prime;
  std::vector<VertexIndex> v_prime;
  std::vector<EdgeIndex> e_prime;
  long long value = 0;     // left-hand side; a violation when negative
  std::size_t q_h = 0;     // odd components of the trimmed hypergraph
  std::size_t q_e = 0;     // leftover odd edges inside V'
};

struct LovaszResult {
  bool quasi_eulerian = true;
  std::optional<LovaszWitness> witness;  // first violation in enumeration order
  std::uint64_t pairs_checked = 0;
  std::uint64_t disagreements = 0;       // pairs where the two forms differ in any term
};

namespace detail {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

struct LovaszTerms {
  long long a = 0;  // 2|S| + Σ_{x∈T} deg − 2|T∩E|
  long long b = 0;  // ε(S, T ∩ V)
  std::size_t q = 0;
  std::size_t q_h = 0;
  std::size_t q_e = 0;
};

// state[x]: 0 free, 1 in S (edges only), 2 in T.
inline LovaszTerms incidence_terms(const derived::IncidenceGraph& g, const std::vector<int>& state) {
  const Graph& graph = g.graph();
  LovaszTerms t;
  for (std::size_t x = 0; x < graph.node_count(); ++x) {
    if (state[x] == 1) t.a += 2;
    if (state[x] == 2) t.a += static_cast<long long>(graph.degree(x)) - (g.is_e_vertex(x) ? 2 : 0);
  }
  for (const auto& [u, w] : graph.edges()) {
    bool s_t = (state[u] == 1 && state[w] == 2) || (state[w] == 1 && state[u] == 2);
    if (s_t) ++t.b;  // S holds only e-vertices, so the T end is a v-vertex
  }
  std::vector<bool> alive(graph.node_count());
  for (std::size_t x = 0; x < graph.node_count(); ++x) alive[x] = state[x] == 0;
  std::size_t count = 0;
  auto label = component_labels(graph, alive, {}, &count);
  std::vector<std::size_t> eps(count, 0);
  for (const auto& [u, w] : graph.edges()) {
    if (alive[u] && state[w] == 2) ++eps[label[u]];
    if (alive[w] && state[u] == 2) ++eps[label[w]];
  }
  for (std::size_t c = 0; c < count; ++c) t.q += eps[c] % 2;
  return t;
}

// The same quantities from the hypergraph side, without the incidence graph.
inline LovaszTerms hypergraph_terms(const Hypergraph& h, const std::vector<bool>& in_v_prime,
                                    const std::vector<int>& edge_role) {
  // edge_role: 0 leftover, 1 in E'', 2 in E'.
  LovaszTerms t;
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (in_v_prime[v]) t.a += static_cast<long long>(h.degree(v));
  }
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    if (edge_role[e] == 1) {
      t.a += 2;
      for (VertexIndex v : h.edge(e)) t.b += in_v_prime[v];
    } else if (edge_role[e] == 2) {
      t.a += static_cast<long long>(h.edge_size(e)) - 2;
    }
  }
  UnionFind uf(h.order());
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    if (edge_role[e] != 0) continue;
    VertexIndex first = kNone;
    for (VertexIndex v : h.edge(e)) {
      if (in_v_prime[v]) continue;
      if (first == kNone) {
        first = v;
      } else {
        uf.unite(first, v);
      }
    }
  }
  std::vector<std::size_t> parity(h.order(), 0);
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    std::size_t inside = 0;
    VertexIndex some_outside = kNone;
    for (VertexIndex v : h.edge(e)) {
      if (in_v_prime[v]) {
        ++inside;
      } else if (some_outside == kNone) {
        some_outside = v;
      }
    }
    if (edge_role[e] == 2) {
      for (VertexIndex v : h.edge(e)) {
        if (!in_v_prime[v]) ++parity[uf.find(v)];
      }
    } else if (edge_role[e] == 0) {
      if (some_outside == kNone) {
        t.q_e += inside % 2;
      } else {
        parity[uf.find(some_outside)] += inside;
      }
    }
  }
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (!in_v_prime[v] && uf.find(v) == v) t.q_h += parity[v] % 2;
  }
  t.q = t.q_h + t.q_e;
  return t;
}

}  // namespace detail

/// Exhaustive check of the parity-factor conditions for an Euler family over
/// all disjoint S ⊆ E, T ⊆ V ∪ E. Both the incidence-graph and hypergraph
/// forms are evaluated on every pair; `disagreements` counts term mismatches.
/// Throws LimitError when |V| + |E| exceeds `limit`.
inline LovaszResult lovasz_check(const Hypergraph& h, std::size_t limit = 14) {
  require_no_empty_edges(h);
  if (h.order() + h.size() > limit) {
    throw LimitError("|V| + |E| = " + std::to_string(h.order() + h.size()) + " exceeds limit " +
                     std::to_string(limit));
  }
  derived::IncidenceGraph g(h);
  const std::size_t n = h.order();
  const std::size_t m = h.size();
  LovaszResult result;
  std::vector<int> edge_role(m, 0);  // hypergraph side: 0 free, 1 E'', 2 E'
  std::vector<bool> in_v_prime(n, false);
  std::vector<int> state(n + m, 0);
  std::uint64_t edge_codes = 1;
  for (std::size_t i = 0; i < m; ++i) edge_codes *= 3;
  for (std::uint64_t vmask = 0; vmask < (std::uint64_t{1} << n); ++vmask) {
    for (VertexIndex v = 0; v < n; ++v) {
      in_v_prime[v] = (vmask >> v & 1U) != 0;
      state[g.v_node(v)] = in_v_prime[v] ? 2 : 0;
    }
    for (std::uint64_t code = 0; code < edge_codes; ++code) {
      std::uint64_t c = code;
      for (EdgeIndex e = 0; e < m; ++e) {
        edge_role[e] = static_cast<int>(c % 3);
        c /= 3;
        state[g.e_node(e)] = edge_role[e];
      }
      auto inc = detail::incidence_terms(g, state);
      auto hyp = detail::hypergraph_terms(h, in_v_prime, edge_role);
      ++result.pairs_checked;
      if (inc.a != hyp.a || inc.b != hyp.b || inc.q != hyp.q) ++result.disagreements;
      long long value = inc.a - inc.b - static_cast<long long>(inc.q);
      if (value < 0 && !result.witness) {
        LovaszWitness w;
        for (EdgeIndex e = 0; e < m; ++e) {
          if (edge_role[e] == 1) w.e_double_prime.push_back(e);
          if (edge_role[e] == 2) w.e_prime.push_back(e);
        }
        for (VertexIndex v = 0; v < n; ++v) {
          if (in_v_prime[v]) w.v_prime.push_back(v);
        }
        w.value = value;
        w.q_h = hyp.q_h;
        w.q_e = hyp.q_e;
        result.witness = std::move(w);
        result.quasi_eulerian = false;
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Cycle decomposition

/// Splits closed strict trails at repeated anchors until every piece is a cycle.
inline std::vector<Trail> split_into_cycles(const EulerFamily& family) {
  std::vector<Trail> pending(family.begin(), family.end());
  std::vector<Trail> out;
  while (!pending.empty()) {
    Trail t = std::move(pending.back());
    pending.pop_back();
    const std::size_t k = t.edges.size();
    std::optional<std::pair<std::size_t, std::size_t>> repeat;
    for (std::size_t i = 0; i < k && !repeat; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (t.anchors[i] == t.anchors[j]) {
          repeat = {i, j};
          break;
        }
      }
    }
    if (!repeat) {
      out.push_back(std::move(t));
      continue;
    }
    auto [i, j] = *repeat;
    Trail inner{{t.anchors.begin() + static_cast<std::ptrdiff_t>(i), t.anchors.begin() + static_cast<std::ptrdiff_t>(j) + 1},
                {t.edges.begin() + static_cast<std::ptrdiff_t>(i), t.edges.begin() + static_cast<std::ptrdiff_t>(j)}};
    Trail outer;
    outer.anchors.assign(t.anchors.begin(), t.anchors.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    outer.anchors.insert(outer.anchors.end(), t.anchors.begin() + static_cast<std::ptrdiff_t>(j) + 1, t.anchors.end());
    outer.edges.assign(t.edges.begin(), t.edges.begin() + static_cast<std::ptrdiff_t>(i));
    outer.edges.insert(outer.edges.end(), t.edges.begin() + static_cast<std::ptrdiff_t>(j), t.edges.end());
    pending.push_back(std::move(inner));
    pending.push_back(std::move(outer));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Cycles partitioning E, or nullopt when H has no Euler family.
inline std::optional<std::vector<Trail>> cycle_decomposition(const Hypergraph& h) {
  auto family = euler::euler_family(h);
  if (!family) return std::nullopt;
  auto cycles = split_into_cycles(*family);
  for (const Trail& c : cycles) {
    if (!is_cycle(h, c)) throw std::logic_error("cycle split produced a non-cycle");
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// 2-factors and the dual

/// (V, E') is a 2-factor: every vertex lies in exactly two edges of E'.
inline bool is_two_factor(const Hypergraph& h, const std::vector<EdgeIndex>& chosen) {
  std::vector<std::size_t> deg(h.order(), 0);
  std::vector<bool> seen(h.size(), false);
  for (EdgeIndex e : chosen) {
    if (e >= h.size() || seen[e]) return false;
    seen[e] = true;
    for (VertexIndex v : h.edge(e)) ++deg[v];
  }
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; });
}

/// Every 2-factor edge set of H, each sorted, in increasing bitmask order.
inline std::vector<std::vector<EdgeIndex>> all_two_factors(const Hypergraph& h, std::size_t limit = 20) {
  require_no_empty_edges(h);
  if (h.size() > limit) throw LimitError("2-factor enumeration beyond " + std::to_string(limit) + " edges");
  std::vector<std::vector<EdgeIndex>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << h.size()); ++mask) {
    std::vector<EdgeIndex> chosen;
    for (EdgeIndex e = 0; e < h.size(); ++e) {
      if (mask >> e & 1U) chosen.push_back(e);
    }
    if (is_two_factor(h, chosen)) out.push_back(std::move(chosen));
  }
  return out;
}

struct TwoFactorCert {
  std::vector<EdgeIndex> edges;          // E'
  Hypergraph dual;                       // vertex i of the dual is edge i of H
  EulerFamily family;                    // Euler family of the dual anchored on E'
  std::vector<std::size_t> traversals;   // per edge of H: anchor occurrences in the family
};

/// Number of anchor occurrences of each dual vertex in a family (closing
/// anchors counted once).
inline std::vector<std::size_t> anchor_traversals(std::size_t vertex_count, const EulerFamily& family) {
  std::vector<std::size_t> count(vertex_count, 0);
  for (const Trail& t : family) {
    for (std::size_t i = 0; i + 1 < t.anchors.size(); ++i) ++count[t.anchors[i]];
  }
  return count;
}

/// Maps a 2-factor E' of H (all edge sizes even) to an Euler family of the
/// dual whose anchor set is E' and which passes through each e ∈ E' exactly
/// |e|/2 times. Returns nullopt when E' is not a 2-factor. Throws on odd
/// edge sizes or edge indices outside E.
inline std::optional<TwoFactorCert> two_factor_duality(const Hypergraph& h, std::vector<EdgeIndex> chosen) {
  require_no_empty_edges(h);
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    if (h.edge_size(e) % 2 != 0) throw HypergraphError("edge '" + h.edge_id(e) + "' has odd size");
  }
  for (EdgeIndex e : chosen) {
    if (e >= h.size()) throw HypergraphError("edge index outside E");
  }
  std::sort(chosen.begin(), chosen.end());
  if (!is_two_factor(h, chosen)) return std::nullopt;
  Hypergraph d = dual(h);
  derived::IncidenceGraph g(d);
  std::vector<bool> in_chosen(h.size(), false);
  for (EdgeIndex e : chosen) in_chosen[e] = true;
  // Flags (e, v^T) of the dual with e ∈ E': two per dual edge, |e| per e.
  std::vector<bool> selected(g.graph().edge_count(), false);
  for (std::size_t id = 0; id < selected.size(); ++id) selected[id] = in_chosen[g.flag(id).vertex];
  if (!matching::is_ef_factor(g, selected)) throw std::logic_error("2-factor flags do not form an EF-factor");
  EulerFamily family = euler::family_from_factor(g, selected);
  if (auto why = family_violation(d, family); !why.empty()) throw std::logic_error("dual family invalid: " + why);
  auto traversals = anchor_traversals(d.order(), family);
  return TwoFactorCert{std::move(chosen), std::move(d), std::move(family), std::move(traversals)};
}

/// Inverse direction: the anchor set of an Euler family of dual(h), read as
/// an edge set of h. Returns nullopt when that set is not a 2-factor.
inline std::optional<std::vector<EdgeIndex>> two_factor_from_dual_family(const Hypergraph& h,
                                                                         const EulerFamily& dual_family) {
  Hypergraph d = dual(h);
  if (auto why = family_violation(d, dual_family); !why.empty()) {
    throw HypergraphError("not an Euler family of the dual: " + why);
  }
  std::vector<EdgeIndex> chosen;
  for (const Trail& t : dual_family) {
    for (VertexIndex e : anchor_set(t)) chosen.push_back(e);
  }
  std::sort(chosen.begin(), chosen.end());
  if (!is_two_factor(h, chosen)) return std::nullopt;
  return chosen;
}

/// Partition of E into 2-factor edge sets, by exact cover over all
/// 2-factors with the lowest uncovered edge chosen first.
inline std::optional<std::vector<std::vector<EdgeIndex>>> two_factorization(const Hypergraph& h,
                                                                           std::size_t limit = 10) {
  require_no_empty_edges(h);
  if (h.size() > limit) throw LimitError("2-factorization search beyond " + std::to_string(limit) + " edges");
  if (h.size() == 0) return std::vector<std::vector<EdgeIndex>>{};
  auto factors = all_two_factors(h, limit);
  std::vector<std::uint64_t> masks;
  for (const auto& f : factors) {
    std::uint64_t m = 0;
    for (EdgeIndex e : f) m |= std::uint64_t{1} << e;
    masks.push_back(m);
  }
  const std::uint64_t full = (std::uint64_t{1} << h.size()) - 1;
  std::vector<std::size_t> picked;
  auto search = [&](auto&& self, std::uint64_t covered) -> bool {
    if (covered == full) return true;
    std::size_t lowest = 0;
    while (covered >> lowest & 1U) ++lowest;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (!(masks[i] >> lowest & 1U) || (masks[i] & covered) != 0) continue;
      picked.push_back(i);
      if (self(self, covered | masks[i])) return true;
      picked.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::vector<std::vector<EdgeIndex>> out;
  for (std::size_t i : picked) out.push_back(factors[i]);
  return out;
}

// ---------------------------------------------------------------------------
// 3-uniform certificates

inline bool is_uniform(const Hypergraph& h, std::size_t k) {
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    if (h.edge_size(e) != k) return false;
  }
  return true;
}

struct PairingStep {
  EdgeIndex first;
  EdgeIndex second;
  VertexIndex common;
};

/// Pairs of intersecting edges partitioning E (a perfect matching of the
/// intersection graph), for 3-uniform H with every degree even. Throws when
/// that precondition fails.
inline std::optional<std::vector<PairingStep>> even3_pairing(const Hypergraph& h) {
  require_no_empty_edges(h);
  if (!is_uniform(h, 3)) throw HypergraphError("pairing needs a 3-uniform hypergraph");
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (h.degree(v) % 2 != 0) throw HypergraphError("pairing needs every vertex degree even");
  }
  Graph l = derived::intersection_graph(h, derived::IntersectionMode::kAny);
  auto m = matching::max_matching(l);
  if (!m.perfect()) return std::nullopt;
  std::vector<PairingStep> out;
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    if (m.mate[e] < e) continue;
    out.push_back({e, m.mate[e], intersection(h.edge(e), h.edge(m.mate[e])).front()});
  }
  return out;
}

struct OddPart {
  VertexIndex common;            // a vertex in every edge of the part
  std::vector<EdgeIndex> edges;  // odd count
};

/// For 3-uniform H with every degree odd: assigns each edge to one of its
/// vertices so that every vertex receives an odd number of edges. The parts
/// (one per vertex) have odd size and a common vertex; the assignment is an
/// odd subgraph of the incidence graph that is 1-regular on E. Throws on a
/// failed precondition or when |E| exceeds `limit`.
inline std::optional<std::vector<OddPart>> odd3_partition(const Hypergraph& h, std::size_t limit = 10) {
  require_no_empty_edges(h);
  if (!is_uniform(h, 3)) throw HypergraphError("odd partition needs a 3-uniform hypergraph");
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (h.degree(v) % 2 == 0) throw HypergraphError("odd partition needs every vertex degree odd");
  }
  if (h.size() > limit) throw LimitError("odd partition search beyond " + std::to_string(limit) + " edges");
  // Each vertex needs at least one edge.
  if (h.order() > h.size()) return std::nullopt;
  std::vector<std::size_t> received(h.order(), 0);
  std::vector<std::size_t> remaining(h.order(), 0);
  for (VertexIndex v = 0; v < h.order(); ++v) remaining[v] = h.degree(v);
  std::vector<VertexIndex> choice(h.size(), kNone);
  auto search = [&](auto&& self, EdgeIndex e) -> bool {
    if (e == h.size()) return true;
    for (VertexIndex v : h.edge(e)) --remaining[v];
    for (VertexIndex v : h.edge(e)) {
      ++received[v];
      bool ok = true;
      for (VertexIndex w : h.edge(e)) {
        if (remaining[w] == 0 && received[w] % 2 == 0) ok = false;
      }
      if (ok) {
        choice[e] = v;
        if (self(self, e + 1)) return true;
      }
      --received[v];
    }
    for (VertexIndex v : h.edge(e)) ++remaining[v];
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::vector<OddPart> parts(h.order());
  for (VertexIndex v = 0; v < h.order(); ++v) parts[v].common = v;
  for (EdgeIndex e = 0; e < h.size(); ++e) parts[choice[e]].edges.push_back(e);
  return parts;
}

// ---------------------------------------------------------------------------
// Hamilton cycles in cubic graphs and Euler tours of their duals

/// True when h has every edge of size 2, no parallel edges, and every vertex
/// of degree 3.
inline bool is_cubic_graph(const Hypergraph& h) {
  if (h.size() == 0 || !is_uniform(h, 2)) return false;
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (h.degree(v) != 3) return false;
  }
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    for (EdgeIndex f = e + 1; f < h.size(); ++f) {
      if (intersection_size(h.edge(e), h.edge(f)) == 2) return false;
    }
  }
  return true;
}

/// Vertex sequence v_0 … v_{n-1} visiting every vertex once with
/// consecutive (cyclically) vertices adjacent.
inline bool is_hamilton_cycle(const Hypergraph& graph, const std::vector<VertexIndex>& cycle) {
  const std::size_t n = graph.order();
  if (cycle.size() != n || n < 3) return false;
  std::vector<bool> seen(n, false);
  for (VertexIndex v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    VertexIndex u = cycle[i];
    VertexIndex w = cycle[(i + 1) % n];
    bool adjacent = false;
    for (EdgeIndex e : graph.incident(u)) adjacent = adjacent || graph.contains(e, w);
    if (!adjacent) return false;
  }
  return true;
}

/// The reduction image of a cubic graph: its dual, whose vertices are the
/// graph's edges and whose edge e_v collects the three edges at v.
inline Hypergraph ham_to_euler(const Hypergraph& graph) {
  if (!is_cubic_graph(graph)) throw HypergraphError("reduction needs a simple cubic graph");
  return dual(graph);
}

/// Hamilton cycle v_0 … v_{n-1} ↦ Euler tour (v_{n-1}v_0) e_{v_0} (v_0v_1) e_{v_1} … of the image.
inline Trail hamilton_to_tour(const Hypergraph& graph, const std::vector<VertexIndex>& cycle) {
  if (!is_hamilton_cycle(graph, cycle)) throw HypergraphError("not a Hamilton cycle");
  const std::size_t n = cycle.size();
  auto edge_between = [&](VertexIndex u, VertexIndex w) {
    for (EdgeIndex e : graph.incident(u)) {
      if (graph.contains(e, w)) return e;
    }
    throw std::logic_error("Hamilton cycle step without an edge");
  };
  Trail t;
  for (std::size_t i = 0; i < n; ++i) {
    t.anchors.push_back(edge_between(cycle[(i + n - 1) % n], cycle[i]));
    t.edges.push_back(cycle[i]);
  }
  t.anchors.push_back(t.anchors.front());
  return t;
}

/// Euler tour of the image ↦ the sequence of graph vertices it passes.
inline std::vector<VertexIndex> tour_to_hamilton(const Hypergraph& graph, const Trail& tour) {
  Hypergraph image = ham_to_euler(graph);
  if (!is_euler_tour(image, tour)) throw HypergraphError("not an Euler tour of the reduction image");
  std::vector<VertexIndex> cycle(tour.edges.begin(), tour.edges.end());
  if (!is_hamilton_cycle(graph, cycle)) throw std::logic_error("tour did not map to a Hamilton cycle");
  return cycle;
}

}  // namespace hypereuler::certify
