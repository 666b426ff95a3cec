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
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hypereuler/hypergraph.hpp"

namespace hypereuler {

/// Alternating sequence v0 e1 v1 … ek vk of anchors and edges.
struct Trail {
  std::vector<VertexIndex> anchors;  // k + 1 entries
  std::vector<EdgeIndex> edges;      // k entries

  std::size_t length() const noexcept { return edges.size(); }
  bool closed() const noexcept { return edges.size() >= 2 && anchors.front() == anchors.back(); }

  friend bool operator==(const Trail&, const Trail&) = default;
  friend auto operator<=>(const Trail&, const Trail&) = default;
};

using EulerFamily = std::vector<Trail>;

/// Walk: anchors consecutive in each edge and pairwise distinct neighbours.
inline bool is_walk(const Hypergraph& h, const Trail& t) {
  if (t.anchors.size() != t.edges.size() + 1) return false;
  for (VertexIndex v : t.anchors) {
    if (v >= h.order()) return false;
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    EdgeIndex e = t.edges[i];
    if (e >= h.size()) return false;
    if (t.anchors[i] == t.anchors[i + 1]) return false;
    if (!h.contains(e, t.anchors[i]) || !h.contains(e, t.anchors[i + 1])) return false;
  }
  return true;
}

/// Walk whose anchor flags (v_{i-1}, e_i), (v_i, e_i) are pairwise distinct.
inline bool is_trail(const Hypergraph& h, const Trail& t) {
  if (!is_walk(h, t)) return false;
  std::set<Flag> seen;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (!seen.insert({t.anchors[i], t.edges[i]}).second) return false;
    if (!seen.insert({t.anchors[i + 1], t.edges[i]}).second) return false;
  }
  return true;
}

inline bool is_strict_trail(const Hypergraph& h, const Trail& t) {
  if (!is_walk(h, t)) return false;
  std::vector<EdgeIndex> sorted = t.edges;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

inline bool is_closed_strict_trail(const Hypergraph& h, const Trail& t) {
  return t.closed() && is_strict_trail(h, t);
}

/// Closed walk with pairwise distinct anchors v0 … v_{k-1} and edges.
inline bool is_cycle(const Hypergraph& h, const Trail& t) {
  if (!is_closed_strict_trail(h, t)) return false;
  std::vector<VertexIndex> inner(t.anchors.begin(), t.anchors.end() - 1);
  std::sort(inner.begin(), inner.end());
  return std::adjacent_find(inner.begin(), inner.end()) == inner.end();
}

/// Anchor set of a closed trail (endpoints counted once).
inline std::vector<VertexIndex> anchor_set(const Trail& t) {
  std::vector<VertexIndex> out(t.anchors.begin(), t.closed() ? t.anchors.end() - 1 : t.anchors.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Empty string when `family` is an Euler family of `h`, else the reason.
inline std::string family_violation(const Hypergraph& h, const EulerFamily& family) {
  std::vector<std::size_t> uses(h.size(), 0);
  std::vector<std::size_t> owner(h.order(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Trail& t = family[i];
    if (!is_closed_strict_trail(h, t)) return "trail " + std::to_string(i) + " is not a closed strict trail";
    for (EdgeIndex e : t.edges) ++uses[e];
    for (VertexIndex v : anchor_set(t)) {
      if (owner[v] != static_cast<std::size_t>(-1)) {
        return "trails " + std::to_string(owner[v]) + " and " + std::to_string(i) + " share anchor '" +
               h.vertex_id(v) + "'";
      }
      owner[v] = i;
    }
  }
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    if (uses[e] != 1) return "edge '" + h.edge_id(e) + "' traversed " + std::to_string(uses[e]) + " times";
  }
  return {};
}

inline bool is_euler_family(const Hypergraph& h, const EulerFamily& family) {
  return family_violation(h, family).empty();
}

inline bool is_euler_tour(const Hypergraph& h, const Trail& t) { return is_euler_family(h, {t}); }

/// Closed trail traversing every flag of `h` exactly once.
inline bool is_flag_traversing_tour(const Hypergraph& h, const Trail& t) {
  if (!t.closed() || !is_trail(h, t)) return false;
  return 2 * t.length() == h.flag_count();
}

/// Rotation/reflection of a closed trail that starts at its minimum anchor
/// and is lexicographically smallest among such representations.
inline Trail canonical(const Trail& t) {
  if (!t.closed()) return t;
  const std::size_t k = t.edges.size();
  // Cyclic sequences: anchor i sits between edge i-1 and edge i.
  auto build = [&](std::size_t start, bool reversed) {
    Trail out;
    for (std::size_t step = 0; step < k; ++step) {
      if (!reversed) {
        std::size_t i = (start + step) % k;
        out.anchors.push_back(t.anchors[i]);
        out.edges.push_back(t.edges[i]);
      } else {
        std::size_t i = (start + k - step) % k;
        out.anchors.push_back(t.anchors[i]);
        out.edges.push_back(t.edges[(i + k - 1) % k]);
      }
    }
    out.anchors.push_back(out.anchors.front());
    return out;
  };
  VertexIndex lowest = *std::min_element(t.anchors.begin(), t.anchors.end() - 1);
  std::optional<Trail> best;
  for (std::size_t i = 0; i < k; ++i) {
    if (t.anchors[i] != lowest) continue;
    for (bool reversed : {false, true}) {
      Trail candidate = build(i, reversed);
      auto key = [](const Trail& x) {
        std::vector<std::size_t> seq;
        for (std::size_t j = 0; j < x.edges.size(); ++j) {
          seq.push_back(x.anchors[j]);
          seq.push_back(x.edges[j]);
        }
        return seq;
      };
      if (!best || key(candidate) < key(*best)) best = std::move(candidate);
    }
  }
  return *best;
}

/// Canonical trails, sorted.
inline EulerFamily canonical(EulerFamily family) {
  for (auto& t : family) t = canonical(t);
  std::sort(family.begin(), family.end());
  return family;
}

/// Rotates closed trail `t` so that it starts (and ends) at anchor `v`.
inline Trail rotate_to(const Trail& t, VertexIndex v) {
  const std::size_t k = t.edges.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (t.anchors[i] != v) continue;
    Trail out;
    for (std::size_t step = 0; step < k; ++step) {
      out.anchors.push_back(t.anchors[(i + step) % k]);
      out.edges.push_back(t.edges[(i + step) % k]);
    }
    out.anchors.push_back(v);
    return out;
  }
  throw HypergraphError("vertex is not an anchor of the trail");
}

inline Trail reversed(const Trail& t) {
  Trail out{{t.anchors.rbegin(), t.anchors.rend()}, {t.edges.rbegin(), t.edges.rend()}};
  return out;
}

/// Concatenates closed strict trails that share an anchor until the trails
/// are pairwise anchor-disjoint. Edge-disjoint input stays edge-disjoint.
inline EulerFamily concatenate_at_shared_anchors(EulerFamily family) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < family.size() && !merged; ++i) {
      auto anchors_i = anchor_set(family[i]);
      for (std::size_t j = i + 1; j < family.size() && !merged; ++j) {
        auto anchors_j = anchor_set(family[j]);
        std::vector<VertexIndex> common;
        std::set_intersection(anchors_i.begin(), anchors_i.end(), anchors_j.begin(), anchors_j.end(),
                              std::back_inserter(common));
        if (common.empty()) continue;
        Trail a = rotate_to(family[i], common.front());
        Trail b = rotate_to(family[j], common.front());
        a.anchors.pop_back();
        a.anchors.insert(a.anchors.end(), b.anchors.begin(), b.anchors.end());
        a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
        family[i] = std::move(a);
        family.erase(family.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
      }
    }
  }
  return family;
}

/// "v0 e1 v1 … ek vk" in identifiers.
inline std::string to_string(const Hypergraph& h, const Trail& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    out << h.vertex_id(t.anchors[i]) << ' ' << h.edge_id(t.edges[i]) << ' ';
  }
  if (!t.anchors.empty()) out << h.vertex_id(t.anchors.back());
  return out.str();
}

/// Inverse of to_string; throws HypergraphError on unknown identifiers or
/// a token count that does not alternate vertex/edge.
inline Trail parse_trail(const Hypergraph& h, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty() || tokens.size() % 2 == 0) throw HypergraphError("trail must alternate vertices and edges");
  Trail t;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i % 2 == 0) {
      t.anchors.push_back(h.vertex_index(tokens[i]));
    } else {
      t.edges.push_back(h.edge_index(tokens[i]));
    }
  }
  return t;
}

}  // namespace hypereuler
