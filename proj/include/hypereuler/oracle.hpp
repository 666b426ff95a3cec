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
#include <optional>
#include <string>
#include <vector>

#include "hypereuler/hypergraph.hpp"
#include "hypereuler/trail.hpp"

// Exhaustive reference solvers. They share no code with the matching-based
// solvers beyond the trail validators.

namespace hypereuler::certify {

/// Raised when an exhaustive procedure is asked to run beyond its size cap.
class LimitError : public HypergraphError {
 public:
  using HypergraphError::HypergraphError;
};

struct OracleLimits {
  std::size_t max_edges = 5;
  std::size_t max_vertices = 6;
};

inline void require_within(const Hypergraph& h, const OracleLimits& limits) {
  if (h.size() > limits.max_edges || h.order() > limits.max_vertices) {
    throw LimitError("instance exceeds the brute-force cap of " + std::to_string(limits.max_edges) + " edges and " +
                     std::to_string(limits.max_vertices) + " vertices");
  }
}

namespace detail {

// First Euler tour over the edges in `subset` (indices into h), trying every
// cyclic order that starts with subset[0] and every anchor assignment.
inline std::optional<Trail> tour_over(const Hypergraph& h, const std::vector<EdgeIndex>& subset) {
  const std::size_t k = subset.size();
  if (k < 2) return std::nullopt;
  std::vector<EdgeIndex> order = subset;
  std::sort(order.begin() + 1, order.end());
  do {
    // choices[i]: candidates for the anchor between order[i-1] and order[i].
    std::vector<std::vector<VertexIndex>> choices(k);
    bool feasible = true;
    for (std::size_t i = 0; i < k && feasible; ++i) {
      choices[i] = intersection(h.edge(order[(i + k - 1) % k]), h.edge(order[i]));
      feasible = !choices[i].empty();
    }
    if (!feasible) continue;
    std::vector<std::size_t> digit(k, 0);
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        ok = choices[i][digit[i]] != choices[(i + 1) % k][digit[(i + 1) % k]];
      }
      if (ok) {
        Trail t;
        for (std::size_t i = 0; i < k; ++i) {
          t.anchors.push_back(choices[i][digit[i]]);
          t.edges.push_back(order[i]);
        }
        t.anchors.push_back(t.anchors.front());
        if (is_closed_strict_trail(h, t)) return t;
      }
      std::size_t pos = 0;
      while (pos < k && ++digit[pos] == choices[pos].size()) digit[pos++] = 0;
      if (pos == k) break;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return std::nullopt;
}

inline bool partition_search(const Hypergraph& h, std::vector<bool>& assigned, EulerFamily& parts) {
  auto first = std::find(assigned.begin(), assigned.end(), false);
  if (first == assigned.end()) return true;
  const EdgeIndex anchor = static_cast<EdgeIndex>(first - assigned.begin());
  std::vector<EdgeIndex> rest;
  for (EdgeIndex e = anchor + 1; e < h.size(); ++e) {
    if (!assigned[e]) rest.push_back(e);
  }
  // Every subset of the remaining edges joins the lowest unassigned edge.
  for (std::size_t mask = 1; mask < (std::size_t{1} << rest.size()); ++mask) {
    std::vector<EdgeIndex> part{anchor};
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (mask >> i & 1U) part.push_back(rest[i]);
    }
    auto t = tour_over(h, part);
    if (!t) continue;
    for (EdgeIndex e : part) assigned[e] = true;
    parts.push_back(*t);
    if (partition_search(h, assigned, parts)) return true;
    parts.pop_back();
    for (EdgeIndex e : part) assigned[e] = false;
  }
  return false;
}

}  // namespace detail

/// Euler tour by enumeration of edge orders and anchor choices.
inline std::optional<Trail> brute_force_tour(const Hypergraph& h, const OracleLimits& limits = {}) {
  require_within(h, limits);
  require_no_empty_edges(h);
  std::vector<EdgeIndex> all(h.size());
  std::iota(all.begin(), all.end(), EdgeIndex{0});
  return detail::tour_over(h, all);
}

/// Euler family by enumeration of edge partitions into parts that each
/// carry a closed strict trail; the trails are then joined at common anchors.
inline std::optional<EulerFamily> brute_force_family(const Hypergraph& h, const OracleLimits& limits = {}) {
  require_within(h, limits);
  require_no_empty_edges(h);
  std::vector<bool> assigned(h.size(), false);
  EulerFamily parts;
  if (!detail::partition_search(h, assigned, parts)) return std::nullopt;
  return concatenate_at_shared_anchors(std::move(parts));
}

}  // namespace hypereuler::certify
