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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hypereuler/hypergraph.hpp"

namespace hypereuler::generate {

using Rng = std::mt19937_64;

namespace detail {

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t count, std::size_t base = 1) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i + base));
  return out;
}

inline std::size_t uniform_index(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

inline std::vector<VertexIndex> random_subset(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<VertexIndex> all(n);
  std::iota(all.begin(), all.end(), VertexIndex{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

inline Hypergraph assemble(std::size_t n, std::vector<std::vector<VertexIndex>> edges,
                           const std::string& vertex_prefix = "v", const std::string& edge_prefix = "e") {
  auto vertex_ids = numbered(vertex_prefix, n);
  auto edge_ids = numbered(edge_prefix, edges.size());
  return Hypergraph::from_indices(std::move(vertex_ids), std::move(edge_ids), std::move(edges));
}

}  // namespace detail

/// n vertices and m edges with sizes drawn uniformly from [min_size, max_size].
inline Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t m, std::size_t min_size,
                                    std::size_t max_size) {
  if (n == 0 || min_size == 0 || min_size > max_size || max_size > n) {
    throw HypergraphError("invalid random hypergraph parameters");
  }
  std::vector<std::vector<VertexIndex>> edges;
  std::uniform_int_distribution<std::size_t> size(min_size, max_size);
  for (std::size_t i = 0; i < m; ++i) edges.push_back(detail::random_subset(rng, n, size(rng)));
  return detail::assemble(n, std::move(edges));
}

/// Random k-uniform hypergraph; parallel edges may occur.
inline Hypergraph random_uniform(Rng& rng, std::size_t n, std::size_t m, std::size_t k) {
  return random_hypergraph(rng, n, m, k, k);
}

/// Random hypergraph with every edge size and every degree even: random
/// even-size edges, then 2-edges pairing up the odd-degree vertices.
inline Hypergraph random_flag_even(Rng& rng, std::size_t n, std::size_t m, std::size_t max_size) {
  if (n < 2 || max_size < 2) throw HypergraphError("invalid flag-even parameters");
  std::vector<std::vector<VertexIndex>> edges;
  std::uniform_int_distribution<std::size_t> half(1, std::min(max_size, n) / 2);
  for (std::size_t i = 0; i < m; ++i) edges.push_back(detail::random_subset(rng, n, 2 * half(rng)));
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges) {
    for (VertexIndex v : e) ++deg[v];
  }
  std::vector<VertexIndex> odd;
  for (VertexIndex v = 0; v < n; ++v) {
    if (deg[v] % 2 == 1) odd.push_back(v);
  }
  std::shuffle(odd.begin(), odd.end(), rng);
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
    edges.push_back({std::min(odd[i], odd[i + 1]), std::max(odd[i], odd[i + 1])});
  }
  return detail::assemble(n, std::move(edges));
}

/// Random 2k-uniform hypergraph with every degree even. Odd-degree vertices
/// are paired as x, y and repaired by adding {x} ∪ A and {y} ∪ A for a random
/// (2k−1)-set A avoiding both, which leaves the degrees of A even.
inline Hypergraph random_even_uniform(Rng& rng, std::size_t n, std::size_t m, std::size_t k) {
  const std::size_t size = 2 * k;
  if (k == 0 || size + 1 > n) throw HypergraphError("even uniform generator needs n > 2k");
  std::vector<std::vector<VertexIndex>> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back(detail::random_subset(rng, n, size));
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges) {
    for (VertexIndex v : e) ++deg[v];
  }
  std::vector<VertexIndex> odd;
  for (VertexIndex v = 0; v < n; ++v) {
    if (deg[v] % 2 == 1) odd.push_back(v);
  }
  std::shuffle(odd.begin(), odd.end(), rng);
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
    VertexIndex x = odd[i];
    VertexIndex y = odd[i + 1];
    std::vector<VertexIndex> rest;
    for (VertexIndex v = 0; v < n; ++v) {
      if (v != x && v != y) rest.push_back(v);
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    rest.resize(size - 1);
    for (VertexIndex end : {x, y}) {
      std::vector<VertexIndex> e = rest;
      e.push_back(end);
      std::sort(e.begin(), e.end());
      edges.push_back(std::move(e));
    }
  }
  return detail::assemble(n, std::move(edges));
}

/// Complete r-uniform hypergraph on n vertices (every r-subset once).
inline Hypergraph complete_uniform(std::size_t n, std::size_t r) {
  std::vector<std::vector<VertexIndex>> edges;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::vector<VertexIndex> e;
    for (VertexIndex v = 0; v < n; ++v) {
      if (pick[v]) e.push_back(v);
    }
    edges.push_back(std::move(e));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return detail::assemble(n, std::move(edges));
}

/// Simple graph as a 2-uniform hypergraph with vertices 1..n and edges g1…gm.
inline Hypergraph graph_from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<VertexIndex>> edges;
  for (auto [u, w] : pairs) edges.push_back({std::min(u, w), std::max(u, w)});
  return Hypergraph::from_indices(detail::numbered("", n), detail::numbered("g", pairs.size()), std::move(edges));
}

struct PlantedCubic {
  Hypergraph graph;
  std::vector<VertexIndex> hamilton_cycle;
};

/// Random simple cubic graph on n vertices (n even, n ≥ 4) containing a
/// planted Hamilton cycle: a random cyclic order plus a random perfect
/// matching of chords, resampled until simple.
inline PlantedCubic random_cubic_hamiltonian(Rng& rng, std::size_t n) {
  if (n < 4 || n % 2 != 0) throw HypergraphError("cubic graphs need an even order of at least 4");
  std::vector<VertexIndex> order(n);
  std::iota(order.begin(), order.end(), VertexIndex{0});
  std::shuffle(order.begin(), order.end(), rng);
  while (true) {
    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      VertexIndex u = order[i];
      VertexIndex w = order[(i + 1) % n];
      adjacent[u][w] = adjacent[w][u] = true;
      pairs.emplace_back(u, w);
    }
    std::vector<VertexIndex> shuffled(n);
    std::iota(shuffled.begin(), shuffled.end(), VertexIndex{0});
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    bool simple = true;
    for (std::size_t i = 0; i < n && simple; i += 2) {
      VertexIndex u = shuffled[i];
      VertexIndex w = shuffled[i + 1];
      if (adjacent[u][w]) simple = false;
      adjacent[u][w] = adjacent[w][u] = true;
      pairs.emplace_back(u, w);
    }
    if (simple) return {graph_from_pairs(n, pairs), order};
  }
}

// Named instances.

inline Hypergraph digon() {
  return Hypergraph::build({"a", "b"}, {{"e1", {"a", "b"}}, {"e2", {"a", "b"}}});
}

inline Hypergraph single_triple() { return Hypergraph::build({"a", "b", "c"}, {{"e", {"a", "b", "c"}}}); }

/// Points 1..7, lines l1..l7 of the projective plane of order 2.
inline Hypergraph fano() {
  return Hypergraph::build({"1", "2", "3", "4", "5", "6", "7"}, {{"l1", {"1", "2", "3"}},
                                                                {"l2", {"1", "4", "5"}},
                                                                {"l3", {"1", "6", "7"}},
                                                                {"l4", {"2", "4", "6"}},
                                                                {"l5", {"2", "5", "7"}},
                                                                {"l6", {"3", "4", "7"}},
                                                                {"l7", {"3", "5", "6"}}});
}

inline Hypergraph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) pairs.emplace_back(u, w);
  }
  return graph_from_pairs(n, pairs);
}

inline Hypergraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t w = 0; w < b; ++w) pairs.emplace_back(u, a + w);
  }
  return graph_from_pairs(a + b, pairs);
}

inline Hypergraph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return graph_from_pairs(n, pairs);
}

/// Outer 5-cycle 1..5, spokes to 6..10, inner pentagram.
inline Hypergraph petersen() {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return graph_from_pairs(10, pairs);
}

/// Vertices v1..vn, n ≥ 3: e1 = {v1}, e2 = {v1, v2, vn}, ei = {v(i-1), vi}
/// for i ≥ 3. 2-regular, yet the singleton edge rules out an Euler family.
inline Hypergraph singleton_example(std::size_t n) {
  if (n < 3) throw HypergraphError("singleton example needs n >= 3");
  std::vector<std::vector<VertexIndex>> edges{{0}, {0, 1, n - 1}};
  for (std::size_t i = 3; i <= n; ++i) edges.push_back({i - 2, i - 1});
  for (auto& e : edges) std::sort(e.begin(), e.end());
  edges[1].erase(std::unique(edges[1].begin(), edges[1].end()), edges[1].end());
  return detail::assemble(n, std::move(edges));
}

/// Vertices v1..vn, n ≥ 7: e1 = {v1, v2, v3}, ei = {v(i+1), v(i+2), v(i+3)}
/// for 2 ≤ i ≤ n−3, and e(n-2), e(n-1), en = {v3|v4|v5, v(n-1), vn}. Passes the
/// counting conditions, but e1 has only one vertex of degree at least two.
inline Hypergraph pendant_example(std::size_t n) {
  if (n < 7) throw HypergraphError("pendant example needs n >= 7");
  std::vector<std::vector<VertexIndex>> edges{{0, 1, 2}};
  for (std::size_t i = 2; i <= n - 3; ++i) edges.push_back({i, i + 1, i + 2});
  for (VertexIndex first : {2, 3, 4}) edges.push_back({first, n - 2, n - 1});
  return detail::assemble(n, std::move(edges));
}

}  // namespace hypereuler::generate
