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

// Reference implementations used only by tests. Each one follows the
// definition directly and shares no code with the library algorithm it
// checks.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hypereuler.hpp"

namespace hypereuler::testing {

inline Hypergraph fixture(const std::string& file) {
  return io::read_file(std::string(HYPEREULER_FIXTURES) + "/" + file).hypergraph;
}

// --- matchings --------------------------------------------------------------

inline std::size_t brute_max_matching(const Graph& g) {
  const auto& edges = g.edges();
  std::size_t best = 0;
  std::vector<bool> used(g.node_count(), false);
  auto search = [&](auto&& self, std::size_t from, std::size_t size) -> void {
    best = std::max(best, size);
    for (std::size_t i = from; i < edges.size(); ++i) {
      auto [u, w] = edges[i];
      if (used[u] || used[w]) continue;
      used[u] = used[w] = true;
      self(self, i + 1, size + 1);
      used[u] = used[w] = false;
    }
  };
  search(search, 0, 0);
  return best;
}

// Subsets of links plus loop counts with deg = f (loops count twice).
inline bool brute_f_factor_exists(const matching::LoopyGraph& x, const std::vector<std::size_t>& f) {
  const std::size_t links = x.links.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << links); ++mask) {
    std::vector<std::size_t> deg(x.node_count, 0);
    for (std::size_t i = 0; i < links; ++i) {
      if (mask >> i & 1U) {
        ++deg[x.links[i].first];
        ++deg[x.links[i].second];
      }
    }
    bool ok = true;
    for (std::size_t u = 0; u < x.node_count && ok; ++u) {
      ok = deg[u] <= f[u] && (f[u] - deg[u]) % 2 == 0 && (f[u] - deg[u]) / 2 <= x.loops[u];
    }
    if (ok) return true;
  }
  return false;
}

// Two flags per edge, every vertex even.
inline bool brute_ef_factor_exists(const Hypergraph& h) {
  std::vector<std::vector<std::pair<VertexIndex, VertexIndex>>> options(h.size());
  for (EdgeIndex e = 0; e < h.size(); ++e) {
    auto members = h.edge(e);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) options[e].emplace_back(members[i], members[j]);
    }
    if (options[e].empty()) return false;
  }
  std::vector<std::size_t> parity(h.order(), 0);
  auto search = [&](auto&& self, EdgeIndex e) -> bool {
    if (e == h.size()) {
      return std::all_of(parity.begin(), parity.end(), [](std::size_t p) { return p % 2 == 0; });
    }
    for (auto [a, b] : options[e]) {
      ++parity[a];
      ++parity[b];
      if (self(self, e + 1)) return true;
      --parity[a];
      --parity[b];
    }
    return false;
  };
  return search(search, 0);
}

// --- blocks -----------------------------------------------------------------

inline std::vector<VertexIndex> vertices_of(const Hypergraph& h, const std::vector<EdgeIndex>& edges) {
  std::set<VertexIndex> out;
  for (EdgeIndex e : edges) out.insert(h.edge(e).begin(), h.edge(e).end());
  return {out.begin(), out.end()};
}

inline bool edges_connected(const Hypergraph& h, const std::vector<EdgeIndex>& edges) {
  if (edges.empty()) return false;
  std::vector<bool> reached(edges.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (!reached[j] && intersection_size(h.edge(edges[i]), h.edge(edges[j])) > 0) {
        reached[j] = true;
        stack.push_back(j);
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

// Vertices v such that the edge set splits into two non-empty connected
// parts whose vertex sets meet exactly in {v}.
inline std::set<VertexIndex> separating_by_definition(const Hypergraph& h, const std::vector<EdgeIndex>& edges) {
  std::set<VertexIndex> out;
  const std::size_t k = edges.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
    std::vector<EdgeIndex> a, b;
    for (std::size_t i = 0; i < k; ++i) (mask >> i & 1U ? a : b).push_back(edges[i]);
    if (!edges_connected(h, a) || !edges_connected(h, b)) continue;
    auto va = vertices_of(h, a);
    auto vb = vertices_of(h, b);
    std::vector<VertexIndex> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (common.size() == 1) out.insert(common[0]);
  }
  return out;
}

inline bool non_separable(const Hypergraph& h, const std::vector<EdgeIndex>& edges) {
  return edges_connected(h, edges) && separating_by_definition(h, edges).empty();
}

// Maximal non-separable edge sets, each sorted, as a sorted list; isolated
// vertices contribute empty edge sets, listed once per vertex.
inline std::vector<std::vector<EdgeIndex>> blocks_by_definition(const Hypergraph& h) {
  const std::size_t m = h.size();
  std::vector<std::uint64_t> good;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<EdgeIndex> edges;
    for (EdgeIndex e = 0; e < m; ++e) {
      if (mask >> e & 1U) edges.push_back(e);
    }
    if (non_separable(h, edges)) good.push_back(mask);
  }
  std::vector<std::vector<EdgeIndex>> out;
  for (std::uint64_t a : good) {
    bool maximal = std::none_of(good.begin(), good.end(), [&](std::uint64_t b) { return b != a && (a & b) == a; });
    if (!maximal) continue;
    std::vector<EdgeIndex> edges;
    for (EdgeIndex e = 0; e < m; ++e) {
      if (a >> e & 1U) edges.push_back(e);
    }
    out.push_back(std::move(edges));
  }
  for (VertexIndex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == 0) out.emplace_back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Separating vertices of H, taken component by component.
inline std::set<VertexIndex> separating_vertices_by_definition(const Hypergraph& h) {
  std::set<VertexIndex> out;
  for (const auto& c : structure::components(h)) {
    if (c.edges.size() < 2) continue;
    auto s = separating_by_definition(h, c.edges);
    out.insert(s.begin(), s.end());
  }
  return out;
}

// --- Hamilton cycles --------------------------------------------------------

inline std::optional<std::vector<VertexIndex>> brute_hamilton_cycle(const Hypergraph& graph) {
  const std::size_t n = graph.order();
  if (n < 3) return std::nullopt;
  std::vector<VertexIndex> order(n);
  std::iota(order.begin(), order.end(), VertexIndex{0});
  do {
    if (certify::is_hamilton_cycle(graph, order)) return order;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return std::nullopt;
}

// --- DOT --------------------------------------------------------------------

struct DotGraph {
  std::map<std::string, std::string> side;  // node -> side attribute
  std::multiset<std::pair<std::string, std::string>> edges;
};

// Reads the subset of DOT emitted by io::incidence_dot.
inline DotGraph read_dot(const std::string& text) {
  DotGraph g;
  static const std::regex node_re(R"re(^\s*"([^"]*)"\s*\[.*side=([ve])\];\s*$)re");
  static const std::regex edge_re(R"re(^\s*"([^"]*)"\s*--\s*"([^"]*)".*;\s*$)re");
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    std::smatch m;
    if (std::regex_match(line, m, edge_re)) {
      g.edges.emplace(std::min(m[1].str(), m[2].str()), std::max(m[1].str(), m[2].str()));
    } else if (std::regex_match(line, m, node_re)) {
      g.side[m[1]] = m[2];
    }
    start = end + 1;
  }
  return g;
}

// --- corpus -----------------------------------------------------------------

struct Instance {
  std::string name;
  Hypergraph h;
};

/// Hypergraphs with at most 5 edges and 6 vertices: named small cases, the
/// singleton-edge family for n = 3, 4, 5, and seeded random instances with
/// mixed edge sizes. At least `random_count` random instances.
inline std::vector<Instance> small_corpus(std::size_t random_count = 560, std::uint64_t seed = 20260101) {
  std::vector<Instance> out;
  out.push_back({"digon", generate::digon()});
  out.push_back({"triple", generate::single_triple()});
  out.push_back({"overlap", fixture("overlap.hg")});
  out.push_back({"two_digons", fixture("two_digons.hg")});
  out.push_back({"digons_at_a", fixture("digons_at_a.hg")});
  out.push_back({"chain", fixture("chain.hg")});
  for (std::size_t n = 3; n <= 5; ++n) out.push_back({"singleton_n" + std::to_string(n), generate::singleton_example(n)});
  out.push_back({"c4", generate::cycle_graph(4)});
  out.push_back({"k4_dual", dual(generate::complete_graph(4))});
  generate::Rng rng(seed);
  std::uniform_int_distribution<std::size_t> order(2, 6), size(1, 5);
  for (std::size_t i = 0; i < random_count; ++i) {
    std::size_t n = order(rng);
    std::size_t m = size(rng);
    std::size_t max_size = std::min<std::size_t>(n, 4);
    std::size_t min_size = (i % 4 == 0) ? 1 : 2;
    out.push_back({"random_" + std::to_string(i), generate::random_hypergraph(rng, n, m, min_size, max_size)});
  }
  return out;
}

}  // namespace hypereuler::testing
