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

#include <gtest/gtest.h>

#include "support.hpp"

namespace hypereuler {
namespace {

using derived::IncidenceGraph;
using derived::IntersectionMode;
using testing::fixture;

TEST(Incidence, DigonIsFourCycle) {
  IncidenceGraph g(generate::digon());
  EXPECT_EQ(g.graph().node_count(), 4u);
  EXPECT_EQ(g.graph().edge_count(), 4u);
  for (std::size_t u = 0; u < 4; ++u) EXPECT_EQ(g.graph().degree(u), 2u);
  EXPECT_EQ(g.label(g.v_node(0)), "a");
  EXPECT_EQ(g.label(g.e_node(1)), "e2");
}

TEST(Incidence, TripleIsStar) {
  IncidenceGraph g(generate::single_triple());
  EXPECT_EQ(g.graph().degree(g.e_node(0)), 3u);
  for (VertexIndex v = 0; v < 3; ++v) EXPECT_EQ(g.graph().degree(g.v_node(v)), 1u);
}

TEST(Incidence, FanoCounts) {
  IncidenceGraph g(generate::fano());
  EXPECT_EQ(g.graph().node_count(), 14u);
  EXPECT_EQ(g.graph().edge_count(), 21u);
  for (std::size_t u = 0; u < 14; ++u) EXPECT_EQ(g.graph().degree(u), 3u);
}

TEST(Incidence, InvariantsOnCorpus) {
  for (const auto& in : testing::small_corpus(100)) {
    IncidenceGraph g(in.h);
    ASSERT_TRUE(bipartition(g.graph()).has_value()) << in.name;
    for (VertexIndex v = 0; v < in.h.order(); ++v) EXPECT_EQ(g.graph().degree(g.v_node(v)), in.h.degree(v));
    for (EdgeIndex e = 0; e < in.h.size(); ++e) EXPECT_EQ(g.graph().degree(g.e_node(e)), in.h.edge_size(e));
    for (std::size_t id = 0; id < g.graph().edge_count(); ++id) {
      const Flag& f = g.flag(id);
      EXPECT_TRUE(in.h.contains(f.edge, f.vertex));
      EXPECT_EQ(g.flag_index(f.vertex, f.edge), id);
    }
    std::set<std::pair<std::size_t, std::size_t>> seen(g.graph().edges().begin(), g.graph().edges().end());
    EXPECT_EQ(seen.size(), g.graph().edge_count()) << "simple";
  }
}

TEST(Incidence, DualSwapsSides) {
  for (const auto& in : testing::small_corpus(80)) {
    bool isolated = false;
    for (VertexIndex v = 0; v < in.h.order(); ++v) isolated |= in.h.degree(v) == 0;
    if (in.h.size() == 0 || isolated) continue;
    Hypergraph d = dual(in.h);
    IncidenceGraph g(in.h), gd(d);
    std::multiset<std::pair<std::string, std::string>> a, b;
    for (const Flag& f : g.flags()) a.emplace(in.h.vertex_id(f.vertex), in.h.edge_id(f.edge));
    for (const Flag& f : gd.flags()) b.emplace(d.edge_id(f.edge), d.vertex_id(f.vertex));
    EXPECT_EQ(a, b) << in.name;
  }
}

TEST(Incidence, ConnectivityMatchesHypergraph) {
  for (const auto& in : testing::small_corpus(100)) {
    if (in.h.has_empty_edge()) continue;
    IncidenceGraph g(in.h);
    std::size_t count = 0;
    component_labels(g.graph(), {}, {}, &count);
    EXPECT_EQ(count == 1, structure::is_connected(in.h)) << in.name;
  }
}

TEST(Intersection, DigonAny) {
  Graph g = derived::intersection_graph(generate::digon(), IntersectionMode::kAny);
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(Intersection, FanoAtLeastTwoIsEdgeless) {
  Graph g = derived::intersection_graph(generate::fano(), IntersectionMode::kAtLeast, 2);
  EXPECT_EQ(g.node_count(), 7u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Intersection, SingletonExampleIsPath) {
  Hypergraph h = fixture("singleton_n3.hg");
  Graph g = derived::intersection_graph(h, IntersectionMode::kAny);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Intersection, ZeroThresholdRejected) {
  EXPECT_THROW(derived::intersection_graph(generate::digon(), IntersectionMode::kExactly, 0), HypergraphError);
  EXPECT_THROW(derived::intersection_graph(generate::digon(), IntersectionMode::kAtLeast, 0), HypergraphError);
}

// Edges of L split by exact intersection size; L_l* is the union over j >= l.
TEST(Intersection, LayersPartitionAnyMode) {
  auto edge_set = [](const Graph& g) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (auto [u, w] : g.edges()) out.emplace(std::min(u, w), std::max(u, w));
    return out;
  };
  for (const auto& in : testing::small_corpus(120)) {
    auto any = edge_set(derived::intersection_graph(in.h, IntersectionMode::kAny));
    std::set<std::pair<std::size_t, std::size_t>> layers;
    std::size_t total = 0;
    for (std::size_t ell = 1; ell <= 6; ++ell) {
      auto exact = edge_set(derived::intersection_graph(in.h, IntersectionMode::kExactly, ell));
      total += exact.size();
      layers.insert(exact.begin(), exact.end());
      std::set<std::pair<std::size_t, std::size_t>> union_above;
      for (std::size_t j = ell; j <= 6; ++j) {
        auto e = edge_set(derived::intersection_graph(in.h, IntersectionMode::kExactly, j));
        union_above.insert(e.begin(), e.end());
      }
      EXPECT_EQ(edge_set(derived::intersection_graph(in.h, IntersectionMode::kAtLeast, ell)), union_above);
    }
    EXPECT_EQ(layers, any) << in.name;
    EXPECT_EQ(total, any.size()) << in.name;
  }
}

TEST(D3, SymmetricPair) {
  Hypergraph h = Hypergraph::build({"a", "b", "c", "d", "x"}, {{"e", {"a", "b", "c", "d"}}, {"f", {"a", "b", "c", "x"}}});
  auto d = derived::d3_digraph(h);
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_TRUE(d.has_arc(1, 0));
  EXPECT_EQ(d.arcs.size(), 2u);
}

TEST(D3, DigonHasNoArcs) { EXPECT_TRUE(derived::d3_digraph(generate::digon()).arcs.empty()); }

TEST(D3, Chain) {
  auto d = derived::d3_digraph(fixture("chain.hg"));
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_TRUE(d.has_arc(1, 0));
  EXPECT_TRUE(d.has_arc(1, 2));
  EXPECT_TRUE(d.has_arc(2, 1));
  EXPECT_FALSE(d.has_arc(0, 2));
  EXPECT_FALSE(d.has_arc(2, 0));
  EXPECT_EQ(d.arcs.size(), 4u);
}

TEST(D3, MatchesDefinitionOnCorpus) {
  for (const auto& in : testing::small_corpus(150)) {
    auto d = derived::d3_digraph(in.h);
    for (EdgeIndex e = 0; e < in.h.size(); ++e) {
      for (EdgeIndex f = 0; f < in.h.size(); ++f) {
        std::size_t outside = 0;
        for (VertexIndex v : in.h.edge(f)) outside += !in.h.contains(e, v);
        bool want = e != f && outside == 1 && intersection_size(in.h.edge(e), in.h.edge(f)) >= 3;
        EXPECT_EQ(d.has_arc(e, f), want) << in.name;
      }
    }
  }
}

}  // namespace
}  // namespace hypereuler
