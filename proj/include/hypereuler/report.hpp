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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hypereuler/euler.hpp"
#include "hypereuler/hypergraph.hpp"
#include "hypereuler/structure.hpp"
#include "hypereuler/trail.hpp"

namespace hypereuler::report {

inline constexpr int kSchemaVersion = 1;

struct Verdict {
  std::string status;                    // found | none | budget-exceeded | not-applicable
  std::string reason;                    // set unless status is "found"
  std::vector<std::string> certificate;  // canonical trails
};

struct CutEdgeEntry {
  std::string edge;
  std::size_t components_before = 0;
  std::size_t components_after = 0;
  bool strong = false;
};

struct BlockEntry {
  std::vector<std::string> edges;
  std::vector<std::string> vertices;
  std::vector<std::string> separating;
};

struct Report {
  std::string name;
  std::size_t order = 0;
  std::size_t size = 0;
  Stats stats;
  std::optional<euler::NecessaryReport> necessary;
  std::vector<CutEdgeEntry> cut_edges;
  std::vector<BlockEntry> blocks;
  std::size_t components = 0;
  bool has_empty_edge = false;
  Verdict flag_tour;
  Verdict family;
  Verdict tour;
  std::optional<std::uint64_t> tour_expansions;
  bool d3_applicable = false;
  std::optional<double> elapsed_ms;
};

struct Options {
  std::optional<std::uint64_t> budget;
  bool timing = false;
};

namespace detail {

inline std::vector<std::string> names(const Hypergraph& h, const std::vector<VertexIndex>& vs) {
  std::vector<std::string> out;
  for (VertexIndex v : vs) out.push_back(h.vertex_id(v));
  return out;
}

inline std::vector<std::string> edge_names(const Hypergraph& h, const std::vector<EdgeIndex>& es) {
  std::vector<std::string> out;
  for (EdgeIndex e : es) out.push_back(h.edge_id(e));
  return out;
}

inline Verdict found(std::vector<std::string> certificate) { return {"found", "", std::move(certificate)}; }
inline Verdict negative(std::string status, std::string reason) { return {std::move(status), std::move(reason), {}}; }

}  // namespace detail

/// Runs every solver on `h`. Certificates are validated before they are
/// recorded; a failed validation raises std::logic_error.
inline Report analyze(const Hypergraph& h, const std::string& name, const Options& options = {}) {
  auto started = std::chrono::steady_clock::now();
  Report r;
  r.name = name;
  r.order = h.order();
  r.size = h.size();
  r.stats = stats(h);
  r.necessary = euler::check_necessary(h);
  r.has_empty_edge = h.has_empty_edge();
  if (r.has_empty_edge) {
    const std::string why = "hypergraph has an empty edge";
    r.flag_tour = r.family = r.tour = detail::negative("not-applicable", why);
  } else {
    r.components = structure::component_count(h);
    for (const auto& c : structure::cut_edges(h)) {
      r.cut_edges.push_back({h.edge_id(c.edge), c.components_before, c.components_after, c.strong});
    }
    for (const auto& b : structure::blocks(h)) {
      r.blocks.push_back({detail::edge_names(h, b.edges), detail::names(h, b.vertices), detail::names(h, b.separating)});
    }

    if (r.components != 1) {
      r.flag_tour = detail::negative("not-applicable", "hypergraph is disconnected");
    } else if (auto ft = euler::flag_tour(h)) {
      if (!is_flag_traversing_tour(h, *ft)) throw std::logic_error("flag tour failed validation");
      r.flag_tour = detail::found({to_string(h, canonical(*ft))});
    } else {
      r.flag_tour = detail::negative("none", h.size() == 0 ? "no edges" : "a degree or an edge size is odd");
    }

    if (auto fam = euler::euler_family(h)) {
      if (!is_euler_family(h, *fam)) throw std::logic_error("Euler family failed validation");
      std::vector<std::string> lines;
      for (const Trail& t : canonical(*fam)) lines.push_back(to_string(h, t));
      r.family = detail::found(std::move(lines));
    } else {
      r.family = detail::negative("none", "incidence graph has no EF-factor");
    }

    auto tr = euler::euler_tour_exact(h, options.budget);
    r.tour_expansions = tr.expansions;
    switch (tr.outcome) {
      case euler::TourOutcome::kFound:
        if (!is_euler_tour(h, *tr.tour)) throw std::logic_error("Euler tour failed validation");
        r.tour = detail::found({to_string(h, canonical(*tr.tour))});
        break;
      case euler::TourOutcome::kNone:
        r.tour = detail::negative("none", h.size() < 2 ? "fewer than two edges" : "exhaustive search found no tour");
        break;
      case euler::TourOutcome::kBudgetExceeded:
        r.tour = detail::negative("budget-exceeded", "search stopped after " + std::to_string(tr.expansions) + " expansions");
        break;
    }
    r.d3_applicable = euler::d3_sufficient(h).applicable;
  }
  if (options.timing) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  }
  return r;
}

inline nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["status"] = v.status;
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.certificate.empty()) j["certificate"] = v.certificate;
  return j;
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["name"] = r.name;
  j["order"] = r.order;
  j["size"] = r.size;
  nlohmann::ordered_json s;
  s["degrees"] = r.stats.degrees;
  s["edge_sizes"] = r.stats.edge_sizes;
  s["odd_vertex_count"] = r.stats.odd_vertices.size();
  s["flag_count"] = r.stats.flag_count;
  s["rank"] = r.stats.rank;
  s["corank"] = r.stats.corank;
  s["uniform"] = r.stats.uniform;
  s["regular"] = r.stats.regular;
  s["linear"] = r.stats.linear;
  j["stats"] = s;
  if (r.necessary) {
    const auto& n = *r.necessary;
    nlohmann::ordered_json nj;
    nj["edge_count"] = n.edge_count;
    nj["half_degree_sum"] = n.half_degree_sum;
    nj["odd_vertex_count"] = n.odd_vertex_count;
    nj["excess_sum"] = n.excess_sum;
    nj["degree_inequality"] = n.degree_inequality;
    nj["odd_vertex_inequality"] = n.odd_vertex_inequality;
    nj["corank_at_least_two"] = n.corank_at_least_two;
    nj["edges_with_one_non_pendant"] = n.edges_with_one_non_pendant.size();
    nj["passes"] = n.passes_all();
    j["necessary"] = nj;
  }
  j["components"] = r.components;
  auto cuts = nlohmann::ordered_json::array();
  for (const auto& c : r.cut_edges) {
    nlohmann::ordered_json cj;
    cj["edge"] = c.edge;
    cj["components_before"] = c.components_before;
    cj["components_after"] = c.components_after;
    cj["strong"] = c.strong;
    cuts.push_back(cj);
  }
  j["cut_edges"] = cuts;
  auto blocks = nlohmann::ordered_json::array();
  for (const auto& b : r.blocks) {
    nlohmann::ordered_json bj;
    bj["edges"] = b.edges;
    bj["vertices"] = b.vertices;
    bj["separating"] = b.separating;
    blocks.push_back(bj);
  }
  j["blocks"] = blocks;
  nlohmann::ordered_json v;
  v["flag_tour"] = verdict_json(r.flag_tour);
  v["family"] = verdict_json(r.family);
  v["tour"] = verdict_json(r.tour);
  if (r.tour_expansions) v["tour"]["expansions"] = *r.tour_expansions;
  v["d3_applicable"] = r.d3_applicable;
  j["verdicts"] = v;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

inline std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "instance " << r.name << ": order " << r.order << ", size " << r.size << ", flags " << r.stats.flag_count
      << ", components " << r.components << '\n';
  if (r.necessary) {
    const auto& n = *r.necessary;
    out << "  necessary: |E|=" << n.edge_count << " <= " << n.half_degree_sum << " " << (n.degree_inequality ? "ok" : "FAIL")
        << "; |V_odd|=" << n.odd_vertex_count << " <= " << n.excess_sum << " " << (n.odd_vertex_inequality ? "ok" : "FAIL")
        << "; corank>=2 " << (n.corank_at_least_two ? "ok" : "FAIL") << "; two non-pendant per edge "
        << (n.edges_with_one_non_pendant.empty() ? "ok" : "FAIL") << '\n';
  }
  out << "  cut edges:";
  if (r.cut_edges.empty()) out << " none";
  for (const auto& c : r.cut_edges) {
    out << ' ' << c.edge << '(' << c.components_before << "->" << c.components_after << (c.strong ? ",strong" : ",weak") << ')';
  }
  out << "\n  blocks: " << r.blocks.size() << '\n';
  auto verdict = [&](const char* label, const Verdict& v) {
    out << "  " << label << ": " << v.status;
    if (!v.reason.empty()) out << " (" << v.reason << ')';
    out << '\n';
    for (const auto& line : v.certificate) out << "    " << line << '\n';
  };
  verdict("flag-tour", r.flag_tour);
  verdict("family", r.family);
  verdict("tour", r.tour);
  out << "  d3 sufficient condition: " << (r.d3_applicable ? "applies" : "does not apply") << '\n';
  if (r.elapsed_ms) out << "  elapsed: " << *r.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace hypereuler::report
