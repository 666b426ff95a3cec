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
#include <cstdint>
#include <filesystem>
#include <functional>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypereuler/certify.hpp"
#include "hypereuler/derived.hpp"
#include "hypereuler/euler.hpp"
#include "hypereuler/generate.hpp"
#include "hypereuler/hypergraph.hpp"
#include "hypereuler/io.hpp"
#include "hypereuler/report.hpp"
#include "hypereuler/structure.hpp"
#include "hypereuler/trail.hpp"

// Exit codes: 0 decided (positive), 1 decided negative, 2 error or budget.

namespace hypereuler::cli {

inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kError = 2;

namespace detail {

using Json = nlohmann::ordered_json;

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline io::Document load(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return io::parse(text);
  }
  return io::read_file(path);
}

inline std::string join(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::vector<std::string> trail_lines(const Hypergraph& h, const std::vector<Trail>& trails) {
  std::vector<std::string> out;
  for (const Trail& t : canonical(trails)) out.push_back(to_string(h, t));
  return out;
}

inline Json envelope(const std::string& command, const std::string& name) {
  Json j;
  j["schema"] = report::kSchemaVersion;
  j["command"] = command;
  j["name"] = name;
  return j;
}

// Prints either the JSON envelope or plain lines; returns `code`.
inline int emit(Context& ctx, bool json, Json j, const std::vector<std::string>& lines, int code) {
  if (json) {
    ctx.out << j.dump(2) << '\n';
  } else {
    for (const auto& line : lines) ctx.out << line << '\n';
  }
  return code;
}

inline int cmd_analyze(Context& ctx, std::vector<std::string> files, const std::string& dir, bool json,
                       std::optional<std::uint64_t> budget, bool timing) {
  if (!dir.empty()) {
    std::vector<std::string> found;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".hg") found.push_back(entry.path().string());
    }
    std::sort(found.begin(), found.end());
    files.insert(files.end(), found.begin(), found.end());
  }
  if (files.empty()) {
    ctx.err << "analyze: no input files\n";
    return kError;
  }
  struct Outcome {
    std::string text;
    Json json;
    std::string error;
  };
  auto work = [&ctx, json, budget, timing](const std::string& path) {
    Outcome o;
    try {
      auto doc = load(path, ctx.in);
      auto r = report::analyze(doc.hypergraph, doc.name, {budget, timing});
      if (json) {
        o.json = report::to_json(r);
      } else {
        o.text = report::to_text(r);
      }
    } catch (const std::exception& e) {
      o.error = path + ": " + e.what();
    }
    return o;
  };
  // Files are analysed concurrently; output is written in input order.
  std::vector<std::future<Outcome>> pending;
  for (const auto& path : files) {
    auto policy = path == "-" ? std::launch::deferred : std::launch::async;
    pending.push_back(std::async(policy, work, path));
  }
  int code = kPositive;
  Json all = Json::array();
  for (auto& f : pending) {
    Outcome o = f.get();
    if (!o.error.empty()) {
      ctx.err << "error: " << o.error << '\n';
      code = kError;
      continue;
    }
    if (json) {
      all.push_back(std::move(o.json));
    } else {
      ctx.out << o.text;
    }
  }
  if (json) ctx.out << (files.size() == 1 && !all.empty() ? all[0] : all).dump(2) << '\n';
  return code;
}

inline int cmd_family(Context& ctx, const std::string& path, bool json) {
  auto doc = load(path, ctx.in);
  const auto& h = doc.hypergraph;
  auto j = envelope("family", doc.name);
  auto fam = euler::euler_family(h);
  if (!fam) {
    j["status"] = "none";
    return emit(ctx, json, j, {"none"}, kNegative);
  }
  auto lines = trail_lines(h, *fam);
  j["status"] = "found";
  j["trails"] = lines;
  return emit(ctx, json, j, lines, kPositive);
}

inline int cmd_tour(Context& ctx, const std::string& path, bool json, std::optional<std::uint64_t> budget) {
  auto doc = load(path, ctx.in);
  const auto& h = doc.hypergraph;
  auto j = envelope("tour", doc.name);
  auto result = euler::euler_tour_exact(h, budget);
  j["expansions"] = result.expansions;
  switch (result.outcome) {
    case euler::TourOutcome::kFound: {
      std::string line = to_string(h, canonical(*result.tour));
      j["status"] = "found";
      j["tour"] = line;
      return emit(ctx, json, j, {line}, kPositive);
    }
    case euler::TourOutcome::kNone:
      j["status"] = "none";
      return emit(ctx, json, j, {"none"}, kNegative);
    case euler::TourOutcome::kBudgetExceeded:
      break;
  }
  j["status"] = "budget-exceeded";
  return emit(ctx, json, j, {"budget exceeded after " + std::to_string(result.expansions) + " expansions"}, kError);
}

inline int cmd_flag_tour(Context& ctx, const std::string& path, bool json) {
  auto doc = load(path, ctx.in);
  const auto& h = doc.hypergraph;
  auto j = envelope("flag-tour", doc.name);
  auto t = euler::flag_tour(h);
  if (!t) {
    j["status"] = "none";
    return emit(ctx, json, j, {"none"}, kNegative);
  }
  std::string line = to_string(h, canonical(*t));
  j["status"] = "found";
  j["tour"] = line;
  return emit(ctx, json, j, {line}, kPositive);
}

inline int cmd_check(Context& ctx, const std::string& path, bool json) {
  auto doc = load(path, ctx.in);
  const auto& h = doc.hypergraph;
  auto n = euler::check_necessary(h);
  auto j = envelope("check", doc.name);
  j["edge_count"] = n.edge_count;
  j["half_degree_sum"] = n.half_degree_sum;
  j["odd_vertex_count"] = n.odd_vertex_count;
  j["excess_sum"] = n.excess_sum;
  j["degree_inequality"] = n.degree_inequality;
  j["odd_vertex_inequality"] = n.odd_vertex_inequality;
  j["corank_at_least_two"] = n.corank_at_least_two;
  std::vector<std::string> weak_edges;
  for (EdgeIndex e : n.edges_with_one_non_pendant) weak_edges.push_back(h.edge_id(e));
  j["edges_with_one_non_pendant"] = weak_edges;
  j["passes"] = n.passes_all();
  auto mark = [](bool ok) { return ok ? std::string("ok") : std::string("FAIL"); };
  std::vector<std::string> lines{
      "|E| <= sum floor(deg/2): " + std::to_string(n.edge_count) + " <= " + std::to_string(n.half_degree_sum) + " " +
          mark(n.degree_inequality),
      "|V_odd| <= sum (|e|-2): " + std::to_string(n.odd_vertex_count) + " <= " + std::to_string(n.excess_sum) + " " +
          mark(n.odd_vertex_inequality),
      "every edge has at least 2 vertices: " + mark(n.corank_at_least_two),
      "every edge has at least 2 non-pendant vertices: " + mark(weak_edges.empty()) +
          (weak_edges.empty() ? "" : " (" + join(weak_edges) + ")"),
      n.passes_all() ? "necessary conditions hold" : "necessary conditions fail"};
  return emit(ctx, json, j, lines, n.passes_all() ? kPositive : kNegative);
}

inline int cmd_lovasz(Context& ctx, const std::string& path, bool json, std::size_t limit) {
  auto doc = load(path, ctx.in);
  const auto& h = doc.hypergraph;
  auto result = certify::lovasz_check(h, limit);
  auto j = envelope("lovasz", doc.name);
  j["pairs_checked"] = result.pairs_checked;
  j["disagreements"] = result.disagreements;
  j["quasi_eulerian"] = result.quasi_eulerian;
  std::vector<std::string> lines;
  if (result.witness) {
    const auto& w = *result.witness;
    std::vector<std::string> e2, vp, e1;
    for (EdgeIndex e : w.e_double_prime) e2.push_back(h.edge_id(e));
    for (VertexIndex v : w.v_prime) vp.push_back(h.vertex_id(v));
    for (EdgeIndex e : w.e_prime) e1.push_back(h.edge_id(e));
    Json wj;
    wj["e_double_prime"] = e2;
    wj["v_prime"] = vp;
    wj["e_prime"] = e1;
    wj["value"] = w.value;
    wj["q_h"] = w.q_h;
    wj["q_e"] = w.q_e;
    j["witness"] = wj;
    lines.push_back("violation: E''={" + join(e2, ",") + "} V'={" + join(vp, ",") + "} E'={" + join(e1, ",") +
                    "} value=" + std::to_string(w.value) + " q_H=" + std::to_string(w.q_h) +
                    " q_e=" + std::to_string(w.q_e));
  } else {
    lines.push_back("no violation: quasi-eulerian");
  }
  lines.push_back("pairs checked: " + std::to_string(result.pairs_checked) +
                  ", form disagreements: " + std::to_string(result.disagreements));
  if (result.disagreements != 0) {
    emit(ctx, json, j, lines, kError);
    ctx.err << "internal error: the two forms of the conditions disagree\n";
    return kError;
  }
  return emit(ctx, json, j, lines, result.quasi_eulerian ? kPositive : kNegative);
}

inline int cmd_decompose(Context& ctx, const std::string& path, bool json) {
  auto doc = load(path, ctx.in);
  const auto& h = doc.hypergraph;
  auto j = envelope("decompose", doc.name);
  auto cycles = certify::cycle_decomposition(h);
  if (!cycles) {
    j["status"] = "none";
    return emit(ctx, json, j, {"none"}, kNegative);
  }
  auto lines = trail_lines(h, *cycles);
  j["status"] = "found";
  j["cycles"] = lines;
  return emit(ctx, json, j, lines, kPositive);
}

inline int cmd_dual(Context& ctx, const std::string& path) {
  auto doc = load(path, ctx.in);
  ctx.out << io::emit(dual(doc.hypergraph), doc.name + "_dual");
  return kPositive;
}

inline int cmd_blocks(Context& ctx, const std::string& path, bool json) {
  auto doc = load(path, ctx.in);
  const auto& h = doc.hypergraph;
  auto j = envelope("blocks", doc.name);
  std::vector<std::string> lines;
  Json arr = Json::array();
  std::size_t index = 0;
  for (const auto& b : structure::blocks(h)) {
    std::vector<std::string> es, vs, ss;
    for (EdgeIndex e : b.edges) es.push_back(h.edge_id(e));
    for (VertexIndex v : b.vertices) vs.push_back(h.vertex_id(v));
    for (VertexIndex v : b.separating) ss.push_back(h.vertex_id(v));
    Json bj;
    bj["edges"] = es;
    bj["vertices"] = vs;
    bj["separating"] = ss;
    arr.push_back(bj);
    lines.push_back("block " + std::to_string(++index) + ": edges {" + join(es, ",") + "} vertices {" + join(vs, ",") +
                    "} separating {" + join(ss, ",") + "}");
  }
  std::vector<std::string> sep;
  for (VertexIndex v : structure::separating_vertices(h)) sep.push_back(h.vertex_id(v));
  j["blocks"] = arr;
  j["separating_vertices"] = sep;
  lines.push_back("separating vertices: {" + join(sep, ",") + "}");
  auto fam = euler::solve_by_blocks(h);
  j["family_status"] = fam ? "found" : "none";
  lines.push_back(std::string("block-wise Euler family: ") + (fam ? "found" : "none"));
  if (fam) {
    auto trails = trail_lines(h, *fam);
    j["trails"] = trails;
    for (const auto& t : trails) lines.push_back("  " + t);
  }
  return emit(ctx, json, j, lines, fam ? kPositive : kNegative);
}

inline int cmd_reduce_ham(Context& ctx, const std::string& path) {
  auto doc = load(path, ctx.in);
  ctx.out << io::emit(certify::ham_to_euler(doc.hypergraph), doc.name + "_dual");
  return kPositive;
}

struct GenParams {
  std::string family;
  std::uint64_t seed = 1;
  std::size_t n = 6;
  std::size_t m = 4;
  std::size_t k = 3;
};

inline int cmd_gen(Context& ctx, const GenParams& p) {
  generate::Rng rng(p.seed);
  const std::string name = p.family + "_s" + std::to_string(p.seed);
  if (p.family == "uniform") {
    ctx.out << io::emit(generate::random_uniform(rng, p.n, p.m, p.k), name);
  } else if (p.family == "mixed") {
    ctx.out << io::emit(generate::random_hypergraph(rng, p.n, p.m, 1, std::min(p.k, p.n)), name);
  } else if (p.family == "even-uniform") {
    ctx.out << io::emit(generate::random_even_uniform(rng, p.n, p.m, p.k), name);
  } else if (p.family == "flag-even") {
    ctx.out << io::emit(generate::random_flag_even(rng, p.n, p.m, p.k), name);
  } else if (p.family == "cubic") {
    auto planted = generate::random_cubic_hamiltonian(rng, p.n);
    std::vector<std::string> cycle;
    for (VertexIndex v : planted.hamilton_cycle) cycle.push_back(planted.graph.vertex_id(v));
    ctx.out << "# planted Hamilton cycle: " << join(cycle) << '\n';
    ctx.out << io::emit(planted.graph, name, io::DocumentKind::kGraph);
  } else if (p.family == "cubic-dual") {
    auto planted = generate::random_cubic_hamiltonian(rng, p.n);
    ctx.out << io::emit(certify::ham_to_euler(planted.graph), name);
  } else if (p.family == "fano") {
    ctx.out << io::emit(generate::fano(), "fano");
  } else if (p.family == "petersen") {
    ctx.out << io::emit(generate::petersen(), "petersen", io::DocumentKind::kGraph);
  } else if (p.family == "singleton") {
    ctx.out << io::emit(generate::singleton_example(p.n), "singleton_n" + std::to_string(p.n));
  } else if (p.family == "pendant") {
    ctx.out << io::emit(generate::pendant_example(p.n), "pendant_n" + std::to_string(p.n));
  } else if (p.family == "complete") {
    ctx.out << io::emit(generate::complete_uniform(p.n, p.k), "complete_n" + std::to_string(p.n) + "_k" +
                                                                  std::to_string(p.k));
  } else {
    ctx.err << "gen: unknown family '" << p.family << "'\n";
    return kError;
  }
  return kPositive;
}

inline int cmd_export_dot(Context& ctx, const std::string& path, const std::string& kind, const std::string& mode,
                          std::size_t ell) {
  auto doc = load(path, ctx.in);
  if (kind == "incidence") {
    ctx.out << io::incidence_dot(doc.hypergraph, doc.name);
    return kPositive;
  }
  derived::IntersectionMode m = derived::IntersectionMode::kAny;
  if (mode == "exactly") {
    m = derived::IntersectionMode::kExactly;
  } else if (mode == "at-least") {
    m = derived::IntersectionMode::kAtLeast;
  }
  ctx.out << io::intersection_dot(doc.hypergraph, doc.name, m, ell);
  return kPositive;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  detail::Context ctx{in, out, err};
  CLI::App app{"Euler tours and Euler families of hypergraphs", "hypereuler"};
  app.require_subcommand(1, 1);

  std::string file;
  bool json = false;
  std::uint64_t budget = 0;
  std::size_t limit = 14;
  std::function<int()> action;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "input file, '-' for stdin")->required(); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit JSON"); };
  auto as_budget = [](std::uint64_t cap) -> std::optional<std::uint64_t> {
    return cap == 0 ? std::nullopt : std::optional<std::uint64_t>(cap);
  };

  std::vector<std::string> files;
  std::string dir;
  bool timing = false;
  std::uint64_t analyze_budget = 1000000;
  auto* analyze = app.add_subcommand("analyze", "full report for one or more instances");
  analyze->add_option("files", files, "input files");
  analyze->add_option("--dir", dir, "analyse every .hg file in a directory");
  analyze->add_option("--budget", analyze_budget, "tour search node cap (0 = unlimited)")->capture_default_str();
  analyze->add_flag("--timing", timing, "include wall-clock time (output is then not reproducible)");
  add_json(analyze);
  analyze->callback([&] { action = [&] { return detail::cmd_analyze(ctx, files, dir, json, as_budget(analyze_budget), timing); }; });

  auto* family = app.add_subcommand("family", "Euler family via the incidence-graph factor");
  add_file(family);
  add_json(family);
  family->callback([&] { action = [&] { return detail::cmd_family(ctx, file, json); }; });

  auto* tour = app.add_subcommand("tour", "exact Euler tour search");
  add_file(tour);
  add_json(tour);
  tour->add_option("--budget", budget, "search node cap (0 = unlimited)");
  tour->callback([&] { action = [&] { return detail::cmd_tour(ctx, file, json, as_budget(budget)); }; });

  auto* flag_tour = app.add_subcommand("flag-tour", "closed trail through every flag");
  add_file(flag_tour);
  add_json(flag_tour);
  flag_tour->callback([&] { action = [&] { return detail::cmd_flag_tour(ctx, file, json); }; });

  auto* check = app.add_subcommand("check", "necessary conditions");
  add_file(check);
  add_json(check);
  check->callback([&] { action = [&] { return detail::cmd_check(ctx, file, json); }; });

  auto* lovasz = app.add_subcommand("lovasz", "exhaustive parity-factor conditions");
  add_file(lovasz);
  add_json(lovasz);
  lovasz->add_option("--limit", limit, "cap on |V| + |E|")->capture_default_str();
  lovasz->callback([&] { action = [&] { return detail::cmd_lovasz(ctx, file, json, limit); }; });

  auto* decompose = app.add_subcommand("decompose", "partition the edges into cycles");
  add_file(decompose);
  add_json(decompose);
  decompose->callback([&] { action = [&] { return detail::cmd_decompose(ctx, file, json); }; });

  auto* dual_cmd = app.add_subcommand("dual", "print the dual hypergraph");
  add_file(dual_cmd);
  dual_cmd->callback([&] { action = [&] { return detail::cmd_dual(ctx, file); }; });

  auto* blocks = app.add_subcommand("blocks", "blocks, separating vertices, block-wise family");
  add_file(blocks);
  add_json(blocks);
  blocks->callback([&] { action = [&] { return detail::cmd_blocks(ctx, file, json); }; });

  auto* reduce = app.add_subcommand("reduce-ham", "cubic graph to its dual 3-uniform hypergraph");
  add_file(reduce);
  reduce->callback([&] { action = [&] { return detail::cmd_reduce_ham(ctx, file); }; });

  detail::GenParams gen_params;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("family", gen_params.family,
                  "uniform | mixed | even-uniform | flag-even | cubic | cubic-dual | fano | petersen | singleton | "
                  "pendant | complete")
      ->required();
  gen->add_option("--seed", gen_params.seed, "random seed")->capture_default_str();
  gen->add_option("--n", gen_params.n, "vertices")->capture_default_str();
  gen->add_option("--m", gen_params.m, "edges")->capture_default_str();
  gen->add_option("--k", gen_params.k, "edge size (half size for even-uniform)")->capture_default_str();
  gen->callback([&] { action = [&] { return detail::cmd_gen(ctx, gen_params); }; });

  std::string dot_kind = "incidence";
  std::string dot_mode = "any";
  std::size_t ell = 1;
  auto* dot = app.add_subcommand("export-dot", "incidence or intersection graph in DOT");
  add_file(dot);
  dot->add_option("--graph", dot_kind, "incidence | intersection")
      ->check(CLI::IsMember({"incidence", "intersection"}))
      ->capture_default_str();
  dot->add_option("--mode", dot_mode, "any | exactly | at-least")
      ->check(CLI::IsMember({"any", "exactly", "at-least"}))
      ->capture_default_str();
  dot->add_option("--ell", ell, "intersection threshold")->capture_default_str();
  dot->callback([&] { action = [&] { return detail::cmd_export_dot(ctx, file, dot_kind, dot_mode, ell); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace hypereuler::cli
