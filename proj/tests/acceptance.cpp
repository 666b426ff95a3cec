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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "support.hpp"

namespace hypereuler {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
};

int failures = 0;

void report(int id, const std::string& title, const Tally& t, const std::string& extra = "") {
  bool pass = t.failed == 0 && t.checked > 0;
  if (!pass) ++failures;
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << title << " ("
            << (t.checked - t.failed) << "/" << t.checked << " checks";
  if (!extra.empty()) std::cout << ", " << extra;
  std::cout << ")";
  if (!pass && !t.first_failure.empty()) std::cout << "  first failure: " << t.first_failure;
  std::cout << std::endl;
}

std::vector<testing::Instance> corpus_without_empty_edges() {
  std::vector<testing::Instance> out;
  for (auto& in : testing::small_corpus()) {
    if (!in.h.has_empty_edge()) out.push_back(std::move(in));
  }
  return out;
}

bool connected(const Hypergraph& h) { return h.size() > 0 && structure::component_count(h) == 1; }

// --- 1, 2 -------------------------------------------------------------------

void oracle_equivalence(const std::vector<testing::Instance>& corpus) {
  auto start = Clock::now();
  Tally fam, tour;
  for (const auto& in : corpus) {
    auto want = certify::brute_force_family(in.h);
    auto got = euler::euler_family(in.h);
    fam.expect(want.has_value() == got.has_value() && (!got || is_euler_family(in.h, *got)), in.name);
  }
  double fam_time = seconds_since(start);
  for (const auto& in : corpus) {
    auto want = certify::brute_force_tour(in.h);
    auto got = euler::euler_tour_exact(in.h);
    bool same = want.has_value() == (got.outcome == euler::TourOutcome::kFound);
    tour.expect(same && (!got.tour || is_euler_tour(in.h, *got.tour)), in.name);
  }
  double total = seconds_since(start);
  Tally timing_fam = fam, timing_tour = tour;
  timing_fam.expect(corpus.size() >= 500, "corpus smaller than 500");
  timing_tour.expect(corpus.size() >= 500, "corpus smaller than 500");
  timing_fam.expect(total < 300.0, "runtime over 5 minutes");
  timing_tour.expect(total < 300.0, "runtime over 5 minutes");
  std::ostringstream a, b;
  a << corpus.size() << " instances, " << fam_time << " s";
  b << corpus.size() << " instances, " << total << " s for both";
  report(1, "euler_family equals brute_force_family", timing_fam, a.str());
  report(2, "euler_tour_exact equals brute_force_tour", timing_tour, b.str());
}

// --- 3 ----------------------------------------------------------------------

void lovasz_agreement(const std::vector<testing::Instance>& corpus) {
  Tally t;
  std::uint64_t pairs = 0, disagreements = 0;
  for (const auto& in : corpus) {
    if (in.h.order() + in.h.size() > 12) continue;
    auto r = certify::lovasz_check(in.h, 12);
    pairs += r.pairs_checked;
    disagreements += r.disagreements;
    t.expect(r.quasi_eulerian == euler::euler_family(in.h).has_value(), in.name + " verdict");
    t.expect(r.disagreements == 0, in.name + " form disagreement");
  }
  report(3, "lovasz_check verdict equals euler_family, forms agree", t,
         std::to_string(pairs) + " (S,T) pairs, " + std::to_string(disagreements) + " disagreements");
}

// --- 4 ----------------------------------------------------------------------

std::vector<Hypergraph> connected_flag_instances() {
  std::vector<Hypergraph> out;
  generate::Rng rng(401);
  while (out.size() < 200) {
    std::size_t n = 3 + rng() % 6;
    std::size_t m = 2 + rng() % 6;
    Hypergraph h = out.size() % 2 == 0 ? generate::random_flag_even(rng, n, m, std::min<std::size_t>(n, 4))
                                       : generate::random_hypergraph(rng, n, m, 2, std::min<std::size_t>(n, 4));
    if (connected(h)) out.push_back(std::move(h));
  }
  return out;
}

void flag_tours(const std::vector<Hypergraph>& instances) {
  Tally t;
  std::size_t positive = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Hypergraph& h = instances[i];
    bool all_even = true;
    for (VertexIndex v = 0; v < h.order(); ++v) all_even = all_even && h.degree(v) % 2 == 0;
    for (EdgeIndex e = 0; e < h.size(); ++e) all_even = all_even && h.edge_size(e) % 2 == 0;
    auto tour = euler::flag_tour(h);
    std::string name = "instance " + std::to_string(i);
    t.expect(tour.has_value() == all_even, name + " verdict");
    if (!tour) continue;
    ++positive;
    t.expect(is_flag_traversing_tour(h, *tour), name + " certificate");
    // Each pass through e uses the flags (v_i, e) and (v_{i+1}, e).
    std::map<std::pair<VertexIndex, EdgeIndex>, int> seen;
    for (std::size_t k = 0; k < tour->length(); ++k) {
      ++seen[{tour->anchors[k], tour->edges[k]}];
      ++seen[{tour->anchors[k + 1], tour->edges[k]}];
    }
    bool each_once = seen.size() == h.flags().size();
    for (const auto& [flag, count] : seen) each_once = each_once && count == 1 && h.contains(flag.second, flag.first);
    t.expect(each_once, name + " flag coverage");
  }
  report(4, "flag_tour exists iff all degrees and sizes even", t,
         std::to_string(instances.size()) + " connected instances, " + std::to_string(positive) + " even");
}

// --- 5 ----------------------------------------------------------------------

void reduction_fidelity() {
  Tally t;
  generate::Rng rng(501);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 4 + 2 * (rng() % 5);
    auto planted = generate::random_cubic_hamiltonian(rng, n);
    Hypergraph image = certify::ham_to_euler(planted.graph);
    auto r = euler::euler_tour_exact(image);
    std::string name = "cubic " + std::to_string(i) + " (n=" + std::to_string(n) + ")";
    t.expect(r.outcome == euler::TourOutcome::kFound, name + " no tour");
    if (r.outcome != euler::TourOutcome::kFound) continue;
    auto cycle = certify::tour_to_hamilton(planted.graph, *r.tour);
    t.expect(certify::is_hamilton_cycle(planted.graph, cycle), name + " back-map");
  }
  Hypergraph petersen = testing::fixture("petersen.g");
  auto r = euler::euler_tour_exact(certify::ham_to_euler(petersen));
  t.expect(r.outcome == euler::TourOutcome::kNone, "Petersen");
  report(5, "ham_to_euler + euler_tour_exact on planted cubic graphs and Petersen", t,
         "Petersen search " + std::to_string(r.expansions) + " expansions");
}

// --- 6 ----------------------------------------------------------------------

std::vector<Hypergraph> cut_free_three_uniform() {
  std::vector<Hypergraph> out;
  generate::Rng rng(601);
  while (out.size() < 200) {
    std::size_t n = 4 + rng() % 6;
    std::size_t m = 3 + rng() % 8;
    Hypergraph h = generate::random_uniform(rng, n, m, 3);
    if (structure::cut_edges(h).empty()) out.push_back(std::move(h));
  }
  return out;
}

void three_uniform(const std::vector<Hypergraph>& instances) {
  Tally t;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    auto f = euler::euler_family(instances[i]);
    t.expect(f && is_euler_family(instances[i], *f), "instance " + std::to_string(i));
  }
  Hypergraph fano = testing::fixture("fano.hg");
  auto f = euler::euler_family(fano);
  t.expect(f && is_euler_family(fano, *f), "Fano");
  report(6, "3-uniform without cut edges is quasi-eulerian", t,
         std::to_string(instances.size()) + " instances plus Fano");
}

// --- 7 ----------------------------------------------------------------------

std::size_t non_trivial_components(const Hypergraph& h) {
  std::size_t count = 0;
  for (const auto& c : structure::components(h)) count += !c.edges.empty();
  return count;
}

void necessity(const std::vector<testing::Instance>& all) {
  Tally t;
  std::size_t positives = 0, strong = 0, splitting = 0;
  for (const auto& in : all) {
    auto family = euler::euler_family(in.h);
    if (family) {
      ++positives;
      t.expect(euler::check_necessary(in.h).passes_all(), in.name + " necessary conditions");
    }
    auto cuts = structure::cut_edges(in.h);
    bool has_strong = std::any_of(cuts.begin(), cuts.end(), [](const auto& c) { return c.strong; });
    if (has_strong) {
      ++strong;
      t.expect(!family, in.name + " strong cut edge");
    }
    bool splits = false;
    for (const auto& c : cuts) splits = splits || non_trivial_components(delete_edge(in.h, c.edge)) >= 2;
    if (splits) {
      ++splitting;
      t.expect(euler::euler_tour_exact(in.h).outcome == euler::TourOutcome::kNone, in.name + " splitting cut edge");
    }
  }
  report(7, "necessary conditions and cut-edge obstructions", t,
         std::to_string(all.size()) + " instances, " + std::to_string(positives) + " positive, " +
             std::to_string(strong) + " with a strong cut edge, " + std::to_string(splitting) + " with a splitting one");
}

// --- 8 ----------------------------------------------------------------------

void cycle_decompositions(const std::vector<testing::Instance>& corpus) {
  Tally t;
  for (const auto& in : corpus) {
    auto cycles = certify::cycle_decomposition(in.h);
    bool family = euler::euler_family(in.h).has_value();
    t.expect(cycles.has_value() == family, in.name + " verdict");
    if (!cycles) continue;
    std::vector<int> used(in.h.size(), 0);
    bool all_cycles = true;
    for (const Trail& c : *cycles) {
      all_cycles = all_cycles && is_cycle(in.h, c);
      for (EdgeIndex e : c.edges) ++used[e];
    }
    bool partition = std::all_of(used.begin(), used.end(), [](int u) { return u == 1; });
    t.expect(all_cycles && partition, in.name + " partition");
    t.expect(is_euler_family(in.h, concatenate_at_shared_anchors(*cycles)), in.name + " re-concatenation");
  }
  report(8, "cycle_decomposition exists iff euler_family exists", t);
}

// --- 9 ----------------------------------------------------------------------

// Two random splits of V into blocks of size 2 or 4 give a planted 2-factor;
// extra random even-size edges are added around it.
Hypergraph planted_two_factor(generate::Rng& rng) {
  const std::size_t n = 4 + 2 * (rng() % 3);
  std::vector<std::vector<VertexIndex>> edges;
  for (int round = 0; round < 2; ++round) {
    std::vector<VertexIndex> order(n);
    std::iota(order.begin(), order.end(), VertexIndex{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t i = 0;
    while (i < n) {
      std::size_t take = (n - i >= 4 && rng() % 2) ? 4 : 2;
      std::vector<VertexIndex> e(order.begin() + static_cast<std::ptrdiff_t>(i),
                                 order.begin() + static_cast<std::ptrdiff_t>(i + take));
      std::sort(e.begin(), e.end());
      edges.push_back(e);
      i += take;
    }
  }
  std::size_t extra = rng() % 3;
  for (std::size_t i = 0; i < extra; ++i) edges.push_back(generate::detail::random_subset(rng, n, 2 + 2 * (rng() % 2)));
  std::shuffle(edges.begin(), edges.end(), rng);
  return generate::detail::assemble(n, std::move(edges));
}

std::optional<std::vector<EdgeIndex>> first_two_factor(const Hypergraph& h) {
  for (std::size_t mask = 1; mask < (std::size_t{1} << h.size()); ++mask) {
    std::vector<std::size_t> deg(h.order(), 0);
    std::vector<EdgeIndex> chosen;
    for (EdgeIndex e = 0; e < h.size(); ++e) {
      if (!(mask >> e & 1U)) continue;
      chosen.push_back(e);
      for (VertexIndex v : h.edge(e)) ++deg[v];
    }
    if (std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; })) return chosen;
  }
  return std::nullopt;
}

void duality() {
  Tally t;
  generate::Rng rng(901);
  std::size_t instances = 0;
  while (instances < 100) {
    Hypergraph h = planted_two_factor(rng);
    auto chosen = first_two_factor(h);
    if (!chosen) continue;
    ++instances;
    std::string name = "instance " + std::to_string(instances);
    auto cert = certify::two_factor_duality(h, *chosen);
    t.expect(cert.has_value(), name + " no certificate");
    if (!cert) continue;
    t.expect(is_euler_family(cert->dual, cert->family), name + " dual family");
    std::vector<std::size_t> count(h.size(), 0);
    for (const Trail& tr : cert->family) {
      for (std::size_t i = 0; i + 1 < tr.anchors.size(); ++i) ++count[tr.anchors[i]];
    }
    bool exact = true;
    for (EdgeIndex e = 0; e < h.size(); ++e) {
      bool in = std::binary_search(chosen->begin(), chosen->end(), e);
      exact = exact && count[e] == (in ? h.edge_size(e) / 2 : 0);
    }
    t.expect(exact, name + " traversal counts");
    t.expect(certify::two_factor_from_dual_family(h, cert->family) == *chosen, name + " inverse");
  }
  report(9, "2-factor to dual Euler family and back", t, std::to_string(instances) + " instances");
}

// --- 10 ---------------------------------------------------------------------

void block_consistency(const std::vector<testing::Instance>& corpus, const std::vector<testing::Instance>& all) {
  Tally t;
  for (const auto& in : all) {
    t.expect(euler::solve_by_blocks(in.h).has_value() == euler::euler_family(in.h).has_value(), in.name + " verdict");
  }
  for (const auto& in : corpus) {
    std::vector<std::vector<EdgeIndex>> got;
    for (const auto& b : structure::blocks(in.h)) got.push_back(b.edges);
    std::sort(got.begin(), got.end());
    t.expect(got == testing::blocks_by_definition(in.h), in.name + " blocks");
    auto sv = structure::separating_vertices(in.h);
    t.expect(std::set<VertexIndex>(sv.begin(), sv.end()) == testing::separating_vertices_by_definition(in.h),
             in.name + " separating vertices");
  }
  report(10, "solve_by_blocks agrees, blocks match the definition", t);
}

// --- 11 ---------------------------------------------------------------------

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return "popen failed";
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  int status = pclose(pipe);
  out += "\nexit " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
  return out;
}

void determinism() {
  Tally t;
  const std::string bin = HYPEREULER_CLI;
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(HYPEREULER_FIXTURES)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<std::string> commands;
  for (const auto& f : files) {
    bool graph = f.ends_with(".g");
    for (const std::string c : {"analyze", "family", "tour", "flag-tour", "check", "lovasz", "decompose", "dual",
                                "blocks", "export-dot"}) {
      commands.push_back(bin + " " + c + " " + f);
      if (c != "dual" && c != "export-dot") commands.push_back(bin + " " + c + " --json " + f);
    }
    commands.push_back(bin + " export-dot --graph intersection --mode at-least --ell 2 " + f);
    if (graph) commands.push_back(bin + " reduce-ham " + f);
  }
  commands.push_back(bin + " analyze --json --dir " + std::string(HYPEREULER_FIXTURES));
  for (const std::string family : {"uniform", "mixed", "even-uniform", "flag-even", "cubic", "cubic-dual", "fano",
                                   "petersen", "singleton", "pendant", "complete"}) {
    for (const char* seed : {"1", "7", "2026"}) {
      commands.push_back(bin + " gen " + family + " --seed " + seed + " --n 8 --m 6 --k 2");
    }
  }
  for (const auto& c : commands) t.expect(capture(c) == capture(c), c);
  report(11, "CLI output byte-identical across reruns", t,
         std::to_string(files.size()) + " fixtures, " + std::to_string(commands.size()) + " commands");
}

int run() {
  auto start = Clock::now();
  auto corpus = corpus_without_empty_edges();
  auto flag_instances = connected_flag_instances();
  auto cut_free = cut_free_three_uniform();

  // Every corpus together, for the criteria stated over all of them.
  std::vector<testing::Instance> all = corpus;
  for (std::size_t i = 0; i < flag_instances.size(); ++i) all.push_back({"flag_" + std::to_string(i), flag_instances[i]});
  for (std::size_t i = 0; i < cut_free.size(); ++i) all.push_back({"cut_free_" + std::to_string(i), cut_free[i]});
  for (std::size_t n = 3; n <= 8; ++n) all.push_back({"singleton_n" + std::to_string(n), generate::singleton_example(n)});
  for (std::size_t n = 7; n <= 10; ++n) all.push_back({"pendant_n" + std::to_string(n), generate::pendant_example(n)});
  for (const char* f : {"fano.hg", "chain.hg", "pendant_n7.hg", "two_digons.hg", "digons_at_a.hg"}) {
    all.push_back({f, testing::fixture(f)});
  }

  oracle_equivalence(corpus);
  lovasz_agreement(corpus);
  flag_tours(flag_instances);
  reduction_fidelity();
  three_uniform(cut_free);
  necessity(all);
  cycle_decompositions(corpus);
  duality();
  block_consistency(corpus, all);
  determinism();
  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << " in "
            << seconds_since(start) << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace hypereuler

int main() {
  try {
    return hypereuler::run();
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << std::endl;
    return 2;
  }
}
