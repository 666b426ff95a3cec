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

// Hamilton cycles of cubic graphs as Euler tours of their duals.

#include <iostream>

#include "hypereuler.hpp"

using namespace hypereuler;

namespace {

void solve(const std::string& name, const Hypergraph& graph) {
  Hypergraph image = certify::ham_to_euler(graph);
  Stats s = stats(image);
  std::cout << name << " -> dual with |V|=" << image.order() << " |E|=" << image.size()
            << (s.linear && s.uniform && s.regular ? " (linear, 3-uniform, 2-regular)" : "") << '\n';
  auto r = euler::euler_tour_exact(image);
  if (r.outcome != euler::TourOutcome::kFound) {
    std::cout << "  no Euler tour after " << r.expansions << " expansions, so no Hamilton cycle\n";
    return;
  }
  std::cout << "  tour: " << to_string(image, canonical(*r.tour)) << '\n';
  std::cout << "  Hamilton cycle:";
  for (VertexIndex v : certify::tour_to_hamilton(graph, *r.tour)) std::cout << ' ' << graph.vertex_id(v);
  std::cout << '\n';
}

}  // namespace

int main() {
  solve("K4", generate::complete_graph(4));
  solve("K3,3", generate::complete_bipartite(3, 3));
  solve("Petersen", generate::petersen());

  generate::Rng rng(7);
  auto planted = generate::random_cubic_hamiltonian(rng, 12);
  solve("random cubic graph on 12 vertices", planted.graph);
  return 0;
}
