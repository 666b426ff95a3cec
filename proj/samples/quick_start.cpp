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

// Builds a few hypergraphs and asks each solver about them.

#include <iostream>

#include "hypereuler.hpp"

using namespace hypereuler;

namespace {

void describe(const std::string& name, const Hypergraph& h) {
  std::cout << name << ": |V|=" << h.order() << " |E|=" << h.size() << '\n';

  auto necessary = euler::check_necessary(h);
  std::cout << "  necessary conditions " << (necessary.passes_all() ? "hold" : "fail") << '\n';

  if (auto family = euler::euler_family(h)) {
    std::cout << "  Euler family:\n";
    for (const Trail& t : canonical(*family)) std::cout << "    " << to_string(h, t) << '\n';
  } else {
    std::cout << "  no Euler family\n";
  }

  auto tour = euler::euler_tour_exact(h);
  if (tour.outcome == euler::TourOutcome::kFound) {
    std::cout << "  Euler tour: " << to_string(h, canonical(*tour.tour)) << '\n';
  } else {
    std::cout << "  no Euler tour\n";
  }
}

}  // namespace

int main() {
  describe("digon", generate::digon());
  describe("single triple", generate::single_triple());
  describe("Fano plane", generate::fano());

  // Text format round trip.
  const char* text =
      "hypergraph overlap\n"
      "vertices a b c d\n"
      "edge e: a b c\n"
      "edge f: b c d\n";
  io::Document doc = io::parse(text);
  describe(doc.name, doc.hypergraph);
  std::cout << io::emit(doc.hypergraph, doc.name);
  return 0;
}
