// Copyright 2026 The gemcat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gemcat;

TEST_CASE("build validates matchings") {
  CHECK(fixtures::error_of([] { ColouredGraph::build(3, 3, {{2, 1, 1}, {2, 1, 1}, {2, 1, 1}}); }) == ErrorKind::OddOrder);
  CHECK(fixtures::error_of([] { ColouredGraph::build(2, 2, {{1, 2}, {2, 1}}); }) == ErrorKind::FixedPoint);
  CHECK(fixtures::error_of([] { ColouredGraph::build(2, 4, {{2, 3, 4, 1}, {2, 1, 4, 3}}); }) == ErrorKind::NotInvolution);
  CHECK(fixtures::error_of([] { ColouredGraph::build(2, 2, {{5, 1}, {2, 1}}); }) == ErrorKind::InvalidVertex);
  CHECK(fixtures::error_of([] { ColouredGraph::build(2, 4, {{2, 1, 4, 3}, {2, 1, 4, 3}}); }) == ErrorKind::Disconnected);
  CHECK_NOTHROW(ColouredGraph::build(2, 4, {{2, 1, 4, 3}, {2, 1, 4, 3}}, Connectivity::Optional));
}

TEST_CASE("standard graph") {
  const auto g = ColouredGraph::standard(5);
  CHECK(g.order() == 2);
  CHECK(g.dimension() == 4);
  CHECK(g.colours_between(1, 2) == g.colour_set());
  CHECK(is_contracted(g));
  CHECK(is_bipartite(g));
}

TEST_CASE("residues agree with union-find") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int colours = 3 + trial % 3;
    const auto g = oracle::random_graph(colours, 2 * (1 + trial % 8), rng);
    const auto cs = census(g);
    for (ColourSet set = 1; set <= g.colour_set(); ++set) {
      const int expected = oracle::residue_count(g, set);
      CHECK(count_residues(g, set) == expected);
      if (colour_count(set) >= 2) CHECK(cs.count(set) == expected);
    }
  }
}

TEST_CASE("residue components partition the vertices") {
  const auto g = fixtures::cp2();
  const auto r = residues(g, 0b00011);
  int total = 0;
  for (const auto& comp : r.components()) total += static_cast<int>(comp.size());
  CHECK(total == g.order());
  CHECK(r.label[0] == -1);
  CHECK(fixtures::error_of([&] { residues(g, 0); }) == ErrorKind::EmptyColourSet);
}

TEST_CASE("bipartition") {
  const auto g = fixtures::cp2();
  const auto b = bipartition(g);
  REQUIRE(!b.empty());
  CHECK(b[1] == 0);
  for (Colour c = 0; c < 5; ++c) {
    for (Vertex v = 1; v <= 8; ++v) CHECK(b[v] != b[g.partner(c, v)]);
  }
  // K4: triangle 1-2-4-1.
  const auto k4 = ColouredGraph::build(3, 4, {{2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}});
  CHECK_FALSE(is_bipartite(k4));
  CHECK(bipartition(k4).empty());
}

TEST_CASE("connected sum order and topology") {
  const auto g = fixtures::cp2();
  const auto sum = connected_sum(g, 1, g, 3);
  CHECK(sum.order() == 14);
  CHECK(is_connected(sum));
  CHECK(oracle::euler_characteristic(sum) == 3 + 3 - 2);
  const auto s4 = ColouredGraph::standard(5);
  CHECK(connected_sum(g, 1, s4, 1).order() == 8);
}

TEST_CASE("relabelling and colour permutation preserve residue counts") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_graph(4, 10, rng);
    std::vector<Vertex> label(11);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin() + 1, label.end(), rng);
    std::vector<Colour> colours{0, 1, 2, 3};
    std::shuffle(colours.begin(), colours.end(), rng);
    const auto h = permute_colours(relabel_vertices(g, label), colours);
    CHECK(oracle::isomorphic(g, h));
    for (ColourSet set = 1; set < 16; ++set) {
      ColourSet image = 0;
      for (Colour c = 0; c < 4; ++c) {
        if (set & colour_bit(c)) image |= colour_bit(colours[c]);
      }
      CHECK(count_residues(g, set) == count_residues(h, image));
    }
  }
}

TEST_CASE("residue graphs") {
  const auto g = fixtures::cp2();
  for (Colour c = 0; c < 5; ++c) {
    const auto parts = residue_graphs(g, g.colour_set() & ~colour_bit(c));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].colours() == 4);
    CHECK(parts[0].order() == 8);
  }
}
