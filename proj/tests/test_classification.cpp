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

#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "gemcat/classification.hpp"
#include "gemcat/moves.hpp"
#include "gemcat/topology.hpp"
#include "oracles.hpp"

using namespace gemcat;

namespace {

std::vector<ColouredGraph> small_family() {
  const auto cp2 = fixtures::cp2();
  const auto side = bipartition(cp2);
  Vertex other = 1;
  while (side[other] == side[1]) ++other;
  return {cp2, ColouredGraph::standard(5), connected_sum(cp2, 1, cp2, 1), connected_sum(cp2, 1, cp2, other)};
}

}  // namespace

TEST_CASE("theta space enumeration") {
  const ThetaSpace space(5, 8);
  CHECK(space.size() == 8ull * 5 * 8 * 8 * 8 * 8 * 24);
  const auto first = space.at(0);
  CHECK(first.i == 1);
  CHECK(first.c == 0);
  CHECK(first.x == std::vector<Vertex>{1, 1, 1, 1});
  CHECK(first.tau == std::vector<Colour>{1, 2, 3, 4});
  const auto last = space.at(space.size() - 1);
  CHECK(last.i == 8);
  CHECK(last.c == 4);
  CHECK(last.tau == std::vector<Colour>{3, 2, 1, 0});
  std::set<std::string> seen;
  for (std::uint64_t k = 0; k < 2000; ++k) seen.insert(to_string(space.at(k * 977)));
  CHECK(seen.size() == 2000);
  CHECK(fixtures::error_of([&] { space.at(space.size()); }) == ErrorKind::InvalidVertex);
}

TEST_CASE("theta applications keep chi up to handles") {
  const auto g = fixtures::cp2();
  const ThetaSpace space(5, 8);
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
  const int chi = oracle::euler_characteristic(g);
  for (int trial = 0; trial < 200; ++trial) {
    const auto params = space.at(pick(rng));
    const auto r = apply_theta(g, params);
    CHECK(oracle::euler_characteristic(r.graph) + 2 * r.handles() == chi);
    CHECK(is_bipartite(r.graph));
  }
}

TEST_CASE("theta rejects malformed parameters") {
  const auto g = fixtures::cp2();
  CHECK(fixtures::error_of([&] { apply_theta(g, ThetaParams{9, 0, {1, 1, 1, 1}, {1, 2, 3, 4}}); }) ==
        ErrorKind::InvalidVertex);
  CHECK(fixtures::error_of([&] { apply_theta(g, ThetaParams{1, 0, {1, 1, 1, 1}, {0, 2, 3, 4}}); }) ==
        ErrorKind::InvalidColour);
  CHECK(fixtures::error_of([&] { apply_theta(g, ThetaParams{1, 0, {1, 1, 1}, {1, 2, 3}}); }) ==
        ErrorKind::InvalidColour);
}

TEST_CASE("classification never merges different chi") {
  const auto family = small_family();
  ClassifyOptions opts;
  opts.budget = 300;
  opts.passes = 2;
  const auto p = classify(family, opts);
  CHECK(p.class_of.size() == family.size());
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (p.class_of[a] == p.class_of[b]) {
        CHECK(euler_characteristic(family[a]) == euler_characteristic(family[b]));
      }
    }
  }
  CHECK(p.class_of[0] != p.class_of[1]);
  std::size_t total = 0;
  for (const auto& cls : p.classes) total += cls.size();
  CHECK(total == family.size());
  for (std::size_t k = 1; k < p.classes.size(); ++k) CHECK(p.classes[k - 1].front() < p.classes[k].front());
  for (const auto& w : p.witnesses) {
    CHECK(p.class_of[w.graph] == p.class_of[w.owner]);
  }
}

TEST_CASE("duplicates share a class and labels propagate") {
  const auto cp2 = fixtures::cp2();
  std::vector<Vertex> label{0, 8, 7, 6, 5, 4, 3, 2, 1};
  const std::vector<ColouredGraph> gs{cp2, ColouredGraph::standard(5), relabel_vertices(cp2, label)};
  ClassifyOptions opts;
  opts.budget = 10;
  auto p = classify(gs, opts);
  CHECK(p.class_of[0] == p.class_of[2]);
  label_classes(p, gs, {{0, "CP2"}, {1, "S4"}});
  CHECK(p.labels[p.class_of[2]] == "CP2");
  CHECK(p.labels[p.class_of[1]] == "S4");
  CHECK(fixtures::error_of([&] { label_classes(p, gs, {{0, "CP2"}, {2, "S4"}}); }) ==
        ErrorKind::ConflictingLabels);
}

TEST_CASE("classification is independent of the worker count") {
  const auto family = small_family();
  ClassifyOptions one;
  one.budget = 200;
  ClassifyOptions many = one;
  many.jobs = 3;
  const auto a = classify(family, one);
  const auto b = classify(family, many);
  CHECK(a.class_of == b.class_of);
  CHECK(a.applications == b.applications);
}

TEST_CASE("dimension mismatch") {
  CHECK(fixtures::error_of([] {
          classify({ColouredGraph::standard(5), ColouredGraph::standard(4)});
        }) == ErrorKind::DimensionMismatch);
}
