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

#include "doctest.h"
#include "fixtures.hpp"
#include "gemcat/moves.hpp"
#include "gemcat/topology.hpp"
#include "oracles.hpp"

using namespace gemcat;

namespace {

const std::vector<ColouredGraph>& members() {
  static const auto graphs = fixtures::catalogued();
  return graphs;
}

constexpr int kMinAssertions = 1000;

int g_of(const ResidueCensus& cs, std::initializer_list<Colour> colours) {
  ColourSet set = 0;
  for (Colour c : colours) set |= colour_bit(c);
  return cs.count(set);
}

// One random manifold-preserving move, or g itself when the drawn move does
// not apply.
ColouredGraph random_move(const ColouredGraph& g, std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  auto pick = [&](auto& v) -> auto& { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  const int n = g.dimension();
  switch (g.order() > 40 ? 1 : kind(rng)) {
    case 0: {
      std::uniform_int_distribution<Vertex> vertex(1, g.order());
      std::uniform_int_distribution<ColourSet> set(1, g.colour_set() - 1);
      return insert_dipole(g, vertex(rng), set(rng));
    }
    case 1: {
      std::vector<Dipole> all;
      for (int h = 1; h <= n; ++h) {
        for (const auto& d : find_dipoles(g, h)) all.push_back(d);
      }
      return all.empty() ? g : eliminate_dipole(g, pick(all));
    }
    case 2: {
      if (!is_contracted(g)) return g;
      auto pairs = find_rho_pairs(g, n - 1);
      if (pairs.empty()) return g;
      try {
        return switch_rho_pair(g, pick(pairs)).graph;
      } catch (const GemError&) {
        return g;
      }
    }
    case 3: {
      std::vector<Dipole> ds;
      for (int h = 2; h <= n; ++h) {
        for (const auto& d : find_dipoles(g, h)) ds.push_back(d);
      }
      if (ds.empty()) return g;
      const auto& d = pick(ds);
      std::vector<Colour> cs;
      for (Colour c = 0; c < g.colours(); ++c) {
        if (d.colours & colour_bit(c)) cs.push_back(c);
      }
      const Colour c = pick(cs);
      std::uniform_int_distribution<Vertex> vertex(1, g.order());
      try {
        return s_flip(g, edge_at(g, c, d.u), edge_at(g, c, vertex(rng)));
      } catch (const GemError&) {
        return g;
      }
    }
    default: {
      std::vector<Dipole> ds;
      for (int h = 1; h < n; ++h) {
        for (const auto& d : find_dipoles(g, h)) ds.push_back(d);
      }
      if (ds.empty()) return g;
      const auto& d = pick(ds);
      std::vector<Colour> cs;
      for (Colour c = 0; c < g.colours(); ++c) {
        if (!(d.colours & colour_bit(c))) cs.push_back(c);
      }
      const Colour c = pick(cs);
      try {
        return t_flip(g, edge_at(g, c, d.u), edge_at(g, c, d.w));
      } catch (const GemError&) {
        return g;
      }
    }
  }
}

}  // namespace

TEST_CASE("property: planarity of 3-residues") {
  int asserts = 0;
  std::mt19937 rng(101);
  auto check = [&](const ColouredGraph& g) {
    const auto cs = census(g);
    for (Colour i = 0; i < 5; ++i) {
      for (Colour j = i + 1; j < 5; ++j) {
        for (Colour k = j + 1; k < 5; ++k) {
          CHECK(2 * g_of(cs, {i, j, k}) ==
                g_of(cs, {i, j}) + g_of(cs, {i, k}) + g_of(cs, {j, k}) - g.half_order());
          ++asserts;
        }
      }
    }
  };
  for (const auto& g : members()) check(g);
  for (int trial = 0; trial < 100; ++trial) check(fixtures::inflate(fixtures::cp2(), 1 + trial % 6, rng));
  CHECK(asserts >= kMinAssertions);
}

TEST_CASE("property: crystallization chi shortcut equals the general count") {
  int asserts = 0;
  for (const auto& g : members()) {
    const int general = oracle::euler_characteristic(g);
    CHECK(euler_characteristic_contracted4(census(g)) == general);
    CHECK(euler_characteristic(g) == general);
    asserts += 2;
  }
  CHECK(asserts >= kMinAssertions);
}

TEST_CASE("property: betti bounds from order and genus") {
  int asserts = 0;
  for (const auto& g : members()) {
    const int b2 = betti2(g);
    CHECK(3 * b2 <= g.half_order() - 1);
    ++asserts;
    const auto cs = census(g);
    for (const auto& eps : cyclic_permutations(5)) {
      CHECK(b2 <= genus_for(cs, eps) / 2);
      ++asserts;
    }
  }
  CHECK(asserts >= kMinAssertions);
}

TEST_CASE("property: genus relations of residues") {
  int asserts = 0;
  for (const auto& g : members()) {
    const auto cs = census(g);
    const int chi = euler_characteristic(g);
    for (const auto& eps : cyclic_permutations(5)) {
      const int rho = genus_for(cs, eps);
      int rho_hat[5];
      int rho_hat_sum = 0;
      for (int i = 0; i < 5; ++i) {
        rho_hat[i] = residue_genus(cs, eps, i);
        rho_hat_sum += rho_hat[i];
      }
      // The triple is the complement of the residues eps[i+1], eps[i+3].
      int triple_sum = 0;
      for (int i = 0; i < 5; ++i) {
        const int g3 = g_of(cs, {eps[(i + 4) % 5], eps[i], eps[(i + 2) % 5]});
        triple_sum += g3;
        CHECK(g3 == 1 + rho - rho_hat[(i + 1) % 5] - rho_hat[(i + 3) % 5]);
        ++asserts;
      }
      CHECK(triple_sum == 5 + 5 * rho - 2 * rho_hat_sum);
      CHECK(chi == 2 - 2 * rho + rho_hat_sum);
      asserts += 2;
    }
  }
  CHECK(asserts >= kMinAssertions);
}

TEST_CASE("property: moves preserve chi and bipartiteness") {
  int asserts = 0;
  std::mt19937 rng(103);
  const auto& gs = members();
  for (std::size_t start = 0; start < gs.size(); start += 5) {
    ColouredGraph g = gs[start];
    const int chi = oracle::euler_characteristic(g);
    const bool bip = is_bipartite(g);
    for (int step = 0; step < 12; ++step) {
      g = random_move(g, rng);
      CHECK(oracle::euler_characteristic(g) == chi);
      CHECK(is_bipartite(g) == bip);
      asserts += 2;
    }
  }
  CHECK(asserts >= kMinAssertions);
}

TEST_CASE("property: blob and double-switch round trips") {
  int asserts = 0;
  std::mt19937 rng(107);
  const auto& gs = members();
  for (std::size_t k = 0; k < gs.size(); k += 2) {
    const auto& g = gs[k];
    const Code c = code(g);
    std::uniform_int_distribution<Vertex> vertex(1, g.order());
    std::uniform_int_distribution<Colour> colour(0, 4);
    const auto blob = insert_blob(g, vertex(rng), colour(rng));
    const auto d = dipole_between(blob, g.order() + 1, g.order() + 2);
    REQUIRE(d.has_value());
    CHECK(code(eliminate_dipole(blob, *d)) == c);
    ++asserts;

    const Colour sc = colour(rng);
    const Edge e = edge_at(g, sc, vertex(rng));
    const Edge f = edge_at(g, sc, vertex(rng));
    if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) continue;
    const Pairing p = rng() % 2 ? Pairing::Straight : Pairing::Crossed;
    const auto once = switch_edges(g, e, f, p);
    const auto twice = switch_edges(once, edge_at(once, sc, e.a), edge_at(once, sc, e.b), Pairing::Straight);
    CHECK(code(twice) == c);
    ++asserts;
  }
  CHECK(asserts >= kMinAssertions);
}

TEST_CASE("property: every residue of a member reduces to the order-2 sphere") {
  int asserts = 0;
  for (const auto& g : members()) {
    for (Colour c = 0; c < 5; ++c) {
      const auto parts = residue_graphs(g, g.colour_set() & ~colour_bit(c));
      REQUIRE(parts.size() == 1);
      const auto r = reduce(parts[0]);
      CHECK(r.graph.order() == 2);
      CHECK(r.handles() == 0);
      asserts += 2;
    }
  }
  CHECK(asserts >= kMinAssertions);
}
