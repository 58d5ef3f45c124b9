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

#include <chrono>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "gemcat/ingest.hpp"
#include "gemcat/moves.hpp"
#include "gemcat/topology.hpp"
#include "oracles.hpp"

using namespace gemcat;

namespace {

// Facet file of the boundary of the (n+1)-simplex on vertices 0..n+1.
std::string boundary_of_simplex(int n) {
  std::ostringstream out;
  out << n << ' ' << n + 2 << ' ' << n + 2 << '\n';
  for (int skip = 0; skip <= n + 1; ++skip) {
    for (int v = 0; v <= n + 1; ++v) {
      if (v != skip) out << v << ' ';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("parse facets") {
  const auto k = parse_facets(boundary_of_simplex(2));
  CHECK(k.n == 2);
  CHECK(k.vertex_count == 4);
  CHECK(k.facets.size() == 4);
  CHECK(k.facets.front() == std::vector<int>{1, 2, 3});
  CHECK_NOTHROW(check_closed(k));
  CHECK(simplicial_euler_characteristic(k) == 2);
}

TEST_CASE("facet file errors") {
  CHECK(fixtures::error_of([] { parse_facets(""); }) == ErrorKind::Format);
  CHECK(fixtures::error_of([] { parse_facets("2 4 2\n0 1 2\n"); }) == ErrorKind::Format);
  CHECK(fixtures::error_of([] { parse_facets("2 4 1\n0 1\n"); }) == ErrorKind::NotPure);
  CHECK(fixtures::error_of([] { parse_facets("2 4 1\n0 1 1\n"); }) == ErrorKind::NotPure);
  CHECK(fixtures::error_of([] { parse_facets("2 3 2\n0 1 2\n1 2 3\n"); }) == ErrorKind::Format);
  CHECK(fixtures::error_of([] { parse_facets("2 4 1\n0 1 x\n"); }) == ErrorKind::Format);
  CHECK(fixtures::error_of([] { check_closed(parse_facets("2 3 1\n0 1 2\n")); }) == ErrorKind::NotClosed);
  try {
    parse_facets("2 4 2\n0 1 2\n\n0 1 x\n");
    FAIL("expected a format error");
  } catch (const GemError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("barycentric gems of sphere boundaries") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto k = parse_facets(boundary_of_simplex(n));
    const auto g = barycentric_gem(k);
    int factorial = 1;
    for (int i = 2; i <= n + 1; ++i) factorial *= i;
    CHECK(g.order() == (n + 2) * factorial);
    CHECK(g.colours() == n + 1);
    CHECK(is_bipartite(g));
    CHECK(euler_characteristic(g) == simplicial_euler_characteristic(k));
    // Each vertex of the complex is one residue missing its colour 0.
    CHECK(count_residues(g, g.colour_set() & ~colour_bit(0)) == n + 2);
  }
}

TEST_CASE("crystallize reaches the order-2 graph") {
  const auto start = std::chrono::steady_clock::now();
  for (int n : {3, 4}) {
    const auto r = crystallize(barycentric_gem(parse_facets(boundary_of_simplex(n))));
    CHECK(r.graph == ColouredGraph::standard(n + 1));
    CHECK(r.handles() == 0);
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::minutes(1));
}

TEST_CASE("facet ids need not be contiguous") {
  const auto k = parse_facets("1 3 3\n10 20\n20 30\n10 30\n");
  const auto g = barycentric_gem(k);
  CHECK(g.order() == 6);
  CHECK(crystallize(g).graph == ColouredGraph::standard(2));
}
