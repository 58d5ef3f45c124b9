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

#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gemcat/catalogue.hpp"
#include "gemcat/code.hpp"
#include "gemcat/coloured_graph.hpp"
#include "gemcat/error.hpp"
#include "gemcat/moves.hpp"

namespace fixtures {

// Kind of the GemError thrown by f, if any.
inline std::optional<gemcat::ErrorKind> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const gemcat::GemError& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline const char* kCp2 =
    "c5:8:2,1,5,6,3,4,8,7|2,1,6,7,8,3,4,5|3,5,1,7,2,8,4,6|4,5,6,1,2,3,8,7|4,6,7,1,8,2,3,5";

inline gemcat::ColouredGraph cp2() { return gemcat::graph_from_code(gemcat::Code(kCp2)); }

inline std::filesystem::path data_dir() { return GEMCAT_TEST_DATA; }

// The order-14 bipartite catalogue shipped with the tests.
inline std::vector<gemcat::ColouredGraph> catalogue14() {
  std::vector<gemcat::ColouredGraph> out;
  for (const auto& c : gemcat::read_catalogue(data_dir() / "c14_bipartite.txt").codes) {
    out.push_back(gemcat::graph_from_code(c));
  }
  return out;
}

inline std::vector<gemcat::ColouredGraph> catalogued() {
  auto out = catalogue14();
  out.push_back(gemcat::ColouredGraph::standard(5));
  out.push_back(cp2());
  return out;
}

// Random dipole and blob insertions starting from g.
inline gemcat::ColouredGraph inflate(gemcat::ColouredGraph g, int steps, std::mt19937& rng) {
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<int> vertex(1, g.order());
    std::uniform_int_distribution<gemcat::ColourSet> set(1, g.colour_set() - 1);
    gemcat::ColourSet colours = set(rng);
    g = gemcat::insert_dipole(g, vertex(rng), colours);
  }
  return g;
}

}  // namespace fixtures
