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
#include <string_view>
#include <vector>

#include "gemcat/coloured_graph.hpp"
#include "gemcat/moves.hpp"

namespace gemcat {

// A pure n-dimensional simplicial complex given by its facets.
struct FacetComplex {
  int n = 0;
  int vertex_count = 0;
  std::vector<std::vector<int>> facets;  // each sorted, n + 1 distinct ids
};

// `n vertex_count facet_count`, then one facet per line. Throws Format
// (with line numbers) and NotPure.
FacetComplex parse_facets(std::string_view text);
FacetComplex read_facet_file(const std::filesystem::path& path);

// Every (n-1)-face lies in exactly two facets. Throws NotClosed otherwise.
void check_closed(const FacetComplex& k);

int simplicial_euler_characteristic(const FacetComplex& k);

// Gem of the barycentric subdivision: one vertex per flag (facet, ordering of
// its vertices), numbered by facet index then lexicographic rank of the
// ordering. Order (n+1)! times the number of facets.
ColouredGraph barycentric_gem(const FacetComplex& k);

// Reduction to a rigid dipole-free crystallization.
Reduction crystallize(const ColouredGraph& g);

}  // namespace gemcat
