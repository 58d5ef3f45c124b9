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

#include <optional>
#include <utility>
#include <vector>

#include "gemcat/coloured_graph.hpp"

namespace gemcat {

// Alternating residue count valid for every (n+1)-coloured graph:
//   chi = (-1)^(n-1) p (n-1) + sum_{h=2..n} (-1)^(n-h) sum_{#B=h} g_B.
int euler_characteristic(const ColouredGraph& g);
int euler_characteristic(const ResidueCensus& census);
// The 5-coloured crystallization shortcut 5 - sum g_ijk + sum g_ij - 3p.
int euler_characteristic_contracted4(const ResidueCensus& census);

// min { g_B - 1 : #B = n-1 }, an upper bound on rk(pi_1). Throws NotContracted.
int rank_bound(const ColouredGraph& g);
// chi - 2 under the simply-connected certificate (rank bound 0, bipartite).
int betti2(const ColouredGraph& g);

// Cyclic orderings (e_0, ..., e_{n-1}, e_n = n) of the colours up to
// reversal, normalised with e_0 < e_{n-1}; 12 of them for n = 4.
using CyclicPermutation = std::vector<Colour>;
std::vector<CyclicPermutation> cyclic_permutations(int colours);

struct GenusProfile {
  int regular_genus = 0;
  std::vector<std::pair<CyclicPermutation, int>> by_permutation;
};

// Genus of the regular embedding for each cyclic permutation; bipartite only.
GenusProfile regular_genus(const ColouredGraph& g);
int genus_for(const ResidueCensus& census, const CyclicPermutation& eps);
// Genus of the residue missing eps[i] with respect to the induced cyclic
// permutation. Requires a crystallization (the residue is connected).
int residue_genus(const ColouredGraph& g, const CyclicPermutation& eps, int i);
int residue_genus(const ResidueCensus& census, const CyclicPermutation& eps, int i);

// g_B = 1 for every B with #B = n-1. Throws NotContracted.
bool is_simple(const ColouredGraph& g);

// Largest order for which rigid S^3 crystallizations are known to be standard.
inline constexpr int kS3RecognitionMaxOrder = 22;

// Every 3-residue component is a 2-sphere (closed-surface Euler count).
bool residues_are_two_spheres(const ColouredGraph& g4);
// For a connected 4-coloured gem of a closed 3-manifold of order <= 22:
// true iff reduction ends at the order-2 graph without handles.
bool recognize_s3(const ColouredGraph& g4);
// Every residue missing one colour represents the (n-1)-sphere (n = 3, 4).
bool is_manifold_crystallization(const ColouredGraph& g);

struct InvariantRecord {
  int order = 0;
  bool bipartite = false;
  int chi = 0;
  int rank_bound = 0;
  std::optional<int> beta2;
  std::optional<int> regular_genus;
  std::vector<std::pair<CyclicPermutation, int>> genus_by_permutation;
  bool simple = false;
};

// Requires a contracted graph.
InvariantRecord invariants(const ColouredGraph& g);

}  // namespace gemcat
