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
#include <vector>

#include "gemcat/coloured_graph.hpp"

namespace gemcat {

// Two vertices joined by exactly the colours in `colours` (h = #colours
// parallel edges) and lying in distinct residues of the complementary colours.
struct Dipole {
  Vertex u = 0;
  Vertex w = 0;
  ColourSet colours = 0;

  int h() const { return colour_count(colours); }
  friend bool operator==(const Dipole&, const Dipole&) = default;
};

// The c-coloured edge {a, b}; b is always the c-partner of a.
struct Edge {
  Colour colour = 0;
  Vertex a = 0;
  Vertex b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

Edge edge_at(const ColouredGraph& g, Colour c, Vertex v);

// How two c-edges {a,b}, {x,y} are reconnected by a switch.
enum class Pairing {
  Straight,  // {a,x}, {b,y}
  Crossed,   // {a,y}, {b,x}
};

struct RhoPair {
  Edge e;
  Edge f;
  int shared = 0;  // number of common bicoloured cycles

  friend bool operator==(const RhoPair&, const RhoPair&) = default;
};

// Classifies the pair u, w: a Dipole when they form one.
std::optional<Dipole> dipole_between(const ColouredGraph& g, Vertex u, Vertex w);

// Sorted by (u, w) with u < w.
std::vector<Dipole> find_dipoles(const ColouredGraph& g, int h);
// Sorted by (colour, e.a, f.a) with e.a < e.b, f.a < f.b and e.a < f.a.
std::vector<RhoPair> find_rho_pairs(const ColouredGraph& g, int shared);

// Number of {c,j}-cycles (j != c) containing both equally coloured edges.
int shared_cycles(const ColouredGraph& g, const Edge& e, const Edge& f);

ColouredGraph eliminate_dipole(const ColouredGraph& g, const Dipole& d);

// Inserts the dipole (order+1, order+2) joined by `colours`, with order+1
// taking the place of v on every other colour. Always yields a dipole.
ColouredGraph insert_dipole(const ColouredGraph& g, Vertex v, ColourSet colours);
// n-dipole over the c-edge at v.
ColouredGraph insert_blob(const ColouredGraph& g, Vertex v, Colour c);

ColouredGraph switch_edges(const ColouredGraph& g, const Edge& e, const Edge& f, Pairing pairing);

// The pairing under which every bicoloured cycle shared by e and f splits in
// two; empty when the cycles disagree or none is shared.
std::optional<Pairing> splitting_pairing(const ColouredGraph& g, const Edge& e, const Edge& f);

struct SwitchResult {
  ColouredGraph graph;
  Pairing pairing = Pairing::Straight;
};

// Requires shared in {n-1, n}.
SwitchResult switch_rho_pair(const ColouredGraph& g, const RhoPair& rp);

// e lies in an h-dipole (h >= 2), f is an equally coloured edge outside it;
// the switch leaves an (h-1)-dipole on the same two vertices.
ColouredGraph s_flip(const ColouredGraph& g, const Edge& e, const Edge& f);
// e and f are incident to the two distinct vertices of an h-dipole
// (1 <= h <= n-1) whose colours exclude theirs; the switch joins the two
// dipole vertices, leaving an (h+1)-dipole.
ColouredGraph t_flip(const ColouredGraph& g, const Edge& e, const Edge& f);

struct ReductionStats {
  int dipole_eliminations = 0;
  int rho_n_minus_1_switches = 0;
  int rho_n_switches = 0;
};

struct Reduction {
  ColouredGraph graph;
  int orientable_handles = 0;
  int nonorientable_handles = 0;
  ReductionStats stats;

  int handles() const { return orientable_handles + nonorientable_handles; }
};

// Cancels dipoles (largest h first) and switches rho-pairs until the graph is
// a rigid dipole-free crystallization; rho_n switches are counted as handles.
Reduction reduce(const ColouredGraph& g);

}  // namespace gemcat
