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

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace gemcat {

// Vertices are numbered 1..order; index 0 is never a vertex.
using Vertex = int;
using Colour = int;
// Bit c set <=> colour c belongs to the set.
using ColourSet = std::uint32_t;

inline constexpr int kMaxColours = 8;

constexpr ColourSet colour_bit(Colour c) { return ColourSet{1} << c; }
constexpr ColourSet all_colours(int colours) { return (ColourSet{1} << colours) - 1; }
constexpr int colour_count(ColourSet set) { return std::popcount(set); }

enum class Connectivity { Required, Optional };

// A regular (n+1)-coloured multigraph without loops, stored as one
// fixed-point-free involution per colour. Values are immutable.
class ColouredGraph {
 public:
  ColouredGraph() = default;

  // matchings[c][j] is the c-partner of vertex j+1 (1-based entries).
  static ColouredGraph build(int colours, int order,
                             const std::vector<std::vector<Vertex>>& matchings,
                             Connectivity connectivity = Connectivity::Required);

  // Flat partner table laid out as partners[c * (order + 1) + v]. Only
  // debug-checked; callers guarantee the involution invariants.
  static ColouredGraph from_partner_table(int colours, int order, std::vector<Vertex> partners);

  // The order-2 graph whose two vertices are joined by every colour.
  static ColouredGraph standard(int colours);

  int colours() const { return colours_; }
  int dimension() const { return colours_ - 1; }
  int order() const { return order_; }
  int half_order() const { return order_ / 2; }
  ColourSet colour_set() const { return all_colours(colours_); }

  Vertex partner(Colour c, Vertex v) const { return partners_[index(c, v)]; }
  // Span of size order+1; entry 0 is unused.
  std::span<const Vertex> matching(Colour c) const {
    return {partners_.data() + index(c, 0), static_cast<std::size_t>(order_ + 1)};
  }
  const std::vector<Vertex>& partner_table() const { return partners_; }
  std::vector<std::vector<Vertex>> matchings() const;

  // Colours of the edges joining u and w.
  ColourSet colours_between(Vertex u, Vertex w) const;

  bool contains(Vertex v) const { return v >= 1 && v <= order_; }

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  ColouredGraph(int colours, int order, std::vector<Vertex> partners)
      : colours_(colours), order_(order), partners_(std::move(partners)) {}

  std::size_t index(Colour c, Vertex v) const {
    return static_cast<std::size_t>(c) * static_cast<std::size_t>(order_ + 1) +
           static_cast<std::size_t>(v);
  }

  int colours_ = 0;
  int order_ = 0;
  std::vector<Vertex> partners_;
};

struct Residues {
  int count = 0;
  // label[v] in [0, count) for v in 1..order; label[0] = -1.
  std::vector<int> label;

  std::vector<std::vector<Vertex>> components() const;
};

Residues residues(const ColouredGraph& g, ColourSet colours);
int count_residues(const ColouredGraph& g, ColourSet colours);

// g_B for every colour subset B with #B >= 2.
class ResidueCensus {
 public:
  ResidueCensus() = default;
  ResidueCensus(int colours, int order, std::vector<int> counts)
      : colours_(colours), order_(order), counts_(std::move(counts)) {}

  int colours() const { return colours_; }
  int order() const { return order_; }
  int count(ColourSet set) const { return counts_.at(set); }
  // g_{\hat c}: residues missing colour c.
  int count_without(Colour c) const { return count(all_colours(colours_) & ~colour_bit(c)); }
  // Total number of h-residues.
  int total(int h) const;

 private:
  int colours_ = 0;
  int order_ = 0;
  std::vector<int> counts_;
};

ResidueCensus census(const ColouredGraph& g);

bool is_connected(const ColouredGraph& g);
bool is_bipartite(const ColouredGraph& g);
bool is_contracted(const ColouredGraph& g);

// 0/1 class per vertex with vertex 1 in class 0; empty when not bipartite.
std::vector<int> bipartition(const ColouredGraph& g);

// Deletes v1 and v2 and joins their c-partners for each colour c.
ColouredGraph connected_sum(const ColouredGraph& g1, Vertex v1, const ColouredGraph& g2, Vertex v2);

// new_label[old] gives the new number of each vertex (size order+1).
ColouredGraph relabel_vertices(const ColouredGraph& g, std::span<const Vertex> new_label);
// new_colour[old] gives the new name of each colour.
ColouredGraph permute_colours(const ColouredGraph& g, std::span<const Colour> new_colour);

// Connected components of the B-residue as |B|-coloured graphs, colours
// renumbered increasingly, vertices numbered in increasing original order.
std::vector<ColouredGraph> residue_graphs(const ColouredGraph& g, ColourSet colours);

}  // namespace gemcat
