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

#include "gemcat/coloured_graph.hpp"

#include <cassert>
#include <string>

#include "gemcat/error.hpp"

namespace gemcat {

namespace {

void check_colour_set(const ColouredGraph& g, ColourSet colours) {
  if (colours == 0) throw GemError(ErrorKind::EmptyColourSet, "residue colour set is empty");
  if ((colours & ~g.colour_set()) != 0) {
    throw GemError(ErrorKind::InvalidColour, "colour set exceeds the graph's colours");
  }
}

}  // namespace

ColouredGraph ColouredGraph::build(int colours, int order,
                                   const std::vector<std::vector<Vertex>>& matchings,
                                   Connectivity connectivity) {
  if (colours < 1 || colours > kMaxColours) {
    throw GemError(ErrorKind::InvalidColour, "unsupported colour count " + std::to_string(colours));
  }
  if (order <= 0 || order % 2 != 0) {
    throw GemError(ErrorKind::OddOrder, "order must be positive and even, got " + std::to_string(order));
  }
  if (static_cast<int>(matchings.size()) != colours) {
    throw GemError(ErrorKind::InvalidColour, "expected " + std::to_string(colours) + " matchings");
  }
  std::vector<Vertex> partners(static_cast<std::size_t>(colours) * (order + 1), 0);
  for (Colour c = 0; c < colours; ++c) {
    const auto& m = matchings[c];
    if (static_cast<int>(m.size()) != order) {
      throw GemError(ErrorKind::InvalidVertex, "matching of colour " + std::to_string(c) +
                                                   " has " + std::to_string(m.size()) + " entries");
    }
    for (Vertex v = 1; v <= order; ++v) {
      const Vertex w = m[v - 1];
      if (w < 1 || w > order) {
        throw GemError(ErrorKind::InvalidVertex, "colour " + std::to_string(c) + " maps vertex " +
                                                     std::to_string(v) + " outside 1.." +
                                                     std::to_string(order));
      }
      if (w == v) {
        throw GemError(ErrorKind::FixedPoint,
                       "colour " + std::to_string(c) + " fixes vertex " + std::to_string(v));
      }
      if (m[w - 1] != v) {
        throw GemError(ErrorKind::NotInvolution,
                       "colour " + std::to_string(c) + " is not an involution at vertex " +
                           std::to_string(v));
      }
      partners[static_cast<std::size_t>(c) * (order + 1) + v] = w;
    }
  }
  ColouredGraph g(colours, order, std::move(partners));
  if (connectivity == Connectivity::Required && !is_connected(g)) {
    throw GemError(ErrorKind::Disconnected, "graph is not connected");
  }
  return g;
}

ColouredGraph ColouredGraph::from_partner_table(int colours, int order, std::vector<Vertex> partners) {
  assert(partners.size() == static_cast<std::size_t>(colours) * (order + 1));
#ifndef NDEBUG
  for (Colour c = 0; c < colours; ++c) {
    for (Vertex v = 1; v <= order; ++v) {
      const Vertex w = partners[static_cast<std::size_t>(c) * (order + 1) + v];
      assert(w >= 1 && w <= order && w != v);
      assert(partners[static_cast<std::size_t>(c) * (order + 1) + w] == v);
    }
  }
#endif
  return ColouredGraph(colours, order, std::move(partners));
}

ColouredGraph ColouredGraph::standard(int colours) {
  std::vector<Vertex> partners(static_cast<std::size_t>(colours) * 3, 0);
  for (Colour c = 0; c < colours; ++c) {
    partners[c * 3 + 1] = 2;
    partners[c * 3 + 2] = 1;
  }
  return ColouredGraph(colours, 2, std::move(partners));
}

std::vector<std::vector<Vertex>> ColouredGraph::matchings() const {
  std::vector<std::vector<Vertex>> out(colours_);
  for (Colour c = 0; c < colours_; ++c) {
    auto m = matching(c);
    out[c].assign(m.begin() + 1, m.end());
  }
  return out;
}

ColourSet ColouredGraph::colours_between(Vertex u, Vertex w) const {
  ColourSet set = 0;
  for (Colour c = 0; c < colours_; ++c) {
    if (partner(c, u) == w) set |= colour_bit(c);
  }
  return set;
}

std::vector<std::vector<Vertex>> Residues::components() const {
  std::vector<std::vector<Vertex>> out(count);
  for (std::size_t v = 1; v < label.size(); ++v) out[label[v]].push_back(static_cast<Vertex>(v));
  return out;
}

Residues residues(const ColouredGraph& g, ColourSet colours) {
  check_colour_set(g, colours);
  Residues r;
  r.label.assign(g.order() + 1, -1);
  std::vector<Vertex> stack;
  stack.reserve(g.order());
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (r.label[s] >= 0) continue;
    const int id = r.count++;
    r.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (ColourSet rest = colours; rest != 0; rest &= rest - 1) {
        const Vertex w = g.partner(std::countr_zero(rest), v);
        if (r.label[w] < 0) {
          r.label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return r;
}

int count_residues(const ColouredGraph& g, ColourSet colours) { return residues(g, colours).count; }

int ResidueCensus::total(int h) const {
  int sum = 0;
  for (ColourSet set = 0; set < counts_.size(); ++set) {
    if (colour_count(set) == h) sum += counts_[set];
  }
  return sum;
}

ResidueCensus census(const ColouredGraph& g) {
  const ColourSet full = g.colour_set();
  std::vector<int> counts(static_cast<std::size_t>(full) + 1, 0);
  for (ColourSet set = 1; set <= full; ++set) {
    if (colour_count(set) == 1) {
      counts[set] = g.half_order();
    } else {
      counts[set] = count_residues(g, set);
    }
  }
  counts[0] = g.order();
  return ResidueCensus(g.colours(), g.order(), std::move(counts));
}

bool is_connected(const ColouredGraph& g) { return count_residues(g, g.colour_set()) == 1; }

std::vector<int> bipartition(const ColouredGraph& g) {
  std::vector<int> side(g.order() + 1, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Colour c = 0; c < g.colours(); ++c) {
        const Vertex w = g.partner(c, v);
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return {};
        }
      }
    }
  }
  return side;
}

bool is_bipartite(const ColouredGraph& g) { return !bipartition(g).empty(); }

bool is_contracted(const ColouredGraph& g) {
  for (Colour c = 0; c < g.colours(); ++c) {
    if (g.colours() > 1 && count_residues(g, g.colour_set() & ~colour_bit(c)) != 1) return false;
  }
  return true;
}

ColouredGraph connected_sum(const ColouredGraph& g1, Vertex v1, const ColouredGraph& g2, Vertex v2) {
  if (g1.colours() != g2.colours()) {
    throw GemError(ErrorKind::InvalidColour, "connected sum of graphs with different colour counts");
  }
  if (!g1.contains(v1) || !g2.contains(v2)) {
    throw GemError(ErrorKind::InvalidVertex, "connected sum vertex out of range");
  }
  const int colours = g1.colours();
  const int order = g1.order() + g2.order() - 2;
  // Vertices of g1 except v1 keep their relative order, then those of g2.
  std::vector<Vertex> map1(g1.order() + 1, 0), map2(g2.order() + 1, 0);
  Vertex next = 1;
  for (Vertex v = 1; v <= g1.order(); ++v) {
    if (v != v1) map1[v] = next++;
  }
  for (Vertex v = 1; v <= g2.order(); ++v) {
    if (v != v2) map2[v] = next++;
  }
  std::vector<Vertex> partners(static_cast<std::size_t>(colours) * (order + 1), 0);
  auto at = [&](Colour c, Vertex v) -> Vertex& {
    return partners[static_cast<std::size_t>(c) * (order + 1) + v];
  };
  for (Colour c = 0; c < colours; ++c) {
    for (Vertex v = 1; v <= g1.order(); ++v) {
      if (v == v1) continue;
      const Vertex w = g1.partner(c, v);
      if (w != v1) at(c, map1[v]) = map1[w];
    }
    for (Vertex v = 1; v <= g2.order(); ++v) {
      if (v == v2) continue;
      const Vertex w = g2.partner(c, v);
      if (w != v2) at(c, map2[v]) = map2[w];
    }
    const Vertex a = g1.partner(c, v1);
    const Vertex b = g2.partner(c, v2);
    at(c, map1[a]) = map2[b];
    at(c, map2[b]) = map1[a];
  }
  return ColouredGraph::from_partner_table(colours, order, std::move(partners));
}

ColouredGraph relabel_vertices(const ColouredGraph& g, std::span<const Vertex> new_label) {
  if (static_cast<int>(new_label.size()) != g.order() + 1) {
    throw GemError(ErrorKind::InvalidVertex, "relabelling has wrong size");
  }
  const int order = g.order();
  std::vector<Vertex> partners(static_cast<std::size_t>(g.colours()) * (order + 1), 0);
  for (Colour c = 0; c < g.colours(); ++c) {
    for (Vertex v = 1; v <= order; ++v) {
      partners[static_cast<std::size_t>(c) * (order + 1) + new_label[v]] = new_label[g.partner(c, v)];
    }
  }
  return ColouredGraph::from_partner_table(g.colours(), order, std::move(partners));
}

ColouredGraph permute_colours(const ColouredGraph& g, std::span<const Colour> new_colour) {
  if (static_cast<int>(new_colour.size()) != g.colours()) {
    throw GemError(ErrorKind::InvalidColour, "colour permutation has wrong size");
  }
  const int order = g.order();
  std::vector<Vertex> partners(static_cast<std::size_t>(g.colours()) * (order + 1), 0);
  for (Colour c = 0; c < g.colours(); ++c) {
    auto m = g.matching(c);
    std::copy(m.begin(), m.end(),
              partners.begin() + static_cast<std::ptrdiff_t>(new_colour[c]) * (order + 1));
  }
  return ColouredGraph::from_partner_table(g.colours(), order, std::move(partners));
}

std::vector<ColouredGraph> residue_graphs(const ColouredGraph& g, ColourSet colours) {
  const Residues r = residues(g, colours);
  std::vector<Colour> kept;
  for (ColourSet rest = colours; rest != 0; rest &= rest - 1) kept.push_back(std::countr_zero(rest));
  const int k = static_cast<int>(kept.size());

  std::vector<int> size(r.count, 0);
  std::vector<Vertex> local(g.order() + 1, 0);
  for (Vertex v = 1; v <= g.order(); ++v) local[v] = ++size[r.label[v]];

  std::vector<std::vector<Vertex>> tables(r.count);
  for (int id = 0; id < r.count; ++id) {
    tables[id].assign(static_cast<std::size_t>(k) * (size[id] + 1), 0);
  }
  for (Vertex v = 1; v <= g.order(); ++v) {
    const int id = r.label[v];
    for (int i = 0; i < k; ++i) {
      tables[id][static_cast<std::size_t>(i) * (size[id] + 1) + local[v]] = local[g.partner(kept[i], v)];
    }
  }
  std::vector<ColouredGraph> out;
  out.reserve(r.count);
  for (int id = 0; id < r.count; ++id) {
    out.push_back(ColouredGraph::from_partner_table(k, size[id], std::move(tables[id])));
  }
  return out;
}

}  // namespace gemcat
