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

#include "gemcat/moves.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "gemcat/error.hpp"

namespace gemcat {

namespace {

// Residue labels of one graph, computed per colour set on first use.
class ResidueCache {
 public:
  explicit ResidueCache(const ColouredGraph& g) : g_(g), labels_(std::size_t{1} << g.colours()) {}

  const std::vector<int>& labels(ColourSet set) {
    auto& slot = labels_[set];
    if (slot.empty()) slot = residues(g_, set).label;
    return slot;
  }

 private:
  const ColouredGraph& g_;
  std::vector<std::vector<int>> labels_;
};

std::vector<Vertex> copy_table(const ColouredGraph& g) { return g.partner_table(); }

void check_edge(const ColouredGraph& g, const Edge& e) {
  if (e.colour < 0 || e.colour >= g.colours()) throw GemError(ErrorKind::InvalidColour, "edge colour out of range");
  if (!g.contains(e.a) || !g.contains(e.b)) throw GemError(ErrorKind::InvalidVertex, "edge endpoint out of range");
  if (g.partner(e.colour, e.a) != e.b) {
    throw GemError(ErrorKind::InvalidVertex, "no " + std::to_string(e.colour) + "-edge between " +
                                                 std::to_string(e.a) + " and " + std::to_string(e.b));
  }
}

std::optional<Dipole> dipole_between(const ColouredGraph& g, Vertex u, Vertex w, ResidueCache& cache) {
  if (u == w) return std::nullopt;
  const ColourSet between = g.colours_between(u, w);
  const int h = colour_count(between);
  if (h < 1 || h > g.dimension()) return std::nullopt;
  const auto& label = cache.labels(g.colour_set() & ~between);
  if (label[u] == label[w]) return std::nullopt;
  return Dipole{std::min(u, w), std::max(u, w), between};
}

std::optional<Dipole> first_dipole(const ColouredGraph& g, int h, ResidueCache& cache) {
  for (Vertex u = 1; u <= g.order(); ++u) {
    ColourSet seen = 0;
    for (Colour c = 0; c < g.colours(); ++c) {
      if (seen & colour_bit(c)) continue;
      const Vertex w = g.partner(c, u);
      const ColourSet between = g.colours_between(u, w);
      seen |= between;
      if (w < u || colour_count(between) != h) continue;
      if (auto d = dipole_between(g, u, w, cache)) return d;
    }
  }
  return std::nullopt;
}

std::vector<RhoPair> rho_pairs(const ColouredGraph& g, int shared, ResidueCache& cache, bool first_only) {
  std::vector<RhoPair> out;
  const int colours = g.colours();
  for (Colour c = 0; c < colours; ++c) {
    std::vector<const std::vector<int>*> cycle_labels;
    for (Colour j = 0; j < colours; ++j) {
      if (j != c) cycle_labels.push_back(&cache.labels(colour_bit(c) | colour_bit(j)));
    }
    std::vector<Vertex> tails;
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (v < g.partner(c, v)) tails.push_back(v);
    }
    for (std::size_t i = 0; i < tails.size(); ++i) {
      for (std::size_t k = i + 1; k < tails.size(); ++k) {
        int count = 0;
        for (const auto* label : cycle_labels) count += (*label)[tails[i]] == (*label)[tails[k]];
        if (count == shared) {
          out.push_back(RhoPair{edge_at(g, c, tails[i]), edge_at(g, c, tails[k]), shared});
          if (first_only) return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

Edge edge_at(const ColouredGraph& g, Colour c, Vertex v) {
  if (c < 0 || c >= g.colours()) throw GemError(ErrorKind::InvalidColour, "colour out of range");
  if (!g.contains(v)) throw GemError(ErrorKind::InvalidVertex, "vertex out of range");
  return Edge{c, v, g.partner(c, v)};
}

std::optional<Dipole> dipole_between(const ColouredGraph& g, Vertex u, Vertex w) {
  if (!g.contains(u) || !g.contains(w)) throw GemError(ErrorKind::InvalidVertex, "vertex out of range");
  ResidueCache cache(g);
  return dipole_between(g, u, w, cache);
}

std::vector<Dipole> find_dipoles(const ColouredGraph& g, int h) {
  std::vector<Dipole> out;
  if (h < 1 || h > g.dimension()) return out;
  ResidueCache cache(g);
  for (Vertex u = 1; u <= g.order(); ++u) {
    ColourSet seen = 0;
    for (Colour c = 0; c < g.colours(); ++c) {
      if (seen & colour_bit(c)) continue;
      const Vertex w = g.partner(c, u);
      seen |= g.colours_between(u, w);
      if (w < u) continue;
      if (auto d = dipole_between(g, u, w, cache); d && d->h() == h) out.push_back(*d);
    }
  }
  std::sort(out.begin(), out.end(), [](const Dipole& x, const Dipole& y) {
    return std::tie(x.u, x.w) < std::tie(y.u, y.w);
  });
  return out;
}

std::vector<RhoPair> find_rho_pairs(const ColouredGraph& g, int shared) {
  ResidueCache cache(g);
  return rho_pairs(g, shared, cache, false);
}

int shared_cycles(const ColouredGraph& g, const Edge& e, const Edge& f) {
  check_edge(g, e);
  check_edge(g, f);
  if (e.colour != f.colour) return 0;
  int count = 0;
  for (Colour j = 0; j < g.colours(); ++j) {
    if (j == e.colour) continue;
    const auto label = residues(g, colour_bit(e.colour) | colour_bit(j)).label;
    count += label[e.a] == label[f.a];
  }
  return count;
}

ColouredGraph eliminate_dipole(const ColouredGraph& g, const Dipole& d) {
  if (!g.contains(d.u) || !g.contains(d.w)) throw GemError(ErrorKind::InvalidVertex, "dipole vertex out of range");
  auto actual = dipole_between(g, d.u, d.w);
  if (!actual || actual->colours != d.colours) {
    throw GemError(ErrorKind::NotADipole, "vertices " + std::to_string(d.u) + ", " + std::to_string(d.w) +
                                              " do not form the stated dipole");
  }
  const int order = g.order() - 2;
  const Vertex lo = std::min(d.u, d.w);
  const Vertex hi = std::max(d.u, d.w);
  auto renumber = [&](Vertex v) { return v - (v > lo) - (v > hi); };
  std::vector<Vertex> table(static_cast<std::size_t>(g.colours()) * (order + 1), 0);
  for (Colour c = 0; c < g.colours(); ++c) {
    auto* row = table.data() + static_cast<std::size_t>(c) * (order + 1);
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (v == lo || v == hi) continue;
      Vertex w = g.partner(c, v);
      if (w == d.u) {
        w = g.partner(c, d.w);
      } else if (w == d.w) {
        w = g.partner(c, d.u);
      }
      if (w == lo || w == hi || w == v) {
        throw GemError(ErrorKind::WouldCreateLoop, "dipole elimination would create a loop");
      }
      row[renumber(v)] = renumber(w);
    }
  }
  return ColouredGraph::from_partner_table(g.colours(), order, std::move(table));
}

ColouredGraph insert_dipole(const ColouredGraph& g, Vertex v, ColourSet colours) {
  if (!g.contains(v)) throw GemError(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
  const int h = colour_count(colours);
  if ((colours & ~g.colour_set()) != 0 || h < 1 || h > g.dimension()) {
    throw GemError(ErrorKind::InvalidColour, "dipole colour set must have 1..n colours");
  }
  const int order = g.order() + 2;
  const Vertex u1 = g.order() + 1;
  const Vertex u2 = g.order() + 2;
  std::vector<Vertex> table(static_cast<std::size_t>(g.colours()) * (order + 1), 0);
  for (Colour c = 0; c < g.colours(); ++c) {
    auto* row = table.data() + static_cast<std::size_t>(c) * (order + 1);
    for (Vertex x = 1; x <= g.order(); ++x) row[x] = g.partner(c, x);
    if (colours & colour_bit(c)) {
      row[u1] = u2;
      row[u2] = u1;
    } else {
      const Vertex w = g.partner(c, v);
      row[v] = u1;
      row[u1] = v;
      row[u2] = w;
      row[w] = u2;
    }
  }
  return ColouredGraph::from_partner_table(g.colours(), order, std::move(table));
}

ColouredGraph insert_blob(const ColouredGraph& g, Vertex v, Colour c) {
  if (c < 0 || c >= g.colours()) throw GemError(ErrorKind::InvalidColour, "colour out of range");
  return insert_dipole(g, v, g.colour_set() & ~colour_bit(c));
}

ColouredGraph switch_edges(const ColouredGraph& g, const Edge& e, const Edge& f, Pairing pairing) {
  check_edge(g, e);
  check_edge(g, f);
  if (e.colour != f.colour) throw GemError(ErrorKind::InvalidColour, "switched edges must be equally coloured");
  if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) {
    throw GemError(ErrorKind::SharedVertex, "switched edges share a vertex");
  }
  const Vertex p1 = e.a;
  const Vertex q1 = pairing == Pairing::Straight ? f.a : f.b;
  const Vertex p2 = e.b;
  const Vertex q2 = pairing == Pairing::Straight ? f.b : f.a;
  if (p1 == q1 || p2 == q2) throw GemError(ErrorKind::LoopCreated, "switch would create a loop");
  auto table = copy_table(g);
  auto* row = table.data() + static_cast<std::size_t>(e.colour) * (g.order() + 1);
  row[p1] = q1;
  row[q1] = p1;
  row[p2] = q2;
  row[q2] = p2;
  return ColouredGraph::from_partner_table(g.colours(), g.order(), std::move(table));
}

std::optional<Pairing> splitting_pairing(const ColouredGraph& g, const Edge& e, const Edge& f) {
  check_edge(g, e);
  check_edge(g, f);
  if (e.colour != f.colour) return std::nullopt;
  std::optional<Pairing> vote;
  const Colour c = e.colour;
  for (Colour j = 0; j < g.colours(); ++j) {
    if (j == c) continue;
    // Walk the {c,j}-cycle from b, leaving along j, until it meets f or returns to a.
    Vertex v = e.b;
    std::optional<Pairing> here;
    for (int steps = 0; steps <= g.order(); ++steps) {
      v = g.partner(j, v);
      if (v == e.a) break;
      if (v == f.a) {
        here = Pairing::Crossed;  // path b..x closes with {b,x}
        break;
      }
      if (v == f.b) {
        here = Pairing::Straight;  // path b..y closes with {b,y}
        break;
      }
      v = g.partner(c, v);
    }
    if (!here) continue;
    if (vote && *vote != *here) return std::nullopt;
    vote = here;
  }
  return vote;
}

SwitchResult switch_rho_pair(const ColouredGraph& g, const RhoPair& rp) {
  check_edge(g, rp.e);
  check_edge(g, rp.f);
  const int n = g.dimension();
  const int shared = shared_cycles(g, rp.e, rp.f);
  if (rp.e.colour != rp.f.colour || shared != rp.shared || (shared != n - 1 && shared != n)) {
    throw GemError(ErrorKind::NotRhoPair, "edges do not form a rho_{n-1} or rho_n pair");
  }
  const auto pairing = splitting_pairing(g, rp.e, rp.f);
  if (!pairing) throw GemError(ErrorKind::NoAdmissiblePairing, "shared cycles disagree on the splitting pairing");
  return SwitchResult{switch_edges(g, rp.e, rp.f, *pairing), *pairing};
}

ColouredGraph s_flip(const ColouredGraph& g, const Edge& e, const Edge& f) {
  check_edge(g, e);
  check_edge(g, f);
  if (e.colour != f.colour) throw GemError(ErrorKind::NotAFlipConfiguration, "flip edges must be equally coloured");
  const auto dipole = dipole_between(g, e.a, e.b);
  if (!dipole || dipole->h() < 2) {
    throw GemError(ErrorKind::NotAFlipConfiguration, "s-flip edge does not lie in an h-dipole with h >= 2");
  }
  if (f.a == e.a || f.a == e.b || f.b == e.a || f.b == e.b) {
    throw GemError(ErrorKind::NotAFlipConfiguration, "s-flip target edge touches the dipole");
  }
  const auto pairing = splitting_pairing(g, e, f);
  if (!pairing) throw GemError(ErrorKind::NotAFlipConfiguration, "edges share no consistently split cycle");
  auto result = switch_edges(g, e, f, *pairing);
  const auto after = dipole_between(result, e.a, e.b);
  if (!after || after->colours != (dipole->colours & ~colour_bit(e.colour))) {
    throw GemError(ErrorKind::NotAFlipConfiguration, "s-flip does not leave an (h-1)-dipole");
  }
  return result;
}

ColouredGraph t_flip(const ColouredGraph& g, const Edge& e, const Edge& f) {
  check_edge(g, e);
  check_edge(g, f);
  if (e.colour != f.colour) throw GemError(ErrorKind::NotAFlipConfiguration, "flip edges must be equally coloured");
  const auto dipole = dipole_between(g, e.a, f.a);
  if (!dipole || dipole->h() > g.dimension() - 1 || (dipole->colours & colour_bit(e.colour))) {
    throw GemError(ErrorKind::NotAFlipConfiguration,
                   "t-flip edges must hang off the two vertices of an h-dipole, h <= n-1");
  }
  return switch_edges(g, e, f, Pairing::Straight);
}

Reduction reduce(const ColouredGraph& g) {
  Reduction out;
  ColouredGraph current = g;
  const int n = g.dimension();
  bool expect_dipole = false;
  while (true) {
    ResidueCache cache(current);
    std::optional<Dipole> dipole;
    for (int h = n; h >= 1 && !dipole; --h) dipole = first_dipole(current, h, cache);
    if (dipole) {
      current = eliminate_dipole(current, *dipole);
      ++out.stats.dipole_eliminations;
      expect_dipole = false;
      continue;
    }
    if (expect_dipole) {
      throw GemError(ErrorKind::StuckNotContracted, "rho-pair switch produced no dipole; input is not a manifold gem");
    }
    bool switched = false;
    for (int s : {n - 1, n}) {
      if (s < 1) continue;
      for (const auto& rp : rho_pairs(current, s, cache, false)) {
        const auto pairing = splitting_pairing(current, rp.e, rp.f);
        if (!pairing) continue;
        const bool orientable = is_bipartite(current);
        current = switch_edges(current, rp.e, rp.f, *pairing);
        if (s == n) {
          ++out.stats.rho_n_switches;
          ++(orientable ? out.orientable_handles : out.nonorientable_handles);
        } else {
          ++out.stats.rho_n_minus_1_switches;
        }
        switched = true;
        break;
      }
      if (switched) break;
    }
    if (switched) {
      expect_dipole = true;
      continue;
    }
    if (!is_contracted(current)) {
      throw GemError(ErrorKind::StuckNotContracted, "graph is not contracted but has no 1-dipole");
    }
    out.graph = std::move(current);
    return out;
  }
}

}  // namespace gemcat
