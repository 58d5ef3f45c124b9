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

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

std::vector<std::vector<Vertex>> tables(const ColouredGraph& g) {
  std::vector<std::vector<Vertex>> t(g.colours(), std::vector<Vertex>(g.order() + 1, 0));
  for (Colour c = 0; c < g.colours(); ++c) {
    for (Vertex v = 1; v <= g.order(); ++v) t[c][v] = g.partner(c, v);
  }
  return t;
}

ColouredGraph from_tables(int colours, int order, const std::vector<std::vector<Vertex>>& t) {
  std::vector<std::vector<Vertex>> m(colours, std::vector<Vertex>(order));
  for (Colour c = 0; c < colours; ++c) {
    for (Vertex v = 1; v <= order; ++v) m[c][v - 1] = t[c][v];
  }
  return ColouredGraph::build(colours, order, m, gemcat::Connectivity::Optional);
}

int rho3_pairs(const ColouredGraph& g) {
  int count = 0;
  for (Colour c = 0; c < g.colours(); ++c) {
    for (Vertex a = 1; a <= g.order(); ++a) {
      for (Vertex x = a + 1; x <= g.order(); ++x) {
        if (g.partner(c, a) < a || g.partner(c, x) < x || g.partner(c, a) == x) continue;
        if (shared_cycles(g, c, a, x) == g.dimension()) ++count;
      }
    }
  }
  return count;
}

}  // namespace

int residue_count(const ColouredGraph& g, ColourSet colours) {
  Dsu d(g.order() + 1);
  for (Colour c = 0; c < g.colours(); ++c) {
    if (!(colours & gemcat::colour_bit(c))) continue;
    for (Vertex v = 1; v <= g.order(); ++v) d.unite(v, g.partner(c, v));
  }
  int count = 0;
  for (Vertex v = 1; v <= g.order(); ++v) count += d.find(v) == v;
  return count;
}

int euler_characteristic(const ColouredGraph& g) {
  const int n = g.dimension();
  int chi = 0;
  for (ColourSet set = 0; set < (ColourSet{1} << g.colours()); ++set) {
    const int h = gemcat::colour_count(set);
    if (h > n) continue;
    const int count = h == 0 ? g.order() : residue_count(g, set);
    chi += ((n - h) % 2 == 0 ? 1 : -1) * count;
  }
  return chi;
}

bool isomorphic(const ColouredGraph& a, const ColouredGraph& b) {
  if (a.colours() != b.colours() || a.order() != b.order()) return false;
  std::vector<Colour> perm(a.colours());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (Vertex target = 1; target <= b.order(); ++target) {
      std::vector<Vertex> map(a.order() + 1, 0), back(b.order() + 1, 0);
      std::vector<Vertex> queue{1};
      map[1] = target;
      back[target] = 1;
      bool ok = true;
      for (std::size_t q = 0; q < queue.size() && ok; ++q) {
        const Vertex v = queue[q];
        for (Colour c = 0; c < a.colours() && ok; ++c) {
          const Vertex w = a.partner(c, v);
          const Vertex img = b.partner(perm[c], map[v]);
          if (map[w] == 0 && back[img] == 0) {
            map[w] = img;
            back[img] = w;
            queue.push_back(w);
          } else if (map[w] != img) {
            ok = false;
          }
        }
      }
      if (ok && static_cast<int>(queue.size()) == a.order()) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int shared_cycles(const ColouredGraph& g, Colour c, Vertex a, Vertex x) {
  int shared = 0;
  for (Colour j = 0; j < g.colours(); ++j) {
    if (j == c) continue;
    Vertex v = a;
    bool found = false;
    do {
      if (v == x || g.partner(c, v) == x) found = true;
      v = g.partner(j, g.partner(c, v));
    } while (v != a);
    shared += found;
  }
  return shared;
}

std::vector<std::vector<Vertex>> all_matchings(int order) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> m(order + 1, 0);
  std::function<void()> rec = [&] {
    Vertex u = 1;
    while (u <= order && m[u] != 0) ++u;
    if (u > order) {
      out.push_back(m);
      return;
    }
    for (Vertex w = u + 1; w <= order; ++w) {
      if (m[w] != 0) continue;
      m[u] = w;
      m[w] = u;
      rec();
      m[u] = m[w] = 0;
    }
  };
  rec();
  return out;
}

bool reduces_by_dipoles(const ColouredGraph& start) {
  auto t = tables(start);
  int order = start.order();
  const int colours = start.colours();
  while (order > 2) {
    bool done = false;
    for (Vertex u = 1; u <= order && !done; ++u) {
      for (Vertex w = u + 1; w <= order && !done; ++w) {
        ColourSet between = 0;
        for (Colour c = 0; c < colours; ++c) {
          if (t[c][u] == w) between |= gemcat::colour_bit(c);
        }
        const int h = gemcat::colour_count(between);
        if (h == 0 || h == colours) continue;
        ColourSet rest = gemcat::all_colours(colours) & ~between;
        Dsu d(order + 1);
        for (Colour c = 0; c < colours; ++c) {
          if (!(rest & gemcat::colour_bit(c))) continue;
          for (Vertex v = 1; v <= order; ++v) d.unite(v, t[c][v]);
        }
        if (d.find(u) == d.find(w)) continue;
        std::vector<std::vector<Vertex>> next(colours, std::vector<Vertex>(order - 1, 0));
        auto renum = [&](Vertex v) { return v - (v > u) - (v > w); };
        for (Colour c = 0; c < colours; ++c) {
          for (Vertex v = 1; v <= order; ++v) {
            if (v == u || v == w) continue;
            Vertex x = t[c][v];
            if (x == u) x = t[c][w];
            else if (x == w) x = t[c][u];
            next[c][renum(v)] = renum(x);
          }
        }
        t = std::move(next);
        order -= 2;
        done = true;
      }
    }
    if (!done) return false;
  }
  return true;
}

bool surfaces_are_spheres(const ColouredGraph& g) {
  for (ColourSet set = 0; set < 16; ++set) {
    if (gemcat::colour_count(set) != 3) continue;
    std::vector<Colour> cs;
    for (Colour c = 0; c < 4; ++c) {
      if (set & gemcat::colour_bit(c)) cs.push_back(c);
    }
    Dsu comp(g.order() + 1);
    for (Colour c : cs) {
      for (Vertex v = 1; v <= g.order(); ++v) comp.unite(v, g.partner(c, v));
    }
    std::vector<int> chi(g.order() + 1, 0);
    // Each vertex is a triangle (F), each edge of the three colours is an
    // edge of the surface shared by two triangles (E), each bicoloured cycle
    // is a surface vertex (V).
    for (Vertex v = 1; v <= g.order(); ++v) chi[comp.find(v)] += 2 - 3;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        Dsu cyc(g.order() + 1);
        for (Vertex v = 1; v <= g.order(); ++v) {
          cyc.unite(v, g.partner(cs[i], v));
          cyc.unite(v, g.partner(cs[j], v));
        }
        for (Vertex v = 1; v <= g.order(); ++v) {
          if (cyc.find(v) == v) chi[comp.find(v)] += 2;
        }
      }
    }
    // chi holds 2 * (V - E + F) per component root.
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (comp.find(v) == v && chi[v] != 4) return false;
    }
  }
  return true;
}

std::vector<ColouredGraph> brute_force_s3(int order) {
  std::vector<Vertex> m0(order + 1, 0);
  for (Vertex v = 1; v <= order; v += 2) {
    m0[v] = v + 1;
    m0[v + 1] = v;
  }
  const auto all = all_matchings(order);
  std::vector<ColouredGraph> found;
  for (const auto& m1 : all) {
    for (const auto& m2 : all) {
      for (const auto& m3 : all) {
        const ColouredGraph g = from_tables(4, order, {m0, m1, m2, m3});
        if (residue_count(g, 15) != 1 || !surfaces_are_spheres(g) || rho3_pairs(g) != 0) continue;
        if (!reduces_by_dipoles(g)) continue;
        bool seen = false;
        for (const auto& h : found) {
          if (isomorphic(g, h)) {
            seen = true;
            break;
          }
        }
        if (!seen) found.push_back(g);
      }
    }
  }
  return found;
}

ColouredGraph random_graph(int colours, int order, std::mt19937& rng) {
  while (true) {
    std::vector<std::vector<Vertex>> m(colours, std::vector<Vertex>(order));
    for (Colour c = 0; c < colours; ++c) {
      std::vector<Vertex> perm(order);
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int i = 0; i < order; i += 2) {
        m[c][perm[i] - 1] = perm[i + 1];
        m[c][perm[i + 1] - 1] = perm[i];
      }
    }
    const ColouredGraph g = ColouredGraph::build(colours, order, m, gemcat::Connectivity::Optional);
    if (residue_count(g, gemcat::all_colours(colours)) == 1) return g;
  }
}

}  // namespace oracle
