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

#include "gemcat/topology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "gemcat/error.hpp"
#include "gemcat/moves.hpp"

namespace gemcat {

namespace {

int pair_count(const ResidueCensus& census, Colour a, Colour b) {
  return census.count(colour_bit(a) | colour_bit(b));
}

bool contracted(const ResidueCensus& census) {
  for (Colour c = 0; c < census.colours(); ++c) {
    if (census.colours() > 1 && census.count_without(c) != 1) return false;
  }
  return true;
}

int rank_bound(const ResidueCensus& census) {
  if (!contracted(census)) throw GemError(ErrorKind::NotContracted, "rank bound needs a crystallization");
  const int n = census.colours() - 1;
  int best = std::numeric_limits<int>::max();
  for (ColourSet set = 1; set < (ColourSet{1} << census.colours()); ++set) {
    if (colour_count(set) == n - 1) best = std::min(best, census.count(set) - 1);
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

}  // namespace

int euler_characteristic(const ResidueCensus& census) {
  const int n = census.colours() - 1;
  const int p = census.order() / 2;
  int chi = ((n - 1) % 2 == 0 ? 1 : -1) * p * (n - 1);
  for (int h = 2; h <= n; ++h) chi += ((n - h) % 2 == 0 ? 1 : -1) * census.total(h);
  return chi;
}

int euler_characteristic(const ColouredGraph& g) { return euler_characteristic(census(g)); }

int euler_characteristic_contracted4(const ResidueCensus& census) {
  if (census.colours() != 5) throw GemError(ErrorKind::InvalidColour, "five colours required");
  return 5 - census.total(3) + census.total(2) - 3 * (census.order() / 2);
}

int rank_bound(const ColouredGraph& g) { return rank_bound(census(g)); }

int betti2(const ColouredGraph& g) {
  const ResidueCensus c = census(g);
  if (rank_bound(c) != 0 || !is_bipartite(g)) {
    throw GemError(ErrorKind::NotSimplyConnectedCertificate,
                   "beta2 needs rank bound 0 on a bipartite crystallization");
  }
  return euler_characteristic(c) - 2;
}

std::vector<CyclicPermutation> cyclic_permutations(int colours) {
  const int n = colours - 1;
  std::vector<CyclicPermutation> out;
  std::vector<Colour> head(n);
  std::iota(head.begin(), head.end(), 0);
  do {
    if (n >= 2 && head.front() > head.back()) continue;
    CyclicPermutation eps(head);
    eps.push_back(n);
    out.push_back(std::move(eps));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

int genus_for(const ResidueCensus& census, const CyclicPermutation& eps) {
  const int n = census.colours() - 1;
  const int p = census.order() / 2;
  int sum = 0;
  for (std::size_t i = 0; i < eps.size(); ++i) sum += pair_count(census, eps[i], eps[(i + 1) % eps.size()]);
  return (2 - sum - (1 - n) * p) / 2;
}

GenusProfile regular_genus(const ColouredGraph& g) {
  if (!is_bipartite(g)) throw GemError(ErrorKind::NonBipartite, "regular genus is computed for bipartite graphs");
  const ResidueCensus c = census(g);
  GenusProfile profile;
  profile.regular_genus = std::numeric_limits<int>::max();
  for (auto& eps : cyclic_permutations(g.colours())) {
    const int rho = genus_for(c, eps);
    profile.regular_genus = std::min(profile.regular_genus, rho);
    profile.by_permutation.emplace_back(std::move(eps), rho);
  }
  return profile;
}

int residue_genus(const ResidueCensus& census, const CyclicPermutation& eps, int i) {
  const int k = static_cast<int>(eps.size());
  if (k != census.colours() || i < 0 || i >= k) throw GemError(ErrorKind::InvalidColour, "bad cyclic permutation index");
  if (census.count_without(eps[i]) != 1) {
    throw GemError(ErrorKind::NotContracted, "residue genus needs a connected residue");
  }
  const int n = census.colours() - 1;
  const int p = census.order() / 2;
  std::vector<Colour> induced;
  for (int j = 1; j < k; ++j) induced.push_back(eps[(i + j) % k]);
  int sum = 0;
  for (std::size_t j = 0; j < induced.size(); ++j) {
    sum += pair_count(census, induced[j], induced[(j + 1) % induced.size()]);
  }
  // The residue is an n-coloured graph of dimension n-1 on all 2p vertices.
  return (2 - sum - (2 - n) * p) / 2;
}

int residue_genus(const ColouredGraph& g, const CyclicPermutation& eps, int i) {
  return residue_genus(census(g), eps, i);
}

bool is_simple(const ColouredGraph& g) {
  const ResidueCensus c = census(g);
  if (!contracted(c)) throw GemError(ErrorKind::NotContracted, "simplicity is defined for crystallizations");
  const int n = g.dimension();
  for (ColourSet set = 1; set < (ColourSet{1} << g.colours()); ++set) {
    if (colour_count(set) == n - 1 && c.count(set) != 1) return false;
  }
  return true;
}

bool residues_are_two_spheres(const ColouredGraph& g4) {
  const int colours = g4.colours();
  for (ColourSet triple = 1; triple < (ColourSet{1} << colours); ++triple) {
    if (colour_count(triple) != 3) continue;
    const Residues comp = residues(g4, triple);
    std::vector<int> euler(comp.count, 0);
    std::vector<int> size(comp.count, 0);
    for (Vertex v = 1; v <= g4.order(); ++v) ++size[comp.label[v]];
    for (ColourSet pair = triple; pair != 0; pair = (pair - 1) & triple) {
      if (colour_count(pair) != 2) continue;
      const Residues cycles = residues(g4, pair);
      std::vector<char> seen(cycles.count, 0);
      for (Vertex v = 1; v <= g4.order(); ++v) {
        if (!seen[cycles.label[v]]) {
          seen[cycles.label[v]] = 1;
          ++euler[comp.label[v]];
        }
      }
    }
    for (int id = 0; id < comp.count; ++id) {
      if (euler[id] - size[id] / 2 != 2) return false;
    }
  }
  return true;
}

bool recognize_s3(const ColouredGraph& g4) {
  if (g4.colours() != 4) throw GemError(ErrorKind::NotAManifoldGem, "S^3 recognition needs a 4-coloured graph");
  if (g4.order() > kS3RecognitionMaxOrder) {
    throw GemError(ErrorKind::OrderTooLarge, "S^3 recognition is only valid up to order " +
                                                 std::to_string(kS3RecognitionMaxOrder));
  }
  if (!is_connected(g4)) throw GemError(ErrorKind::NotAManifoldGem, "graph is disconnected");
  if (!residues_are_two_spheres(g4)) {
    throw GemError(ErrorKind::NotAManifoldGem, "some 3-residue is not a 2-sphere");
  }
  const Reduction r = reduce(g4);
  return r.graph.order() == 2 && r.handles() == 0;
}

bool is_manifold_crystallization(const ColouredGraph& g) {
  const int n = g.dimension();
  if (n <= 2) return true;
  if (n == 3) return residues_are_two_spheres(g);
  if (n != 4) throw GemError(ErrorKind::InvalidColour, "manifold recognition supports dimensions up to 4");
  for (Colour c = 0; c < g.colours(); ++c) {
    for (const auto& part : residue_graphs(g, g.colour_set() & ~colour_bit(c))) {
      try {
        if (!recognize_s3(part)) return false;
      } catch (const GemError& err) {
        if (err.kind() == ErrorKind::NotAManifoldGem) return false;
        throw;
      }
    }
  }
  return true;
}

InvariantRecord invariants(const ColouredGraph& g) {
  const ResidueCensus c = census(g);
  InvariantRecord rec;
  rec.order = g.order();
  rec.bipartite = is_bipartite(g);
  rec.chi = euler_characteristic(c);
  rec.rank_bound = rank_bound(c);
  if (rec.rank_bound == 0 && rec.bipartite) rec.beta2 = rec.chi - 2;
  if (rec.bipartite) {
    int best = std::numeric_limits<int>::max();
    for (auto& eps : cyclic_permutations(g.colours())) {
      const int rho = genus_for(c, eps);
      best = std::min(best, rho);
      rec.genus_by_permutation.emplace_back(std::move(eps), rho);
    }
    rec.regular_genus = best;
  }
  rec.simple = true;
  for (ColourSet set = 1; set < (ColourSet{1} << g.colours()); ++set) {
    if (colour_count(set) == g.dimension() - 1 && c.count(set) != 1) rec.simple = false;
  }
  return rec;
}

}  // namespace gemcat
