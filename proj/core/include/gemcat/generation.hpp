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

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gemcat/coloured_graph.hpp"

namespace gemcat {

// Orders above this are rejected: S^3 recognition is not known to be exact.
inline constexpr int kMaxGenerationOrder = 22;

struct GenerationOptions {
  int jobs = 1;
  // Conditions (i) and the residue Euler count at every node; false gives the
  // unpruned enumeration of all colour-4 matchings.
  bool prune = true;
  // Half-open range [first, second) of seed indices to process.
  std::optional<std::pair<std::size_t, std::size_t>> seed_range;
  // One file per finished seed; finished seeds are skipped on restart.
  std::filesystem::path checkpoint_dir;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

// Connected 4-coloured gems of S^3 of the given order without rho_3-pairs,
// one per colour-isomorphism class, in canonical form and sorted by Code.
std::vector<ColouredGraph> generate_s3(int order, const GenerationOptions& options = {});

// A member of S^(2p) with a partial colour-4 matching (0 = boundary vertex).
class PartialGraph {
 public:
  explicit PartialGraph(ColouredGraph base);

  const ColouredGraph& base() const { return base_; }
  int order() const { return base_.order(); }
  Vertex partner4(Vertex v) const { return partner4_.at(v); }
  int edges() const { return edges_; }
  int boundary_count() const { return order() - 2 * edges_; }

  PartialGraph with_edge(Vertex u, Vertex w) const;
  // The 5-coloured graph; requires a complete matching.
  ColouredGraph complete() const;

 private:
  ColouredGraph base_;
  std::vector<Vertex> partner4_;
  int edges_ = 0;
};

// Boundary vertices renumbered increasingly; c-adjacency is joining by a
// {c,4}-coloured path. Throws NoBoundary.
ColouredGraph boundary_graph(const PartialGraph& pg);

// (i) no vertex pair joined by three or more edges, and (ii') for every pair
// of colours k, t in {0..3} the {k,t,4}-residues are spheres with holes:
//   closed(kt) + closed(k4) + closed(t4) - r = 2 g(kt4) - boundary g(kt).
bool check_extension(const PartialGraph& pg);

// Final filters applied to a completed graph.
bool is_catalogue_member(const ColouredGraph& g);

struct GeneratedCatalogue {
  std::vector<ColouredGraph> bipartite;
  std::vector<ColouredGraph> nonbipartite;
};

// Extends every seed (a member of S^(order)) by colour-4 matchings, keeping
// rigid dipole-free crystallizations of closed 4-manifolds, deduplicated and
// sorted by Code.
GeneratedCatalogue generate_catalogue(int order, const std::vector<ColouredGraph>& seeds,
                                      const GenerationOptions& options = {});
GeneratedCatalogue generate_catalogue(int order, const GenerationOptions& options = {});

}  // namespace gemcat
