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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gemcat/code.hpp"
#include "gemcat/coloured_graph.hpp"
#include "gemcat/moves.hpp"

namespace gemcat {

// One blob-and-flips sequence. x[j] and tau[j] belong to the j-th smallest
// colour k of Delta_n - {c}: the s-flip for k uses the tau[j]-coloured blob
// edge and the tau[j]-coloured edge at vertex x[j].
struct ThetaParams {
  Vertex i = 1;
  Colour c = 0;
  std::vector<Vertex> x;
  std::vector<Colour> tau;

  friend bool operator==(const ThetaParams&, const ThetaParams&) = default;
};

std::string to_string(const ThetaParams& params);

// Enumeration of every ThetaParams of a graph with `colours` colours and
// `order` vertices, in lexicographic order of (i, c, x, tau).
class ThetaSpace {
 public:
  ThetaSpace(int colours, int order);

  std::uint64_t size() const { return size_; }
  ThetaParams at(std::uint64_t index) const;

 private:
  int colours_;
  int order_;
  std::uint64_t x_count_ = 1;
  std::uint64_t tau_count_ = 1;
  std::uint64_t size_ = 0;
};

// Applies the sequence to g, whose vertex numbering must be the canonical
// one. Inapplicable s-flips are skipped.
Reduction apply_theta(const ColouredGraph& g, const ThetaParams& params);

// Schedule of parameter indices visited for each graph: pass k covers
// positions [k * budget, (k + 1) * budget) of the schedule.
enum class ThetaOrder {
  Lexicographic,
  // Position t maps to index (t * stride) mod size with a stride coprime to
  // size, spreading every window across all of (i, c, x, tau).
  Strided,
};

struct ClassifyOptions {
  std::uint64_t budget = 1000;
  int passes = 1;
  int jobs = 1;
  ThetaOrder order = ThetaOrder::Strided;
};

// A merge edge: `graph` (or its image under `params`) has the Code `image`,
// as does `owner` (or its image under owner_params). Replayable with
// apply_theta on canonical forms.
struct MergeWitness {
  std::size_t graph = 0;
  std::optional<ThetaParams> params;
  std::size_t owner = 0;
  std::optional<ThetaParams> owner_params;
  Code image;
  int handles = 0;
};

struct ClassPartition {
  // class_of[g] indexes classes; classes are ordered by their smallest member.
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::optional<std::string>> labels;
  std::vector<MergeWitness> witnesses;
  int passes_run = 0;
  std::uint64_t applications = 0;
  std::uint64_t handle_mismatches = 0;
  std::uint64_t rho_n_switches = 0;
};

// Partitions the inputs by Code equality of reduced theta-images.
ClassPartition classify(const std::vector<ColouredGraph>& graphs, const ClassifyOptions& options = {});

struct Representative {
  std::size_t graph = 0;
  std::string label;
};

// Labels classes holding a representative; a single remaining unlabelled
// class whose members all have beta2 = 2 is labelled S2xS2 once two other
// beta2 = 2 classes carry labels. Throws ConflictingLabels.
void label_classes(ClassPartition& partition, const std::vector<ColouredGraph>& graphs,
                   const std::vector<Representative>& representatives);

}  // namespace gemcat
