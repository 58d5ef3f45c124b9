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

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "gemcat/coloured_graph.hpp"

namespace gemcat {

// Canonical string identifying a connected coloured graph up to
// colour-isomorphism (vertex relabelling plus colour permutation).
//
// Serialized as `c<n_plus_one>:<order>:` followed by the partner sequences
// of the canonical numbering, one per colour, joined by `|`, integers
// comma-separated.
class Code {
 public:
  Code() = default;
  explicit Code(std::string text) : text_(std::move(text)) {}

  const std::string& str() const { return text_; }
  bool empty() const { return text_.empty(); }

  friend auto operator<=>(const Code&, const Code&) = default;

 private:
  std::string text_;
};

struct CanonicalForm {
  Code code;
  // The input renumbered (vertices and colours) so that its matchings are
  // exactly the code's partner sequences.
  ColouredGraph graph;
  // vertex_map[old] = canonical number; colour_map[old] = canonical colour.
  std::vector<Vertex> vertex_map;
  std::vector<Colour> colour_map;
};

// Lexicographic minimum, over every root vertex and colour ordering, of the
// partner sequences produced by the rooted breadth-first numbering. Integer
// sequences are compared numerically.
CanonicalForm canonical_form(const ColouredGraph& g);
Code code(const ColouredGraph& g);
bool colour_isomorphic(const ColouredGraph& g1, const ColouredGraph& g2);

// Parses a code string back into its canonical graph.
ColouredGraph graph_from_code(const Code& code);

// All permutations of 0..colours-1 in lexicographic order.
const std::vector<std::vector<Colour>>& colour_permutations(int colours);

}  // namespace gemcat

template <>
struct std::hash<gemcat::Code> {
  std::size_t operator()(const gemcat::Code& c) const noexcept { return std::hash<std::string>{}(c.str()); }
};
