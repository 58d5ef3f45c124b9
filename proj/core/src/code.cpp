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

#include "gemcat/code.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <mutex>
#include <numeric>

#include "gemcat/error.hpp"

namespace gemcat {

const std::vector<std::vector<Colour>>& colour_permutations(int colours) {
  static std::array<std::vector<std::vector<Colour>>, kMaxColours + 1> tables;
  static std::array<std::once_flag, kMaxColours + 1> flags;
  if (colours < 0 || colours > kMaxColours) throw GemError(ErrorKind::InvalidColour, "too many colours");
  std::call_once(flags[colours], [colours] {
    std::vector<Colour> perm(colours);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      tables[colours].push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return tables[colours];
}

namespace {

// Rooted numbering for one (root, colour order) candidate, computed lazily so
// that comparisons against the current best can stop early.
class Numbering {
 public:
  Numbering(const ColouredGraph& g, std::vector<Vertex>& new_of, std::vector<Vertex>& old_of)
      : g_(g), new_of_(new_of), old_of_(old_of) {}

  void start(Vertex root, const std::vector<Colour>& order) {
    std::fill(new_of_.begin(), new_of_.end(), 0);
    order_ = &order;
    new_of_[root] = 1;
    old_of_[1] = root;
    assigned_ = 1;
    processed_ = 0;
  }

  // Guarantees that every partner of the vertex numbered i is numbered.
  void ensure(int i) {
    while (processed_ < i) {
      const Vertex v = old_of_[++processed_];
      for (Colour c : *order_) {
        const Vertex w = g_.partner(c, v);
        if (new_of_[w] == 0) {
          new_of_[w] = ++assigned_;
          old_of_[assigned_] = w;
        }
      }
    }
  }

  Vertex value(int colour_rank, int i) {
    ensure(i);
    return new_of_[g_.partner((*order_)[colour_rank], old_of_[i])];
  }

 private:
  const ColouredGraph& g_;
  std::vector<Vertex>& new_of_;
  std::vector<Vertex>& old_of_;
  const std::vector<Colour>* order_ = nullptr;
  int assigned_ = 0;
  int processed_ = 0;
};

std::string serialize(int colours, int order, const std::vector<Vertex>& seq) {
  std::string out = "c" + std::to_string(colours) + ":" + std::to_string(order) + ":";
  out.reserve(out.size() + seq.size() * 3);
  for (int k = 0; k < colours; ++k) {
    if (k > 0) out += '|';
    for (int i = 0; i < order; ++i) {
      if (i > 0) out += ',';
      out += std::to_string(seq[static_cast<std::size_t>(k) * order + i]);
    }
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form(const ColouredGraph& g) {
  if (!is_connected(g)) throw GemError(ErrorKind::Disconnected, "code of a disconnected graph");
  const int colours = g.colours();
  const int order = g.order();
  const auto& perms = colour_permutations(colours);

  std::vector<Vertex> new_of(order + 1), old_of(order + 1);
  std::vector<Vertex> best(static_cast<std::size_t>(colours) * order, order + 1);
  Vertex best_root = 0;
  std::size_t best_perm = 0;
  Numbering numbering(g, new_of, old_of);

  for (Vertex root = 1; root <= order; ++root) {
    for (std::size_t p = 0; p < perms.size(); ++p) {
      numbering.start(root, perms[p]);
      bool smaller = false;
      bool larger = false;
      std::size_t pos = 0;
      for (int k = 0; k < colours && !larger; ++k) {
        for (int i = 1; i <= order; ++i, ++pos) {
          const Vertex value = numbering.value(k, i);
          if (smaller) {
            best[pos] = value;
          } else if (value < best[pos]) {
            smaller = true;
            best[pos] = value;
          } else if (value > best[pos]) {
            larger = true;
            break;
          }
        }
      }
      if (smaller) {
        best_root = root;
        best_perm = p;
      }
    }
  }

  CanonicalForm form;
  form.code = Code(serialize(colours, order, best));
  numbering.start(best_root, perms[best_perm]);
  numbering.ensure(order);
  form.vertex_map.assign(new_of.begin(), new_of.end());
  form.vertex_map[0] = 0;
  form.colour_map.assign(colours, 0);
  for (int k = 0; k < colours; ++k) form.colour_map[perms[best_perm][k]] = k;
  std::vector<Vertex> table(static_cast<std::size_t>(colours) * (order + 1), 0);
  for (int k = 0; k < colours; ++k) {
    for (int i = 1; i <= order; ++i) {
      table[static_cast<std::size_t>(k) * (order + 1) + i] = best[static_cast<std::size_t>(k) * order + i - 1];
    }
  }
  form.graph = ColouredGraph::from_partner_table(colours, order, std::move(table));
  return form;
}

Code code(const ColouredGraph& g) { return canonical_form(g).code; }

bool colour_isomorphic(const ColouredGraph& g1, const ColouredGraph& g2) {
  if (g1.colours() != g2.colours() || g1.order() != g2.order()) {
    if (!is_connected(g1) || !is_connected(g2)) {
      throw GemError(ErrorKind::Disconnected, "isomorphism test on a disconnected graph");
    }
    return false;
  }
  return code(g1) == code(g2);
}

ColouredGraph graph_from_code(const Code& code) {
  const std::string& s = code.str();
  auto fail = [&](const std::string& why) { return GemError(ErrorKind::Format, "bad code '" + s + "': " + why); };
  if (s.size() < 5 || s[0] != 'c') throw fail("missing 'c' prefix");
  std::size_t pos = 1;
  auto read_int = [&](char terminator) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc()) throw fail("expected integer at offset " + std::to_string(pos));
    pos = static_cast<std::size_t>(ptr - s.data());
    if (terminator != '\0') {
      if (pos >= s.size() || s[pos] != terminator) throw fail("expected '" + std::string(1, terminator) + "'");
      ++pos;
    }
    return value;
  };
  const int colours = read_int(':');
  const int order = read_int(':');
  if (colours < 1 || colours > kMaxColours || order < 2 || order % 2 != 0) throw fail("bad header");
  std::vector<std::vector<Vertex>> matchings(colours);
  for (int k = 0; k < colours; ++k) {
    for (int i = 0; i < order; ++i) {
      const bool last_in_colour = i + 1 == order;
      const bool last = last_in_colour && k + 1 == colours;
      matchings[k].push_back(read_int(last ? '\0' : (last_in_colour ? '|' : ',')));
    }
  }
  if (pos != s.size()) throw fail("trailing characters");
  return ColouredGraph::build(colours, order, matchings);
}

}  // namespace gemcat
