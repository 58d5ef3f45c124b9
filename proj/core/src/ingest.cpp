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

#include "gemcat/ingest.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "gemcat/error.hpp"
#include "gemcat/gem_io.hpp"

namespace gemcat {

namespace {

int factorial(int k) {
  int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Lexicographic rank of a permutation of 0..m-1.
int rank_of(const std::vector<int>& perm) {
  const int m = static_cast<int>(perm.size());
  int rank = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j) smaller += perm[j] < perm[i];
    rank += smaller * factorial(m - 1 - i);
  }
  return rank;
}

std::vector<int> perm_of_rank(int rank, int m) {
  std::vector<int> pool(m);
  for (int i = 0; i < m; ++i) pool[i] = i;
  std::vector<int> perm;
  for (int i = 0; i < m; ++i) {
    const int block = factorial(m - 1 - i);
    perm.push_back(pool[rank / block]);
    pool.erase(pool.begin() + rank / block);
    rank %= block;
  }
  return perm;
}

[[noreturn]] void format_error(int line, const std::string& what) {
  throw GemError(ErrorKind::Format, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

FacetComplex parse_facets(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw GemError(ErrorKind::Format, "empty facet file");
  FacetComplex k;
  int facet_count = 0;
  {
    std::istringstream header(line);
    if (!(header >> k.n >> k.vertex_count >> facet_count) || k.n < 1 || k.vertex_count < 1 || facet_count < 1) {
      format_error(line_no, "expected `n vertex_count facet_count`");
    }
  }
  std::set<int> ids;
  for (int f = 0; f < facet_count; ++f) {
    if (!next_line()) format_error(line_no + 1, "expected " + std::to_string(facet_count) + " facets");
    std::istringstream row(line);
    std::vector<int> facet;
    int v;
    while (row >> v) facet.push_back(v);
    if (!row.eof()) format_error(line_no, "facet entries must be integers");
    std::sort(facet.begin(), facet.end());
    if (static_cast<int>(facet.size()) != k.n + 1 || std::adjacent_find(facet.begin(), facet.end()) != facet.end()) {
      throw GemError(ErrorKind::NotPure,
                     "line " + std::to_string(line_no) + ": facet needs " + std::to_string(k.n + 1) + " distinct vertices");
    }
    ids.insert(facet.begin(), facet.end());
    k.facets.push_back(std::move(facet));
  }
  if (next_line()) format_error(line_no, "unexpected content after the last facet");
  if (static_cast<int>(ids.size()) > k.vertex_count) {
    throw GemError(ErrorKind::Format, "facets use more than " + std::to_string(k.vertex_count) + " vertices");
  }
  return k;
}

FacetComplex read_facet_file(const std::filesystem::path& path) { return parse_facets(read_text_file(path)); }

void check_closed(const FacetComplex& k) {
  std::map<std::vector<int>, int> faces;
  for (const auto& facet : k.facets) {
    if (static_cast<int>(facet.size()) != k.n + 1) throw GemError(ErrorKind::NotPure, "facet of wrong size");
    for (int drop = 0; drop <= k.n; ++drop) {
      std::vector<int> face = facet;
      face.erase(face.begin() + drop);
      ++faces[face];
    }
  }
  for (const auto& [face, count] : faces) {
    if (count != 2) {
      throw GemError(ErrorKind::NotClosed, "a codimension-1 face lies in " + std::to_string(count) + " facets");
    }
  }
}

int simplicial_euler_characteristic(const FacetComplex& k) {
  std::set<std::vector<int>> faces;
  for (const auto& facet : k.facets) {
    const int m = static_cast<int>(facet.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < m; ++i) {
        if (mask & (1 << i)) face.push_back(facet[i]);
      }
      faces.insert(std::move(face));
    }
  }
  int chi = 0;
  for (const auto& face : faces) chi += (face.size() % 2 == 1) ? 1 : -1;
  return chi;
}

ColouredGraph barycentric_gem(const FacetComplex& k) {
  check_closed(k);
  const int n = k.n;
  const int flags = factorial(n + 1);
  const int order = flags * static_cast<int>(k.facets.size());
  std::map<std::vector<int>, std::vector<int>> facets_of_face;
  for (int f = 0; f < static_cast<int>(k.facets.size()); ++f) {
    for (int drop = 0; drop <= n; ++drop) {
      std::vector<int> face = k.facets[f];
      face.erase(face.begin() + drop);
      facets_of_face[face].push_back(f);
    }
  }
  std::vector<std::vector<Vertex>> matchings(n + 1, std::vector<Vertex>(order, 0));
  for (int f = 0; f < static_cast<int>(k.facets.size()); ++f) {
    const auto& facet = k.facets[f];
    for (int r = 0; r < flags; ++r) {
      const Vertex v = f * flags + r + 1;
      const auto perm = perm_of_rank(r, n + 1);
      for (int i = 0; i < n; ++i) {
        auto q = perm;
        std::swap(q[i], q[i + 1]);
        matchings[i][v - 1] = f * flags + rank_of(q) + 1;
      }
      std::vector<int> face;
      for (int i = 0; i < n; ++i) face.push_back(facet[perm[i]]);
      std::vector<int> sorted_face = face;
      std::sort(sorted_face.begin(), sorted_face.end());
      const auto& pair = facets_of_face.at(sorted_face);
      const int other = pair[0] == f ? pair[1] : pair[0];
      const auto& target = k.facets[other];
      std::vector<int> q(n + 1);
      std::vector<char> used(n + 1, 0);
      for (int i = 0; i < n; ++i) {
        q[i] = static_cast<int>(std::find(target.begin(), target.end(), face[i]) - target.begin());
        used[q[i]] = 1;
      }
      q[n] = static_cast<int>(std::find(used.begin(), used.end(), 0) - used.begin());
      matchings[n][v - 1] = other * flags + rank_of(q) + 1;
    }
  }
  return ColouredGraph::build(n + 1, order, matchings, Connectivity::Required);
}

Reduction crystallize(const ColouredGraph& g) { return reduce(g); }

}  // namespace gemcat
