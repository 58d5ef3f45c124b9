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

#include "gemcat/generation.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>

#include "gemcat/code.hpp"
#include "gemcat/error.hpp"
#include "gemcat/gem_io.hpp"
#include "gemcat/moves.hpp"
#include "gemcat/topology.hpp"

namespace gemcat {

namespace {

void check_order(int order) {
  if (order < 2 || order % 2 != 0) throw GemError(ErrorKind::OddOrder, "order must be even and positive");
  if (order > kMaxGenerationOrder) {
    throw GemError(ErrorKind::OrderTooLarge, "generation supports orders up to " + std::to_string(kMaxGenerationOrder));
  }
}

template <typename Task>
void run_parallel(std::size_t count, int jobs, Task task) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::atomic<std::size_t> next{0};
  auto body = [&](int worker) {
    for (std::size_t i = next++; i < count; i = next++) task(worker, i);
  };
  if (workers == 1) {
    body(0);
    return;
  }
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) threads.emplace_back(body, w);
  for (auto& t : threads) t.join();
}

// ---------------------------------------------------------------------------
// S^3 gems as bipartite graphs: black b is vertex 2b+1, white w is 2w+2, and
// colour c joins b to the white sigma_c(b), with sigma_0 the identity.

using Perm = std::vector<int>;

Perm inverse(const Perm& s) {
  Perm inv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) inv[s[i]] = static_cast<int>(i);
  return inv;
}

std::vector<std::vector<int>> partitions(int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(p, p);
  return out;
}

Perm permutation_of_type(const std::vector<int>& type) {
  Perm s;
  int start = 0;
  for (int len : type) {
    for (int i = 0; i < len; ++i) s.push_back(start + (i + 1) % len);
    start += len;
  }
  return s;
}

// Every component of the residue on colours {x, y, z} is a 2-sphere.
bool triple_is_spheres(const Perm& x, const Perm& y, const Perm& z, std::vector<int>* comp_out = nullptr) {
  const int p = static_cast<int>(x.size());
  const Perm* maps[3] = {&x, &y, &z};
  const Perm ix = inverse(x), iy = inverse(y), iz = inverse(z);
  const Perm* invs[3] = {&ix, &iy, &iz};
  std::vector<int> comp(p, -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < p; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      for (const Perm* m : maps) {
        for (const Perm* inv : invs) {
          const int nb = (*inv)[(*m)[b]];
          if (comp[nb] < 0) {
            comp[nb] = count;
            stack.push_back(nb);
          }
        }
      }
    }
    ++count;
  }
  std::vector<int> euler(count, 0);
  for (int b = 0; b < p; ++b) --euler[comp[b]];
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      std::vector<char> seen(p, 0);
      for (int s = 0; s < p; ++s) {
        if (seen[s]) continue;
        ++euler[comp[s]];
        for (int b = s; !seen[b]; b = (*invs[j])[(*maps[i])[b]]) seen[b] = 1;
      }
    }
  }
  if (comp_out) *comp_out = std::move(comp);
  return std::all_of(euler.begin(), euler.end(), [](int e) { return e == 2; });
}

int cycles_of(const Perm& x, const Perm& y_inv) {
  const int p = static_cast<int>(x.size());
  std::vector<char> seen(p, 0);
  int count = 0;
  for (int s = 0; s < p; ++s) {
    if (seen[s]) continue;
    ++count;
    for (int b = s; !seen[b]; b = y_inv[x[b]]) seen[b] = 1;
  }
  return count;
}

ColouredGraph bipartite_graph(const std::array<const Perm*, 4>& sigma) {
  const int p = static_cast<int>(sigma[0]->size());
  const int order = 2 * p;
  std::vector<Vertex> table(4 * static_cast<std::size_t>(order + 1), 0);
  for (Colour c = 0; c < 4; ++c) {
    auto* row = table.data() + static_cast<std::size_t>(c) * (order + 1);
    for (int b = 0; b < p; ++b) {
      const Vertex black = 2 * b + 1;
      const Vertex white = 2 * (*sigma[c])[b] + 2;
      row[black] = white;
      row[white] = black;
    }
  }
  return ColouredGraph::from_partner_table(4, order, std::move(table));
}

struct SeedTriple {
  Perm s1;
  Perm s2;
};

// Depth-first choice of sigma_3 over a fixed (sigma_1, sigma_2). Colours are
// labelled so that {0,1,2} has the largest residue pair-cycle sum among the
// triples, which bounds the {a,3} cycle counts from above.
class Sigma3Search {
 public:
  Sigma3Search(const SeedTriple& t, std::unordered_set<std::string>& found)
      : p_(static_cast<int>(t.s1.size())), found_(found) {
    sigma_[0] = Perm(p_);
    std::iota(sigma_[0].begin(), sigma_[0].end(), 0);
    sigma_[1] = t.s1;
    sigma_[2] = t.s2;
    for (int a = 0; a < 3; ++a) inv_[a] = inverse(sigma_[a]);
    g_[0][1] = cycles_of(sigma_[0], inv_[1]);
    g_[0][2] = cycles_of(sigma_[0], inv_[2]);
    g_[1][2] = cycles_of(sigma_[1], inv_[2]);
    top_ = g_[0][1] + g_[0][2] + g_[1][2];
    s3_.assign(p_, -1);
    used_.assign(p_, 0);
    for (auto& ch : chains_) {
      ch.start.resize(p_);
      ch.end.resize(p_);
      std::iota(ch.start.begin(), ch.start.end(), 0);
      std::iota(ch.end.begin(), ch.end.end(), 0);
    }
  }

  void run() { dfs(0); }

 private:
  struct Chains {
    std::vector<int> start;  // valid at chain ends
    std::vector<int> end;    // valid at chain starts
    int closed = 0;
  };

  struct Undo {
    int s, e, b, c;
    bool closed;
  };

  Undo link(Chains& ch, int b, int c) {
    if (ch.end[c] == b) {
      ++ch.closed;
      return {0, 0, b, c, true};
    }
    const int s = ch.start[b];
    const int e = ch.end[c];
    ch.end[s] = e;
    ch.start[e] = s;
    return {s, e, b, c, false};
  }

  void unlink(Chains& ch, const Undo& u) {
    if (u.closed) {
      --ch.closed;
      return;
    }
    ch.end[u.s] = u.b;
    ch.start[u.e] = u.c;
  }

  bool bounds_hold(int remaining) const {
    static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : kPairs) {
      const int a = pr[0], b = pr[1];
      const int closed = chains_[a].closed + chains_[b].closed + g_[a][b];
      if (closed > top_) return false;
      if (closed + 2 * remaining < p_ + 2) return false;
    }
    return true;
  }

  void dfs(int b) {
    if (b == p_) {
      leaf();
      return;
    }
    for (int w = 0; w < p_; ++w) {
      if (used_[w]) continue;
      used_[w] = 1;
      s3_[b] = w;
      Undo undo[3];
      for (int a = 0; a < 3; ++a) undo[a] = link(chains_[a], b, inv_[a][w]);
      if (bounds_hold(p_ - b - 1)) dfs(b + 1);
      for (int a = 2; a >= 0; --a) unlink(chains_[a], undo[a]);
      used_[w] = 0;
    }
    s3_[b] = -1;
  }

  void leaf() {
    if (!triple_is_spheres(sigma_[0], sigma_[1], s3_) || !triple_is_spheres(sigma_[0], sigma_[2], s3_) ||
        !triple_is_spheres(sigma_[1], sigma_[2], s3_)) {
      return;
    }
    const ColouredGraph g = bipartite_graph({&sigma_[0], &sigma_[1], &sigma_[2], &s3_});
    if (!is_connected(g)) return;
    if (!find_rho_pairs(g, 3).empty()) return;
    std::string c = code(g).str();
    if (found_.count(c) || rejected_.count(c)) return;
    if (recognize_s3(g)) {
      found_.insert(std::move(c));
    } else {
      rejected_.insert(std::move(c));
    }
  }

  int p_;
  std::unordered_set<std::string>& found_;
  std::unordered_set<std::string> rejected_;
  Perm sigma_[3];
  Perm inv_[3];
  int g_[3][3] = {};
  int top_ = 0;
  Perm s3_;
  std::vector<char> used_;
  Chains chains_[3];
};

std::vector<SeedTriple> s3_prefixes(int p) {
  std::vector<SeedTriple> out;
  Perm id(p);
  std::iota(id.begin(), id.end(), 0);
  for (const auto& type : partitions(p)) {
    const Perm s1 = permutation_of_type(type);
    const Perm s1_inv = inverse(s1);
    const int g01 = cycles_of(id, s1_inv);
    Perm s2 = id;
    do {
      const Perm s2_inv = inverse(s2);
      if (cycles_of(id, s2_inv) > g01 || cycles_of(s1, s2_inv) > g01) continue;
      if (!triple_is_spheres(id, s1, s2)) continue;
      out.push_back({s1, s2});
    } while (std::next_permutation(s2.begin(), s2.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Colour-4 extension.

class Extender {
 public:
  Extender(const ColouredGraph& base, bool prune) : base_(base), n_(base.order()), prune_(prune), p4_(n_ + 1, 0) {
    for (Colour k = 0; k < 4; ++k) {
      for (Colour t = k + 1; t < 4; ++t) closed_kt_[k][t] = count_residues(base_, colour_bit(k) | colour_bit(t));
    }
  }

  explicit Extender(const PartialGraph& pg) : Extender(pg.base(), true) {
    for (Vertex v = 1; v <= n_; ++v) p4_[v] = pg.partner4(v);
    r_ = pg.edges();
  }

  // Three parallel edges force a rho_3- or rho_4-pair once there is a second
  // vertex pair; the order-2 graph has no pairs of edges at all.
  bool multiplicities_ok() const {
    if (n_ == 2) return true;
    for (Vertex v = 1; v <= n_; ++v) {
      for (Colour c = 0; c < 4; ++c) {
        const Vertex w = base_.partner(c, v);
        const int m = colour_count(base_.colours_between(v, w)) + (p4_[v] == w ? 1 : 0);
        if (m >= 3) return false;
      }
    }
    return true;
  }

  bool residues_ok() {
    const int boundary = n_ - 2 * r_;
    int closed_k4[4];
    for (Colour k = 0; k < 4; ++k) {
      closed_k4[k] = closed_with_4(k);
      if (boundary > 0) follow_paths(k, ends_[k]);
    }
    for (Colour k = 0; k < 4; ++k) {
      for (Colour t = k + 1; t < 4; ++t) {
        const int lhs = closed_kt_[k][t] + closed_k4[k] + closed_k4[t] - r_;
        const int rhs = 2 * components_kt4(k, t) - (boundary > 0 ? boundary_cycles(k, t) : 0);
        if (lhs != rhs) return false;
      }
    }
    return true;
  }

  template <typename Sink>
  void run(Sink&& sink) {
    if (prune_ && (!multiplicities_ok() || !residues_ok())) return;
    dfs(sink);
  }

  ColouredGraph completed() const {
    std::vector<Vertex> table(5 * static_cast<std::size_t>(n_ + 1), 0);
    std::copy(base_.partner_table().begin(), base_.partner_table().end(), table.begin());
    std::copy(p4_.begin(), p4_.end(), table.begin() + 4 * static_cast<std::ptrdiff_t>(n_ + 1));
    return ColouredGraph::from_partner_table(5, n_, std::move(table));
  }

 private:
  template <typename Sink>
  void dfs(Sink& sink) {
    Vertex u = 1;
    while (u <= n_ && p4_[u] != 0) ++u;
    if (u > n_) {
      sink(completed());
      return;
    }
    for (Vertex w = u + 1; w <= n_; ++w) {
      if (p4_[w] != 0) continue;
      if (prune_ && n_ > 2 && colour_count(base_.colours_between(u, w)) >= 2) continue;
      p4_[u] = w;
      p4_[w] = u;
      ++r_;
      if (!prune_ || residues_ok()) dfs(sink);
      --r_;
      p4_[u] = 0;
      p4_[w] = 0;
    }
  }

  int closed_with_4(Colour k) {
    mark_.assign(n_ + 1, 0);
    int closed = 0;
    for (Vertex s = 1; s <= n_; ++s) {
      if (mark_[s] || p4_[s] == 0) continue;
      // Walk the {k,4} component from s in both directions.
      bool open = false;
      Vertex v = s;
      bool use_k = true;
      while (true) {
        mark_[v] = 1;
        const Vertex w = use_k ? base_.partner(k, v) : p4_[v];
        if (w == 0) {
          open = true;
          break;
        }
        v = w;
        use_k = !use_k;
        if (v == s && use_k) break;
      }
      if (open) {
        v = s;
        use_k = false;
        while (true) {
          mark_[v] = 1;
          const Vertex w = use_k ? base_.partner(k, v) : p4_[v];
          if (w == 0) break;
          v = w;
          use_k = !use_k;
        }
      } else {
        ++closed;
      }
    }
    return closed;
  }

  // ends[v] for a boundary vertex v: the boundary vertex reached along the
  // {k,4}-path leaving v by its k-edge.
  void follow_paths(Colour k, std::vector<Vertex>& ends) {
    ends.assign(n_ + 1, 0);
    for (Vertex v = 1; v <= n_; ++v) {
      if (p4_[v] != 0) continue;
      Vertex x = base_.partner(k, v);
      while (p4_[x] != 0) x = base_.partner(k, p4_[x]);
      ends[v] = x;
    }
  }

  int boundary_cycles(Colour k, Colour t) {
    mark_.assign(n_ + 1, 0);
    int cycles = 0;
    for (Vertex s = 1; s <= n_; ++s) {
      if (p4_[s] != 0 || mark_[s]) continue;
      ++cycles;
      Vertex v = s;
      do {
        mark_[v] = 1;
        const Vertex x = ends_[k][v];
        mark_[x] = 1;
        v = ends_[t][x];
      } while (v != s);
    }
    return cycles;
  }

  int components_kt4(Colour k, Colour t) {
    mark_.assign(n_ + 1, 0);
    int count = 0;
    for (Vertex s = 1; s <= n_; ++s) {
      if (mark_[s]) continue;
      ++count;
      stack_.assign(1, s);
      mark_[s] = 1;
      while (!stack_.empty()) {
        const Vertex v = stack_.back();
        stack_.pop_back();
        const Vertex next[3] = {base_.partner(k, v), base_.partner(t, v), p4_[v]};
        for (Vertex w : next) {
          if (w != 0 && !mark_[w]) {
            mark_[w] = 1;
            stack_.push_back(w);
          }
        }
      }
    }
    return count;
  }

  const ColouredGraph& base_;
  int n_;
  bool prune_;
  std::vector<Vertex> p4_;
  int r_ = 0;
  int closed_kt_[4][4] = {};
  std::vector<Vertex> ends_[4];
  std::vector<char> mark_;
  std::vector<Vertex> stack_;
};

std::filesystem::path seed_file(const std::filesystem::path& dir, std::size_t index) {
  return dir / ("seed-" + std::to_string(index) + ".txt");
}

}  // namespace

std::vector<ColouredGraph> generate_s3(int order, const GenerationOptions& options) {
  check_order(order);
  const int p = order / 2;
  const auto prefixes = s3_prefixes(p);
  const int jobs = std::max(1, options.jobs);
  std::vector<std::unordered_set<std::string>> found(jobs);
  std::mutex progress_mutex;
  std::size_t done = 0;
  run_parallel(prefixes.size(), jobs, [&](int worker, std::size_t i) {
    Sigma3Search(prefixes[i], found[worker]).run();
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(++done, prefixes.size());
    }
  });
  std::set<std::string> all;
  for (auto& f : found) all.insert(f.begin(), f.end());
  std::vector<ColouredGraph> out;
  out.reserve(all.size());
  for (const auto& c : all) out.push_back(graph_from_code(Code(c)));
  return out;
}

PartialGraph::PartialGraph(ColouredGraph base) : base_(std::move(base)), partner4_(base_.order() + 1, 0) {
  if (base_.colours() != 4) throw GemError(ErrorKind::InvalidColour, "partial graphs extend 4-coloured graphs");
}

PartialGraph PartialGraph::with_edge(Vertex u, Vertex w) const {
  if (!base_.contains(u) || !base_.contains(w) || u == w) {
    throw GemError(ErrorKind::InvalidVertex, "bad colour-4 edge endpoints");
  }
  if (partner4_[u] != 0 || partner4_[w] != 0) {
    throw GemError(ErrorKind::NotInvolution, "vertex already has a colour-4 edge");
  }
  PartialGraph out = *this;
  out.partner4_[u] = w;
  out.partner4_[w] = u;
  ++out.edges_;
  return out;
}

ColouredGraph PartialGraph::complete() const {
  if (boundary_count() != 0) throw GemError(ErrorKind::FixedPoint, "colour-4 matching is incomplete");
  std::vector<Vertex> table(5 * static_cast<std::size_t>(order() + 1), 0);
  std::copy(base_.partner_table().begin(), base_.partner_table().end(), table.begin());
  std::copy(partner4_.begin(), partner4_.end(), table.begin() + 4 * static_cast<std::ptrdiff_t>(order() + 1));
  return ColouredGraph::from_partner_table(5, order(), std::move(table));
}

ColouredGraph boundary_graph(const PartialGraph& pg) {
  if (pg.boundary_count() == 0) throw GemError(ErrorKind::NoBoundary, "every vertex has a colour-4 edge");
  std::vector<Vertex> number(pg.order() + 1, 0);
  Vertex next = 0;
  for (Vertex v = 1; v <= pg.order(); ++v) {
    if (pg.partner4(v) == 0) number[v] = ++next;
  }
  const int order = next;
  std::vector<std::vector<Vertex>> matchings(4, std::vector<Vertex>(order, 0));
  for (Colour k = 0; k < 4; ++k) {
    for (Vertex v = 1; v <= pg.order(); ++v) {
      if (number[v] == 0) continue;
      Vertex x = pg.base().partner(k, v);
      while (pg.partner4(x) != 0) x = pg.base().partner(k, pg.partner4(x));
      matchings[k][number[v] - 1] = number[x];
    }
  }
  return ColouredGraph::build(4, order, matchings, Connectivity::Optional);
}

bool check_extension(const PartialGraph& pg) {
  Extender ext(pg);
  return ext.multiplicities_ok() && ext.residues_ok();
}

bool is_catalogue_member(const ColouredGraph& g) {
  if (g.colours() != 5 || !is_connected(g) || !is_contracted(g)) return false;
  for (int h = 1; h <= g.dimension(); ++h) {
    if (!find_dipoles(g, h).empty()) return false;
  }
  if (!find_rho_pairs(g, 3).empty() || !find_rho_pairs(g, 4).empty()) return false;
  return is_manifold_crystallization(g);
}

GeneratedCatalogue generate_catalogue(int order, const std::vector<ColouredGraph>& seeds,
                                      const GenerationOptions& options) {
  check_order(order);
  for (const auto& s : seeds) {
    if (s.order() != order || s.colours() != 4) {
      throw GemError(ErrorKind::DimensionMismatch, "seeds must be 4-coloured graphs of order " + std::to_string(order));
    }
  }
  std::size_t first = 0, last = seeds.size();
  if (options.seed_range) {
    first = std::min(options.seed_range->first, seeds.size());
    last = std::clamp(options.seed_range->second, first, seeds.size());
  }
  const bool checkpoint = !options.checkpoint_dir.empty();
  if (checkpoint) std::filesystem::create_directories(options.checkpoint_dir);

  std::vector<std::vector<std::string>> per_seed(last - first);
  std::mutex progress_mutex;
  std::size_t done = 0;
  run_parallel(last - first, options.jobs, [&](int, std::size_t i) {
    const std::size_t index = first + i;
    auto& out = per_seed[i];
    const auto file = checkpoint ? seed_file(options.checkpoint_dir, index) : std::filesystem::path();
    if (checkpoint && std::filesystem::exists(file)) {
      std::ifstream in(file);
      for (std::string line; std::getline(in, line);) {
        if (!line.empty()) out.push_back(line);
      }
    } else {
      std::unordered_set<std::string> local;
      Extender ext(seeds[index], options.prune);
      ext.run([&](const ColouredGraph& g) {
        if (is_catalogue_member(g)) local.insert(code(g).str());
      });
      out.assign(local.begin(), local.end());
      std::sort(out.begin(), out.end());
      if (checkpoint) {
        std::string text;
        for (const auto& c : out) text += c + "\n";
        const auto tmp = file.string() + ".tmp";
        write_text_file(tmp, text);
        std::filesystem::rename(tmp, file);
      }
    }
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(++done, last - first);
    }
  });

  std::set<std::string> all;
  for (const auto& codes : per_seed) all.insert(codes.begin(), codes.end());
  GeneratedCatalogue result;
  for (const auto& c : all) {
    ColouredGraph g = graph_from_code(Code(c));
    (is_bipartite(g) ? result.bipartite : result.nonbipartite).push_back(std::move(g));
  }
  return result;
}

GeneratedCatalogue generate_catalogue(int order, const GenerationOptions& options) {
  GenerationOptions s3_options = options;
  s3_options.seed_range.reset();
  s3_options.progress = nullptr;
  return generate_catalogue(order, generate_s3(order, s3_options), options);
}

}  // namespace gemcat
