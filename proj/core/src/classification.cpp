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

#include "gemcat/classification.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "gemcat/error.hpp"
#include "gemcat/topology.hpp"

namespace gemcat {

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::uint64_t stride_for(std::uint64_t size) {
  if (size <= 2) return 1;
  auto s = static_cast<std::uint64_t>(static_cast<long double>(size) * 0.6180339887498949L);
  while (std::gcd(s, size) != 1) ++s;
  return s % size;
}

std::uint64_t schedule(std::uint64_t position, std::uint64_t size, ThetaOrder order, std::uint64_t stride) {
  if (order == ThetaOrder::Lexicographic) return position;
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(position) * stride) % size);
}

struct Image {
  std::uint64_t index = 0;
  std::string code;
  int handles = 0;
  int rho_n = 0;
};

struct Owner {
  std::size_t graph = 0;
  std::optional<std::uint64_t> index;
  int handles = 0;
};

}  // namespace

std::string to_string(const ThetaParams& params) {
  std::string s = "i=" + std::to_string(params.i) + " c=" + std::to_string(params.c) + " x=";
  for (std::size_t j = 0; j < params.x.size(); ++j) s += (j ? "," : "") + std::to_string(params.x[j]);
  s += " tau=";
  for (std::size_t j = 0; j < params.tau.size(); ++j) s += (j ? "," : "") + std::to_string(params.tau[j]);
  return s;
}

ThetaSpace::ThetaSpace(int colours, int order) : colours_(colours), order_(order) {
  const int n = colours - 1;
  for (int j = 0; j < n; ++j) x_count_ *= static_cast<std::uint64_t>(order);
  tau_count_ = factorial(n);
  size_ = static_cast<std::uint64_t>(order) * static_cast<std::uint64_t>(colours) * x_count_ * tau_count_;
}

ThetaParams ThetaSpace::at(std::uint64_t index) const {
  if (index >= size_) throw GemError(ErrorKind::InvalidVertex, "theta index out of range");
  const int n = colours_ - 1;
  ThetaParams p;
  std::uint64_t tau_code = index % tau_count_;
  index /= tau_count_;
  std::uint64_t x_code = index % x_count_;
  index /= x_count_;
  p.c = static_cast<Colour>(index % static_cast<std::uint64_t>(colours_));
  p.i = static_cast<Vertex>(index / static_cast<std::uint64_t>(colours_)) + 1;
  p.x.assign(n, 0);
  for (int j = n - 1; j >= 0; --j) {
    p.x[j] = static_cast<Vertex>(x_code % static_cast<std::uint64_t>(order_)) + 1;
    x_code /= static_cast<std::uint64_t>(order_);
  }
  std::vector<Colour> pool;
  for (Colour k = 0; k < colours_; ++k) {
    if (k != p.c) pool.push_back(k);
  }
  // Lehmer decoding: lexicographic rank among permutations of pool.
  for (int j = 0; j < n; ++j) {
    const std::uint64_t block = factorial(n - 1 - j);
    const auto pick = static_cast<std::size_t>(tau_code / block);
    tau_code %= block;
    p.tau.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return p;
}

Reduction apply_theta(const ColouredGraph& g, const ThetaParams& params) {
  const int n = g.dimension();
  if (!g.contains(params.i)) throw GemError(ErrorKind::InvalidVertex, "theta vertex i out of range");
  if (params.c < 0 || params.c >= g.colours()) throw GemError(ErrorKind::InvalidColour, "theta colour out of range");
  if (static_cast<int>(params.x.size()) != n || static_cast<int>(params.tau.size()) != n) {
    throw GemError(ErrorKind::InvalidColour, "theta needs n flip targets and an n-permutation");
  }
  ColourSet seen = 0;
  for (Colour d : params.tau) {
    if (d < 0 || d >= g.colours() || d == params.c || (seen & colour_bit(d))) {
      throw GemError(ErrorKind::InvalidColour, "tau is not a permutation of the colours other than c");
    }
    seen |= colour_bit(d);
  }
  for (Vertex v : params.x) {
    if (!g.contains(v)) throw GemError(ErrorKind::InvalidVertex, "theta flip target out of range");
  }

  const Vertex u1 = g.order() + 1;
  const Vertex u2 = g.order() + 2;
  ColouredGraph current = insert_blob(g, params.i, params.c);
  for (int j = 0; j < n; ++j) {
    const Colour d = params.tau[j];
    const Edge e = edge_at(current, d, u1);
    if (e.b != u2) continue;
    const Edge f = edge_at(current, d, params.x[j]);
    if (f.a == u1 || f.a == u2 || f.b == u1 || f.b == u2) continue;
    try {
      current = s_flip(current, e, f);
    } catch (const GemError& err) {
      if (err.kind() != ErrorKind::NotAFlipConfiguration && err.kind() != ErrorKind::LoopCreated) throw;
    }
  }
  return reduce(current);
}

ClassPartition classify(const std::vector<ColouredGraph>& graphs, const ClassifyOptions& options) {
  ClassPartition out;
  const std::size_t count = graphs.size();
  for (const auto& g : graphs) {
    if (g.colours() != graphs.front().colours()) {
      throw GemError(ErrorKind::DimensionMismatch, "all graphs must have the same number of colours");
    }
  }

  std::vector<ColouredGraph> canonical;
  canonical.reserve(count);
  std::unordered_map<std::string, Owner> owners;
  UnionFind uf(count);
  std::map<int, ThetaSpace> spaces;
  std::vector<const ThetaSpace*> space_of(count);
  for (std::size_t g = 0; g < count; ++g) {
    auto form = canonical_form(graphs[g]);
    canonical.push_back(std::move(form.graph));
    const auto& code = form.code.str();
    auto [it, inserted] = owners.emplace(code, Owner{g, std::nullopt, 0});
    if (!inserted && uf.unite(g, it->second.graph)) {
      out.witnesses.push_back(MergeWitness{g, std::nullopt, it->second.graph, std::nullopt, form.code, 0});
    }
    const int order = graphs[g].order();
    auto sit = spaces.find(order);
    if (sit == spaces.end()) sit = spaces.emplace(order, ThetaSpace(graphs[g].colours(), order)).first;
    space_of[g] = &sit->second;
  }

  const std::uint64_t budget = std::max<std::uint64_t>(1, options.budget);
  const int jobs = std::max(1, options.jobs);
  constexpr std::size_t kBlock = 16;
  for (int pass = 0; pass < options.passes; ++pass) {
    const std::uint64_t first = static_cast<std::uint64_t>(pass) * budget;
    std::uint64_t merges = 0;
    bool any_work = false;
    for (std::size_t block = 0; block < count; block += kBlock) {
      const std::size_t block_end = std::min(count, block + kBlock);
      std::vector<std::vector<Image>> images(block_end - block);
      std::atomic<std::size_t> next{block};
      auto worker = [&] {
        for (std::size_t g = next++; g < block_end; g = next++) {
          const ThetaSpace& space = *space_of[g];
          const std::uint64_t stride = stride_for(space.size());
          auto& list = images[g - block];
          for (std::uint64_t pos = first; pos < std::min(space.size(), first + budget); ++pos) {
            const std::uint64_t index = schedule(pos, space.size(), options.order, stride);
            const Reduction r = apply_theta(canonical[g], space.at(index));
            list.push_back(Image{index, code(r.graph).str(), r.handles(), r.stats.rho_n_switches});
          }
        }
      };
      if (jobs == 1) {
        worker();
      } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
      }
      for (std::size_t g = block; g < block_end; ++g) {
        for (auto& img : images[g - block]) {
          any_work = true;
          ++out.applications;
          out.rho_n_switches += static_cast<std::uint64_t>(img.rho_n);
          auto [it, inserted] = owners.emplace(img.code, Owner{g, img.index, img.handles});
          if (inserted) continue;
          const Owner& owner = it->second;
          if (owner.handles != img.handles) {
            ++out.handle_mismatches;
            continue;
          }
          if (uf.unite(g, owner.graph)) {
            ++merges;
            MergeWitness w;
            w.graph = g;
            w.params = space_of[g]->at(img.index);
            w.owner = owner.graph;
            if (owner.index) w.owner_params = space_of[owner.graph]->at(*owner.index);
            w.image = Code(img.code);
            w.handles = img.handles;
            out.witnesses.push_back(std::move(w));
          }
        }
      }
    }
    out.passes_run = pass + 1;
    if (!any_work || merges == 0) break;
  }

  std::map<std::size_t, std::size_t> root_to_class;
  out.class_of.resize(count);
  for (std::size_t g = 0; g < count; ++g) {
    const std::size_t root = uf.find(g);
    auto [it, inserted] = root_to_class.emplace(root, out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.class_of[g] = it->second;
    out.classes[it->second].push_back(g);
  }
  out.labels.assign(out.classes.size(), std::nullopt);
  return out;
}

void label_classes(ClassPartition& partition, const std::vector<ColouredGraph>& graphs,
                   const std::vector<Representative>& representatives) {
  partition.labels.assign(partition.classes.size(), std::nullopt);
  for (const auto& rep : representatives) {
    if (rep.graph >= partition.class_of.size()) throw GemError(ErrorKind::InvalidVertex, "representative out of range");
    auto& label = partition.labels[partition.class_of[rep.graph]];
    if (label && *label != rep.label) {
      throw GemError(ErrorKind::ConflictingLabels, "class holds both " + *label + " and " + rep.label);
    }
    label = rep.label;
  }

  auto beta2_of_class = [&](std::size_t k) -> std::optional<int> {
    std::optional<int> value;
    for (std::size_t g : partition.classes[k]) {
      const auto rec = invariants(graphs[g]);
      if (!rec.beta2 || (value && *value != *rec.beta2)) return std::nullopt;
      value = rec.beta2;
    }
    return value;
  };
  std::vector<std::size_t> unlabelled;
  int labelled = 0;
  for (std::size_t k = 0; k < partition.classes.size(); ++k) {
    if (beta2_of_class(k) != 2) continue;
    if (partition.labels[k]) {
      ++labelled;
    } else {
      unlabelled.push_back(k);
    }
  }
  if (unlabelled.size() == 1 && labelled == 2) partition.labels[unlabelled.front()] = "S2xS2";
}

}  // namespace gemcat
