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

#include <benchmark/benchmark.h>

#include <random>

#include "gemcat/classification.hpp"
#include "gemcat/code.hpp"
#include "gemcat/generation.hpp"
#include "gemcat/moves.hpp"
#include "gemcat/topology.hpp"

namespace {

using namespace gemcat;

const ColouredGraph& cp2() {
  static const auto g = graph_from_code(
      Code("c5:8:2,1,5,6,3,4,8,7|2,1,6,7,8,3,4,5|3,5,1,7,2,8,4,6|4,5,6,1,2,3,8,7|4,6,7,1,8,2,3,5"));
  return g;
}

ColouredGraph inflated(int steps) {
  std::mt19937 rng(1);
  ColouredGraph g = cp2();
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<Vertex> vertex(1, g.order());
    std::uniform_int_distribution<ColourSet> set(1, 30);
    g = insert_dipole(g, vertex(rng), set(rng));
  }
  return g;
}

void BM_Code(benchmark::State& state) {
  const auto g = inflated(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(code(g));
  state.SetLabel("order " + std::to_string(g.order()));
}
BENCHMARK(BM_Code)->Arg(0)->Arg(4)->Arg(16);

void BM_Census(benchmark::State& state) {
  const auto g = inflated(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(census(g));
}
BENCHMARK(BM_Census)->Arg(0)->Arg(16);

void BM_Reduce(benchmark::State& state) {
  const auto g = inflated(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g));
}
BENCHMARK(BM_Reduce)->Arg(4)->Arg(16);

void BM_ApplyTheta(benchmark::State& state) {
  const ThetaSpace space(5, cp2().order());
  std::uint64_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_theta(cp2(), space.at(k)));
    k = (k + 7919) % space.size();
  }
}
BENCHMARK(BM_ApplyTheta);

void BM_GenerateS3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_s3(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenerateS3)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GenerateCatalogue(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto seeds = generate_s3(order);
  for (auto _ : state) benchmark::DoNotOptimize(generate_catalogue(order, seeds));
}
BENCHMARK(BM_GenerateCatalogue)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
