// Copyright 2026 The udgsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>
#include <utility>

#include "udg/delaunay.hpp"
#include "udg/oracle.hpp"
#include "udg/unweighted_sssp.hpp"
#include "udg/wbcp.hpp"
#include "udg/weighted_sssp.hpp"

namespace {

// Uniform instances at a given average degree, cached across benchmarks.
const udg::PointSet& instance(std::size_t n, double degree) {
  static std::map<std::pair<std::size_t, double>, udg::PointSet> cache;
  const auto key = std::make_pair(n, degree);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache
             .emplace(key, udg::oracle::generate(
                               {.n = n,
                                .side = udg::oracle::side_for_degree(n, degree),
                                .seed = 1}))
             .first;
  }
  return it->second;
}

void BM_Delaunay(benchmark::State& state) {
  const auto& points = instance(state.range(0), 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(udg::build_delaunay(points));
  }
  state.SetComplexityN(state.range(0));
}

void BM_UnweightedSolve(benchmark::State& state) {
  const auto& points = instance(state.range(0), static_cast<double>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(udg::solve_unweighted(points, 0, 1.0));
  }
  state.SetComplexityN(state.range(0));
}

void BM_WeightedSolve(benchmark::State& state) {
  const auto& points = instance(state.range(0), static_cast<double>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(udg::solve_weighted(points, 0));
  }
  state.SetComplexityN(state.range(0));
}

void BM_ExplicitBfs(benchmark::State& state) {
  const auto& points = instance(state.range(0), static_cast<double>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        udg::oracle::bfs_oracle(udg::oracle::build_explicit_bucketed(points), 0));
  }
  state.SetComplexityN(state.range(0));
}

void BM_ExplicitDijkstra(benchmark::State& state) {
  const auto& points = instance(state.range(0), static_cast<double>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        udg::oracle::dijkstra_oracle(udg::oracle::build_explicit_bucketed(points), 0));
  }
  state.SetComplexityN(state.range(0));
}

// Alternating red deletions and queries, as the weighted solver issues them.
void BM_WbcpDrain(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto& points = instance(n, 10.0);
  std::vector<udg::WeightedBlue> blues;
  std::vector<udg::PointIndex> reds;
  for (udg::PointIndex p = 0; p < n; ++p) {
    if (p % 2 == 0) {
      blues.push_back({p, 0.0});
    } else {
      reds.push_back(p);
    }
  }
  for (auto _ : state) {
    udg::WbcpIndex index(points, blues, reds);
    while (auto pair = index.min_pair()) index.delete_red(pair->red);
    benchmark::DoNotOptimize(index.red_count());
  }
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_Delaunay)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_UnweightedSolve)->ArgsProduct({{1 << 10, 1 << 12, 1 << 14, 1 << 16}, {10}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnweightedSolve)->ArgsProduct({{1 << 14}, {50, 200}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightedSolve)->ArgsProduct({{1 << 10, 1 << 12, 1 << 14}, {10, 100}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExplicitBfs)->ArgsProduct({{1 << 12, 1 << 14}, {10, 200}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExplicitDijkstra)->ArgsProduct({{1 << 12, 1 << 14}, {10, 100}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WbcpDrain)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);

}  // namespace

BENCHMARK_MAIN();
