// Copyright 2026 The localsym Authors.
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

#include <cmath>

#include "localsym/canonical.hpp"
#include "localsym/random_models.hpp"
#include "localsym/symmetry.hpp"

namespace localsym {
namespace {

Graph Sparse(std::size_t n, double alpha, std::uint64_t seed) {
  return SampleGnp({n, std::pow(static_cast<double>(n), -alpha), seed});
}

void BM_CanonicalWholeGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = SampleGnp({n, 0.3, 1});
  const RootedGraph rg = RootedAt(g, 0);
  for (auto _ : state) benchmark::DoNotOptimize(ComputeCanonicalCode(rg));
}
BENCHMARK(BM_CanonicalWholeGraph)->Arg(16)->Arg(64)->Arg(256);

void BM_CanonicalStar(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  const Graph g = Graph::FromEdgeList(edges, n);
  const RootedGraph rg = RootedAt(g, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ComputeCanonicalCode(rg));
}
BENCHMARK(BM_CanonicalStar)->Arg(50)->Arg(300);

void BM_LocalPartition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = Sparse(n, 0.5, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SymmetryPartition(g, Locality::Order(1)));
  }
}
BENCHMARK(BM_LocalPartition)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_GraphVerdict(benchmark::State& state) {
  const Graph g = Sparse(2000, static_cast<double>(state.range(0)) / 100.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(GraphKLocallySymmetric(g, 1));
}
BENCHMARK(BM_GraphVerdict)->Arg(80)->Arg(50)->Arg(45)->Unit(benchmark::kMillisecond);

void BM_SampleGnp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(Sparse(n, 0.6, seed++));
}
BENCHMARK(BM_SampleGnp)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace localsym

BENCHMARK_MAIN();
