// Copyright 2026 The homtree Authors
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

#include <map>

#include <benchmark/benchmark.h>

#include "homtree/constructions.hpp"
#include "homtree/hom.hpp"
#include "homtree/independent_sets.hpp"
#include "homtree/isomorphism.hpp"
#include "homtree/trees.hpp"

namespace {

using namespace homtree;

const std::vector<Tree>& trees_of(std::size_t n) {
  static std::map<std::size_t, std::vector<Tree>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_trees(n)).first;
  return it->second;
}

// Hom(G_{(12)(34)}, T) summed over every tree T of order n.
void BM_CounterexampleBruteForce(benchmark::State& state) {
  const Graph g = counterexample_pair().first.graph;
  const auto& trees = trees_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    HomCount total = 0;
    for (const auto& t : trees) total += hom_count(g, t.graph());
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trees.size()));
}
BENCHMARK(BM_CounterexampleBruteForce)->DenseRange(7, 11, 2)->Unit(benchmark::kMillisecond);

void BM_CounterexampleDecomposition(benchmark::State& state) {
  const Graph g = counterexample_pair().first.graph;
  const auto& trees = trees_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    HomCount total = 0;
    for (const auto& t : trees) total += hom_tree_diam3_decomp(g, t);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trees.size()));
}
BENCHMARK(BM_CounterexampleDecomposition)->DenseRange(7, 11, 2)->Unit(benchmark::kMillisecond);

void BM_BistarClosedForm(benchmark::State& state) {
  const Graph g = counterexample_pair().first.graph;
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hom_bistar_subset(g, p, p + 1));
}
BENCHMARK(BM_BistarClosedForm)->Arg(2)->Arg(8);

void BM_BistarIndependentSets(benchmark::State& state) {
  const Graph g = counterexample_pair().first.graph;
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hom_bistar_indep(g, p, p + 1));
}
BENCHMARK(BM_BistarIndependentSets)->Arg(2)->Arg(8);

void BM_EnumerateTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(n));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_IsomorphismCounterexample(benchmark::State& state) {
  const auto [first, second] = counterexample_pair();
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(first.graph, second.graph));
}
BENCHMARK(BM_IsomorphismCounterexample);

void BM_IsomorphismConjugate(benchmark::State& state) {
  const Graph g = build_g_pi(5, parse_permutation("(1 2)(3 4 5)", 5)).graph;
  const Graph h = build_g_pi(5, parse_permutation("(2 5)(1 3 4)", 5)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(g, h));
}
BENCHMARK(BM_IsomorphismConjugate);

}  // namespace

BENCHMARK_MAIN();
