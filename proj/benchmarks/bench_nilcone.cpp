// Copyright 2026 The nilcone Authors.
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

#include <cstdint>
#include <vector>

#include "nilcone/chains.hpp"
#include "nilcone/kac.hpp"
#include "nilcone/polytope.hpp"
#include "nilcone/semistability.hpp"
#include "nilcone/tableau.hpp"

namespace {

using namespace nilcone;

void BM_CanonicalRegions(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_canonical_regions(s));
}
BENCHMARK(BM_CanonicalRegions)->DenseRange(4, 12, 4);

void BM_SemistableRegions(benchmark::State& state) {
  const JordanType t(GenusContext(3), {1, 0, 2, 1, 1}, {2, 1, -3, 4, 0});
  for (auto _ : state) benchmark::DoNotOptimize(is_semistable_regions(t));
}
BENCHMARK(BM_SemistableRegions);

void BM_SemistableInequalities(benchmark::State& state) {
  const JordanType t(GenusContext(3), {1, 0, 2, 1, 1}, {2, 1, -3, 4, 0});
  for (auto _ : state) benchmark::DoNotOptimize(is_semistable_inequalities(t));
}
BENCHMARK(BM_SemistableInequalities);

void BM_Census(benchmark::State& state) {
  const GenusContext ctx(2);
  const auto r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(census(ctx, r, 1));
}
BENCHMARK(BM_Census)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_KappaCensus(benchmark::State& state) {
  const GenusContext ctx(2);
  const auto r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(kappa_census(ctx, r, 1));
}
BENCHMARK(BM_KappaCensus)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_KacPolynomial(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kac_polynomial(g, r));
}
BENCHMARK(BM_KacPolynomial)->Args({2, 2})->Args({2, 3})->Args({3, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_CountAbsIndec(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_abs_indec(2, 2, 2));
}
BENCHMARK(BM_CountAbsIndec)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
