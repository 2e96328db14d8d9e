//
// Copyright 2026 The edgeldp Authors
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
//


#include <benchmark/benchmark.h>

#include <cmath>

#include "edgeldp/cycle_estimator.h"
#include "edgeldp/exact_counts.h"
#include "edgeldp/experiments.h"
#include "edgeldp/generators.h"
#include "edgeldp/mechanisms.h"
#include "edgeldp/ordering.h"
#include "edgeldp/triangle_estimator.h"

namespace edgeldp {
namespace {

void BM_SampleLaplace(benchmark::State& state) {
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(*SampleLaplace(2.0, rng));
}
BENCHMARK(BM_SampleLaplace);

void BM_RandomizeResponseRow(benchmark::State& state) {
  Rng rng(2);
  std::vector<std::uint8_t> bits(state.range(0), 0);
  for (auto _ : state) benchmark::DoNotOptimize(RandomizeResponseRow(bits, std::log(3.0), rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RandomizeResponseRow)->Arg(1000)->Arg(10000);

void BM_GetOrdering(benchmark::State& state) {
  Graph g = *GenerateBarabasiAlbert(state.range(0), 3, 1);
  std::uint64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(*GetOrdering(g, 0.5, TrialStreams(1, trial++)));
}
BENCHMARK(BM_GetOrdering)->Arg(1000)->Arg(10000);

void BM_CountTriangles(benchmark::State& state) {
  Graph g = *GenerateBarabasiAlbert(state.range(0), 5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(CountTriangles(g));
}
BENCHMARK(BM_CountTriangles)->Arg(1000)->Arg(10000);

void BM_CountCycles(benchmark::State& state) {
  Graph g = *GenerateBarabasiAlbert(200, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(*CountCycles(g, state.range(0)));
}
BENCHMARK(BM_CountCycles)->Arg(5)->Arg(7);

void BM_Degeneracy(benchmark::State& state) {
  Graph g = *GenerateBarabasiAlbert(state.range(0), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Degeneracy(g).degeneracy);
}
BENCHMARK(BM_Degeneracy)->Arg(10000);

void BM_EstimateTriangles(benchmark::State& state) {
  Graph g = *GenerateBarabasiAlbert(state.range(0), 3, 1);
  EstimatorOptions options;
  for (auto _ : state) {
    ++options.trial;
    benchmark::DoNotOptimize(EstimateTriangles(g, options)->estimate);
  }
}
BENCHMARK(BM_EstimateTriangles)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

void BM_EstimateFiveCycles(benchmark::State& state) {
  Graph g = *GenerateBarabasiAlbert(state.range(0), 2, 1);
  EstimatorOptions options;
  for (auto _ : state) {
    ++options.trial;
    benchmark::DoNotOptimize(EstimateOddCycles(g, 5, options)->estimate);
  }
}
BENCHMARK(BM_EstimateFiveCycles)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_ServerWalkSum(benchmark::State& state) {
  Graph g = *GenerateBarabasiAlbert(state.range(0), 2, 1);
  EstimatorOptions options;
  auto rounds = RunSharedRounds(g, options);
  for (auto _ : state) benchmark::DoNotOptimize(*ServerWalkSum(rounds->obfuscated, 9));
}
BENCHMARK(BM_ServerWalkSum)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace edgeldp

BENCHMARK_MAIN();
