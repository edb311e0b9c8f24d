// Copyright 2026 The minmodel Authors
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

// Timing suites for the hot paths: hom search, factorization, cylinders,
// universe enumeration and the full analyses.

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "minmodel/analyzer.h"
#include "minmodel/factorization.h"
#include "minmodel/hom_search.h"
#include "minmodel/homotopy.h"
#include "minmodel/universe.h"
#include "workspace.h"

namespace minmodel {
namespace {

const tool::Workspace& Fixture(const std::string& name) {
  static auto* cache = new std::map<std::string, tool::Workspace>();
  auto it = cache->find(name);
  if (it == cache->end()) {
    it = cache->emplace(name, tool::LoadWorkspace(std::string(
                                  MINMODEL_FIXTURE_DIR) + "/" + name))
             .first;
  }
  return it->second;
}

Bound GraphBound(int vertices, int edges) { return Bound{{vertices, edges}}; }

void BM_GraphHomCount(benchmark::State& state) {
  const tool::Workspace& ws = Fixture("gph_ig.ws");
  BoundedUniverse universe = BoundedUniverse::Enumerate(
      ws.base, GraphBound(state.range(0), state.range(0)));
  for (auto _ : state) {
    uint64_t total = 0;
    for (const PresheafPtr& a : universe.objects()) {
      for (const PresheafPtr& b : universe.objects()) {
        total += CountMaps(a, b);
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_GraphHomCount)->Arg(1)->Arg(2);

void BM_UniverseEnumerate(benchmark::State& state) {
  const tool::Workspace& ws = Fixture("gph_ig.ws");
  for (auto _ : state) {
    BoundedUniverse universe = BoundedUniverse::Enumerate(
        ws.base, GraphBound(state.range(0), state.range(1)));
    benchmark::DoNotOptimize(universe.maps().size());
  }
}
BENCHMARK(BM_UniverseEnumerate)->Args({2, 1})->Args({2, 2});

void BM_FactorFold(benchmark::State& state) {
  const tool::Workspace& ws = Fixture("finset_i2.ws");
  const PresheafMap& fold = ws.Map("fold").map;
  for (auto _ : state) {
    CellFactorization result = SoaFactorize(fold, ws.Set("I2"), 1024);
    benchmark::DoNotOptimize(result.rounds);
  }
}
BENCHMARK(BM_FactorFold);

void BM_FactorGraphUniverse(benchmark::State& state) {
  const tool::Workspace& ws = Fixture("gph_ig.ws");
  BoundedUniverse universe =
      BoundedUniverse::Enumerate(ws.base, GraphBound(2, 1));
  for (auto _ : state) {
    int attachments = 0;
    for (const UniverseMap& entry : universe.maps()) {
      attachments += SoaFactorize(entry.map, ws.Set("IG"), 1024).fuel_used;
    }
    benchmark::DoNotOptimize(attachments);
  }
}
BENCHMARK(BM_FactorGraphUniverse)->Unit(benchmark::kMillisecond);

void BM_GraphCylinders(benchmark::State& state) {
  const tool::Workspace& ws = Fixture("gph_ig.ws");
  BoundedUniverse universe =
      BoundedUniverse::Enumerate(ws.base, GraphBound(2, 2));
  for (auto _ : state) {
    HomotopyEngine engine(ws.Set("IG"), 1024);
    for (const PresheafPtr& object : universe.objects()) {
      benchmark::DoNotOptimize(engine.Cylinder(FromInitial(object)));
    }
  }
}
BENCHMARK(BM_GraphCylinders)->Unit(benchmark::kMillisecond);

void BM_CheckMain(benchmark::State& state, const char* fixture,
                  const char* set) {
  const tool::Workspace& ws = Fixture(fixture);
  for (auto _ : state) {
    AnalyzerConfig config;
    config.bound = tool::ParseBound(ws.config.bound, *ws.base);
    config.fuel = ws.config.fuel;
    ModelAnalyzer analyzer(ws.base, ws.Set(set), config);
    benchmark::DoNotOptimize(analyzer.CheckMainCondition().outcome);
  }
}
BENCHMARK_CAPTURE(BM_CheckMain, finset_i1, "finset_i1.ws", "I1")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckMain, finset_i2, "finset_i2.ws", "I2")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckMain, gph_ig, "gph_ig.ws", "IG")
    ->Unit(benchmark::kMillisecond);

void BM_EnumerateWeGraphs(benchmark::State& state) {
  const tool::Workspace& ws = Fixture("gph_ig.ws");
  for (auto _ : state) {
    AnalyzerConfig config;
    config.bound = tool::ParseBound(ws.config.bound, *ws.base);
    config.fuel = ws.config.fuel;
    ModelAnalyzer analyzer(ws.base, ws.Set("IG"), config);
    benchmark::DoNotOptimize(analyzer.EnumerateWe().size());
  }
}
BENCHMARK(BM_EnumerateWeGraphs)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace minmodel

BENCHMARK_MAIN();
