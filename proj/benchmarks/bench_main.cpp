// Copyright 2026 The gfoart Authors.
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

#include "gfoart/modelgen.hpp"
#include "gfoart/turtle.hpp"
#include "gfoart/vocab.hpp"
#include "test_support.hpp"

namespace {

using namespace gfoart;

void BM_CheckScaffold(benchmark::State& state) {
  const auto kb = scaffold_artifact(
      "Bike", {.with_requirements = true, .with_space = true});
  for (auto _ : state) {
    benchmark::DoNotOptimize(check(kb, all_profiles()));
  }
}
BENCHMARK(BM_CheckScaffold);

void BM_CheckRandom(benchmark::State& state) {
  std::mt19937 rng(7);
  std::vector<KnowledgeBase> kbs;
  for (int i = 0; i < 64; ++i) {
    kbs.push_back(gfoart::testing::random_gfo_kb(
        rng, {.max_entities = 8,
              .max_assertions = static_cast<std::size_t>(state.range(0))}));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check(kbs[i++ % kbs.size()], all_profiles()));
  }
}
BENCHMARK(BM_CheckRandom)->Arg(20)->Arg(80)->Arg(320);

void BM_Serialize(benchmark::State& state) {
  const auto kb = scaffold_artifact(
      "Bike", {.with_requirements = true, .with_space = true});
  for (auto _ : state) benchmark::DoNotOptimize(turtle::serialize(kb));
}
BENCHMARK(BM_Serialize);

void BM_Parse(benchmark::State& state) {
  const auto text = turtle::serialize(scaffold_artifact(
      "Bike", {.with_requirements = true, .with_space = true}));
  for (auto _ : state) benchmark::DoNotOptimize(turtle::parse(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Parse);

void BM_FindModel(benchmark::State& state) {
  const auto axioms = axiom_catalog(default_profiles());
  std::vector<Assertion> must;
  for (int i = 1; i <= state.range(0); ++i) {
    must.push_back({"Artifact", {EntityId("x" + std::to_string(i))},
                    std::nullopt});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_model(axioms, kMaxModelBound, must));
  }
}
BENCHMARK(BM_FindModel)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
