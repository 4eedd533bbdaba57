// Copyright 2026 The amtop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference loop (jobs=1) against the OpenMP path (jobs=0), and the
// table-driven classifier against the literal-quantification oracle.

#include <benchmark/benchmark.h>

#include "amtop/generalized.hpp"
#include "amtop/oracle.hpp"
#include "amtop/theorems.hpp"

namespace {

using amtop::AuditId;
using amtop::RunOptions;
using amtop::Universe;
using amtop::UniverseShape;

void run(benchmark::State& state, AuditId id, Universe u) {
  const RunOptions options{static_cast<int>(state.range(0)), 10};
  for (auto _ : state) {
    auto report = amtop::run_audit(id, u, options);
    benchmark::DoNotOptimize(report);
  }
  state.SetLabel(state.range(0) == 1 ? "serial" : "openmp");
}

void BM_Thm31Pairs3(benchmark::State& state) {
  run(state, AuditId::kThm3_1, Universe{UniverseShape::kPairs, 0, 3});
}
void BM_Prop32Pairs3(benchmark::State& state) {
  run(state, AuditId::kProp3_2, Universe{UniverseShape::kPairs, 0, 3});
}
void BM_Cor33Triples3(benchmark::State& state) {
  run(state, AuditId::kCor3_3, Universe{UniverseShape::kTriples, 0, 3});
}
void BM_Prop38Spaces3(benchmark::State& state) {
  run(state, AuditId::kProp3_8, Universe{UniverseShape::kSpaces, 0, 3});
}

BENCHMARK(BM_Thm31Pairs3)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Prop32Pairs3)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cor33Triples3)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->Iterations(3);
BENCHMARK(BM_Prop38Spaces3)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_FamiliesEngine(benchmark::State& state) {
  const auto& spaces = amtop::enumerate_topologies(4).spaces;
  for (auto _ : state) {
    for (const auto& s : spaces) {
      for (amtop::SetClass c : amtop::kAllSetClasses) benchmark::DoNotOptimize(amtop::family_of(s, c));
    }
  }
}

void BM_FamiliesOracle(benchmark::State& state) {
  const auto& spaces = amtop::enumerate_topologies(4).spaces;
  for (auto _ : state) {
    for (const auto& s : spaces) {
      const auto naive = amtop::oracle::from_space(s);
      for (amtop::SetClass c : amtop::kAllSetClasses) {
        for (unsigned a = 0; a < 16; ++a) {
          benchmark::DoNotOptimize(amtop::oracle::oracle_classify(naive, a, c));
        }
      }
    }
  }
}

void BM_CensusEngine(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(amtop::enumerate_topologies(4));
}

void BM_CensusOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(amtop::oracle::oracle_enumerate_topologies(4));
}

BENCHMARK(BM_FamiliesEngine)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FamiliesOracle)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusEngine)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
