/*
 * Copyright 2026 The zeta-arena Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Batch classification of the catalog padded with a few fixed expressions,
// serial reference against the OpenMP variant.

#include <benchmark/benchmark.h>

#include "zeta/analysis.hpp"

namespace {

std::vector<zeta::Expr> workload(std::size_t random_count) {
  std::vector<zeta::Expr> es;
  for (auto& [name, e] : zeta::figure_catalog()) es.push_back(e);
  const char* extra[] = {"mu X. T + X @ X", "zeta X. 1 + X * X", "nu X. zeta Y. X + Y", "mu X. nu Y. X + Y"};
  for (std::size_t i = 0; es.size() < 15 + random_count; ++i) es.push_back(zeta::parse(extra[i % 4]));
  return es;
}

void BM_ClassifySerial(benchmark::State& state) {
  auto es = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zeta::classify_batch_serial(es));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(es.size()));
}

void BM_ClassifyParallel(benchmark::State& state) {
  auto es = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zeta::classify_batch_parallel(es));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(es.size()));
}

}  // namespace

BENCHMARK(BM_ClassifySerial)->Arg(0)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassifyParallel)->Arg(0)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
