// Copyright 2026 The LAC Toolkit Authors
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

#include "lac/gf2.hpp"
#include "lac/jrc.hpp"
#include "lac/region.hpp"
#include "lac/topology.hpp"

namespace {

lac::jrc::PairwiseProfile dense_profile(int m, int count) {
  lac::jrc::PairwiseProfile profile(m);
  for (int i = 0; i < m; ++i) {
    profile.exclusive[i] = count;
    for (int p = 0; p < m; ++p)
      if (p != i) profile.shared[i][p] = count;
  }
  return profile;
}

void BM_JrcEncode(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  auto profile = dense_profile(m, 2);
  lac::jrc::Allocation alloc(m);
  for (int i = 0; i < m; ++i)
    for (int p = 0; p < m; ++p)
      if (p != i) alloc.split[i][p] = 1;
  auto c = lac::jrc::moduli(profile, alloc);
  std::vector<int> b(m);
  int msg = 0;
  for (auto _ : state) {
    int v = msg++;
    for (int i = 0; i < m; ++i) {
      b[i] = v % c[i];
      v /= c[i];
    }
    benchmark::DoNotOptimize(lac::jrc::jrcn_encode(profile, alloc, b));
  }
}
BENCHMARK(BM_JrcEncode)->Arg(2)->Arg(3)->Arg(4);

void BM_RegionHull(benchmark::State& state) {
  auto t = lac::jrc::make_topology(dense_profile(3, 2));
  auto tuples = lac::region::collect_tuples(t);
  for (auto _ : state)
    benchmark::DoNotOptimize(lac::region::convex_hull(tuples));
  state.counters["tuples"] = static_cast<double>(tuples.size());
}
BENCHMARK(BM_RegionHull);

void BM_Gf2Solve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  lac::gf2::Matrix h(n, n);
  for (int r = 0; r < n; ++r)
    for (int col = 0; col <= r; ++col) h.set(r, col, 1);
  std::vector<int> b(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(lac::gf2::solve(h, b));
}
BENCHMARK(BM_Gf2Solve)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
