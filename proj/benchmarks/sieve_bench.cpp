// Copyright 2026 The sosgap Authors
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

#include <cstdint>

#include "benchmark/benchmark.h"
#include "sosgap/sieve.hpp"

namespace {

// Marking cost per window; the bulk of every scan.
void BM_MarkSegment(benchmark::State& state) {
  const auto size = static_cast<std::uint64_t>(state.range(0));
  const std::uint64_t lo = 100'000'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sosgap::mark_segment(lo, lo + size));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size));
}
BENCHMARK(BM_MarkSegment)->RangeMultiplier(4)->Range(1 << 14, 1 << 24)->Unit(benchmark::kMicrosecond);

// Windows far out pay for the outer x loop (~sqrt(hi / 2) iterations).
void BM_MarkSegmentHigh(benchmark::State& state) {
  const std::uint64_t lo = std::uint64_t{1} << static_cast<int>(state.range(0));
  const std::uint64_t size = std::uint64_t{1} << 20;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sosgap::mark_segment(lo, lo + size));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size));
}
BENCHMARK(BM_MarkSegmentHigh)->DenseRange(30, 40, 5)->Unit(benchmark::kMicrosecond);

void BM_GapStream(benchmark::State& state) {
  sosgap::SieveOptions options;
  options.segment_size = std::uint64_t{1} << 20;
  for (auto _ : state) {
    sosgap::GapStream stream(0, 10'000'000, options);
    std::uint64_t n = 0;
    while (auto p = stream.next()) n += p->gap();
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_GapStream)->Unit(benchmark::kMillisecond);

}  // namespace
