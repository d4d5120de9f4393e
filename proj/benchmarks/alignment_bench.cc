// Copyright 2026 The Phoneval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "phoneval/alignment.h"
#include "phoneval/confusion.h"
#include "phoneval/error_analysis.h"
#include "phoneval/phoneset.h"

namespace phoneval {
namespace {

std::vector<Phone> RandomSeq(std::mt19937& rng, int len) {
  const auto inventory = Phone::Inventory();
  std::uniform_int_distribution<int> pick(
      0, static_cast<int>(inventory.size()) - 1);
  std::vector<Phone> out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    out.push_back(Phone(inventory[static_cast<std::size_t>(pick(rng))]));
  }
  return out;
}

// Reference-plus-noise pair, the shape scoring actually sees: mostly
// matching sequences with scattered edits, not two independent strings.
std::pair<std::vector<Phone>, std::vector<Phone>> NoisyPair(std::mt19937& rng,
                                                            int len) {
  const auto inventory = Phone::Inventory();
  std::uniform_int_distribution<int> pick(
      0, static_cast<int>(inventory.size()) - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Phone> ref = RandomSeq(rng, len);
  std::vector<Phone> hyp;
  hyp.reserve(ref.size() + 4);
  for (Phone p : ref) {
    const double roll = coin(rng);
    if (roll < 0.05) {
      continue;  // deletion
    }
    if (roll < 0.15) {
      hyp.push_back(Phone(inventory[static_cast<std::size_t>(pick(rng))]));
    } else {
      hyp.push_back(p);
    }
    if (coin(rng) < 0.05) {
      hyp.push_back(Phone(inventory[static_cast<std::size_t>(pick(rng))]));
    }
  }
  return {std::move(ref), std::move(hyp)};
}

void BM_DistanceOnly(benchmark::State& state) {
  std::mt19937 rng(1u);
  const auto [ref, hyp] = NoisyPair(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(DistanceOnly(ref, hyp));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(ref.size()));
}
BENCHMARK(BM_DistanceOnly)->Arg(8)->Arg(64)->Arg(512);

void BM_Align(benchmark::State& state) {
  std::mt19937 rng(1u);
  const auto [ref, hyp] = NoisyPair(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Align(ref, hyp));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(ref.size()));
}
BENCHMARK(BM_Align)->Arg(8)->Arg(64)->Arg(512);

// One hundred 50-phone utterances scored against all three categorizations,
// approximating the per-corpus cost after alignment.
void BM_ComputeBreakdown(benchmark::State& state) {
  std::mt19937 rng(2u);
  std::vector<Alignment> alignments;
  for (int u = 0; u < 100; ++u) {
    const auto [ref, hyp] = NoisyPair(rng, 50);
    alignments.push_back(Align(ref, hyp));
  }
  const auto names = BpcCategorization::Names();
  for (auto _ : state) {
    for (std::string_view name : names) {
      benchmark::DoNotOptimize(
          ComputeBreakdown(alignments, BpcCategorization::Get(name)));
    }
  }
}
BENCHMARK(BM_ComputeBreakdown);

void BM_BuildConfusionMatrix(benchmark::State& state) {
  std::mt19937 rng(3u);
  std::vector<Alignment> alignments;
  for (int u = 0; u < 100; ++u) {
    const auto [ref, hyp] = NoisyPair(rng, 50);
    alignments.push_back(Align(ref, hyp));
  }
  const BpcCategorization& cat = BpcCategorization::Get("eight_class");
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildConfusionMatrix(alignments, cat));
  }
}
BENCHMARK(BM_BuildConfusionMatrix);

}  // namespace
}  // namespace phoneval

BENCHMARK_MAIN();
