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

#include "phoneval/alignment.h"

#include <algorithm>
#include <stdexcept>

namespace phoneval {

namespace {

void ValidateCosts(const EditCosts& costs) {
  if (costs.sub < 1 || costs.del < 1 || costs.ins < 1) {
    throw std::invalid_argument("edit costs must all be >= 1");
  }
}

}  // namespace

Alignment Align(std::span<const Phone> ref, std::span<const Phone> hyp,
                const EditCosts& costs) {
  ValidateCosts(costs);
  const std::size_t m = ref.size();
  const std::size_t n = hyp.size();

  // dp[i][j] = min cost of aligning ref[0,i) to hyp[0,j).
  std::vector<int> dp((m + 1) * (n + 1));
  auto cell = [&](std::size_t i, std::size_t j) -> int& {
    return dp[i * (n + 1) + j];
  };
  cell(0, 0) = 0;
  for (std::size_t j = 1; j <= n; ++j) cell(0, j) = cell(0, j - 1) + costs.ins;
  for (std::size_t i = 1; i <= m; ++i) {
    cell(i, 0) = cell(i - 1, 0) + costs.del;
    for (std::size_t j = 1; j <= n; ++j) {
      int best = cell(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : costs.sub);
      best = std::min(best, cell(i - 1, j) + costs.del);
      best = std::min(best, cell(i, j - 1) + costs.ins);
      cell(i, j) = best;
    }
  }

  // Backtrace, preferring Match/Substitute, then Delete, then Insert at
  // every tie. Steps come out reversed.
  Alignment out;
  out.ref_len = m;
  out.hyp_len = n;
  out.distance = cell(m, n);
  out.steps.reserve(std::max(m, n));
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        cell(i, j) == cell(i - 1, j - 1) +
                          (ref[i - 1] == hyp[j - 1] ? 0 : costs.sub)) {
      bool match = ref[i - 1] == hyp[j - 1];
      out.steps.push_back({match ? EditKind::kMatch : EditKind::kSubstitute,
                           ref[i - 1], hyp[j - 1]});
      --i;
      --j;
    } else if (i > 0 && cell(i, j) == cell(i - 1, j) + costs.del) {
      out.steps.push_back({EditKind::kDelete, ref[i - 1], std::nullopt});
      --i;
    } else {
      out.steps.push_back({EditKind::kInsert, std::nullopt, hyp[j - 1]});
      --j;
    }
  }
  std::reverse(out.steps.begin(), out.steps.end());
  return out;
}

int DistanceOnly(std::span<const Phone> ref, std::span<const Phone> hyp,
                 const EditCosts& costs) {
  ValidateCosts(costs);
  const std::size_t m = ref.size();
  const std::size_t n = hyp.size();

  // Two-row DP. Typical utterances fit in the stack buffer; longer
  // hypotheses fall back to the heap.
  constexpr std::size_t kStackCols = 128;
  int stack_buf[2 * kStackCols];
  std::vector<int> heap_buf;
  int* prev;
  int* cur;
  if (n + 1 <= kStackCols) {
    prev = stack_buf;
    cur = stack_buf + kStackCols;
  } else {
    heap_buf.resize(2 * (n + 1));
    prev = heap_buf.data();
    cur = heap_buf.data() + (n + 1);
  }

  prev[0] = 0;
  for (std::size_t j = 1; j <= n; ++j) prev[j] = prev[j - 1] + costs.ins;
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = prev[0] + costs.del;
    const Phone r = ref[i - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      int best = prev[j - 1] + (r == hyp[j - 1] ? 0 : costs.sub);
      const int del = prev[j] + costs.del;
      if (del < best) best = del;
      const int ins = cur[j - 1] + costs.ins;
      if (ins < best) best = ins;
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

}  // namespace phoneval
