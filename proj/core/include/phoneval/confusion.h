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

#ifndef PHONEVAL_CONFUSION_H_
#define PHONEVAL_CONFUSION_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "phoneval/alignment.h"
#include "phoneval/phoneset.h"

namespace phoneval {

// Class-level substitution counts: entry [i][j] counts substitutions whose
// reference phone belongs to class i and hypothesis phone to class j. Only
// Substitute steps contribute; the diagonal holds within-class confusions,
// which is why a single-phone class (silence) always has a zero diagonal.
struct ConfusionMatrix {
  std::string categorization;
  std::vector<std::string> labels;                 // class ids, categorization order
  std::vector<std::vector<std::uint64_t>> counts;  // K x K

  std::uint64_t TotalMass() const;
};

// Element-wise additive accumulator; merge order never changes the result.
class ConfusionAccumulator {
 public:
  explicit ConfusionAccumulator(const BpcCategorization& cat);

  void Add(const Alignment& alignment);
  void Merge(const ConfusionAccumulator& other);
  ConfusionMatrix Finish() const;

 private:
  const BpcCategorization* cat_;
  std::vector<std::vector<std::uint64_t>> counts_;
};

ConfusionMatrix BuildConfusionMatrix(std::span<const Alignment> alignments,
                                     const BpcCategorization& cat);

// First and second most confused classes per reference class. `first` holds
// every column attaining the row maximum (the diagonal competes like any
// other column) and `second` the runners-up among the remaining nonzero
// columns. Zero rows yield empty sets; ties yield multi-element sets.
struct ConfusionRanking {
  struct Row {
    std::vector<int> first;   // column indices, ascending
    std::vector<int> second;  // column indices, ascending
  };
  std::vector<Row> rows;  // parallel to the matrix labels
};

ConfusionRanking RankConfusions(const ConfusionMatrix& m);

// "first, second" with ties joined by '/' (e.g. "aff, fri/plo") and empty
// sets rendered as an em dash (e.g. "vow, —").
std::string FormatRankingRow(const ConfusionMatrix& m,
                             const ConfusionRanking::Row& row);

// Row-stochastic view: each nonzero row scaled to sum 1; zero rows stay zero.
std::vector<std::vector<double>> NormalizeRows(const ConfusionMatrix& m);

}  // namespace phoneval

#endif  // PHONEVAL_CONFUSION_H_
