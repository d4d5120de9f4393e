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

#ifndef PHONEVAL_ERROR_ANALYSIS_H_
#define PHONEVAL_ERROR_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phoneval/alignment.h"
#include "phoneval/phoneset.h"

namespace phoneval {

struct ClassErrorCounts {
  std::uint64_t sub = 0;
  std::uint64_t del = 0;
  std::uint64_t ins = 0;

  std::uint64_t total() const { return sub + del + ins; }
  friend bool operator==(const ClassErrorCounts&, const ClassErrorCounts&) = default;
};

// Additive per-class decomposition of the phone error rate for one
// categorization. Every class share divides by the total reference phone
// count; the shared denominator is what makes the class shares sum to the
// overall PER instead of to some unrelated per-class rate.
struct ErrorBreakdown {
  std::string categorization;
  std::vector<std::string> class_ids;       // categorization class order
  std::vector<ClassErrorCounts> per_class;  // parallel to class_ids
  ClassErrorCounts totals;
  std::uint64_t ref_count = 0;

  // (sub_c + del_c + ins_c) / ref_count, as one quotient.
  double PerShare(int class_index) const;
  // (totals.sub + totals.del + totals.ins) / ref_count, as one quotient.
  double Per() const;
};

// Attribution rule: Substitute and Delete steps belong to the class of the
// reference phone, Insert steps to the class of the hypothesis phone, and
// Match steps to no class. Returns the class index, or nullopt for Match.
std::optional<int> AttributeStep(const EditStep& step,
                                 const BpcCategorization& cat);

// Count accumulator. Merge is commutative and associative, so shards
// accumulated concurrently combine into the same breakdown in any order.
class ErrorAccumulator {
 public:
  explicit ErrorAccumulator(const BpcCategorization& cat);

  void Add(const Alignment& alignment);
  void Merge(const ErrorAccumulator& other);

  // Throws std::invalid_argument if no reference phones were accumulated.
  ErrorBreakdown Finish() const;

 private:
  const BpcCategorization* cat_;
  std::vector<ClassErrorCounts> per_class_;
  std::uint64_t ref_count_ = 0;
};

ErrorBreakdown ComputeBreakdown(std::span<const Alignment> alignments,
                                const BpcCategorization& cat);

// Per-class relative PER reduction between two systems. A class whose
// baseline share is zero has no defined gain and is excluded from the
// average.
struct GainReport {
  std::string categorization;
  std::vector<std::string> class_ids;
  std::vector<std::optional<double>> per_class;  // nullopt = undefined
  double average = 0.0;  // unweighted mean of the defined gains
};

// gain_c = (baseline_share_c - improved_share_c) / baseline_share_c.
// Negative gains mark regressions. Throws std::invalid_argument when the
// breakdowns use different categorizations.
GainReport RelativeGain(const ErrorBreakdown& baseline,
                        const ErrorBreakdown& improved);

}  // namespace phoneval

#endif  // PHONEVAL_ERROR_ANALYSIS_H_
