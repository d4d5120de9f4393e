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

#include "phoneval/error_analysis.h"

#include <stdexcept>

namespace phoneval {

double ErrorBreakdown::PerShare(int class_index) const {
  const ClassErrorCounts& c = per_class.at(class_index);
  return static_cast<double>(c.total()) / static_cast<double>(ref_count);
}

double ErrorBreakdown::Per() const {
  return static_cast<double>(totals.total()) / static_cast<double>(ref_count);
}

std::optional<int> AttributeStep(const EditStep& step,
                                 const BpcCategorization& cat) {
  switch (step.kind) {
    case EditKind::kMatch:
      return std::nullopt;
    case EditKind::kSubstitute:
    case EditKind::kDelete:
      return cat.ClassIndexOf(*step.ref);
    case EditKind::kInsert:
      return cat.ClassIndexOf(*step.hyp);
  }
  return std::nullopt;
}

ErrorAccumulator::ErrorAccumulator(const BpcCategorization& cat)
    : cat_(&cat), per_class_(cat.num_classes()) {}

void ErrorAccumulator::Add(const Alignment& alignment) {
  ref_count_ += alignment.ref_len;
  for (const EditStep& step : alignment.steps) {
    if (step.kind == EditKind::kMatch) continue;
    int c = *AttributeStep(step, *cat_);
    switch (step.kind) {
      case EditKind::kSubstitute:
        ++per_class_[c].sub;
        break;
      case EditKind::kDelete:
        ++per_class_[c].del;
        break;
      case EditKind::kInsert:
        ++per_class_[c].ins;
        break;
      case EditKind::kMatch:
        break;
    }
  }
}

void ErrorAccumulator::Merge(const ErrorAccumulator& other) {
  if (other.cat_ != cat_) {
    throw std::invalid_argument("cannot merge accumulators of different categorizations");
  }
  ref_count_ += other.ref_count_;
  for (std::size_t c = 0; c < per_class_.size(); ++c) {
    per_class_[c].sub += other.per_class_[c].sub;
    per_class_[c].del += other.per_class_[c].del;
    per_class_[c].ins += other.per_class_[c].ins;
  }
}

ErrorBreakdown ErrorAccumulator::Finish() const {
  if (ref_count_ == 0) {
    throw std::invalid_argument("breakdown requires a non-empty reference (ref_count = 0)");
  }
  ErrorBreakdown out;
  out.categorization = cat_->name();
  out.per_class = per_class_;
  out.ref_count = ref_count_;
  for (const BpcClass& cls : cat_->classes()) out.class_ids.push_back(cls.id);
  for (const ClassErrorCounts& c : per_class_) {
    out.totals.sub += c.sub;
    out.totals.del += c.del;
    out.totals.ins += c.ins;
  }
  return out;
}

ErrorBreakdown ComputeBreakdown(std::span<const Alignment> alignments,
                                const BpcCategorization& cat) {
  ErrorAccumulator acc(cat);
  for (const Alignment& a : alignments) acc.Add(a);
  return acc.Finish();
}

GainReport RelativeGain(const ErrorBreakdown& baseline,
                        const ErrorBreakdown& improved) {
  if (baseline.categorization != improved.categorization) {
    throw std::invalid_argument("gain requires breakdowns of the same categorization (got '" +
                                baseline.categorization + "' vs '" +
                                improved.categorization + "')");
  }
  GainReport out;
  out.categorization = baseline.categorization;
  out.class_ids = baseline.class_ids;
  double sum = 0.0;
  int defined = 0;
  for (std::size_t c = 0; c < baseline.class_ids.size(); ++c) {
    double base = baseline.PerShare(static_cast<int>(c));
    if (base > 0.0) {
      double gain = (base - improved.PerShare(static_cast<int>(c))) / base;
      out.per_class.push_back(gain);
      sum += gain;
      ++defined;
    } else {
      out.per_class.push_back(std::nullopt);
    }
  }
  out.average = defined > 0 ? sum / defined : 0.0;
  return out;
}

}  // namespace phoneval
