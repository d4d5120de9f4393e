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

#include "phoneval/confusion.h"

#include <stdexcept>

namespace phoneval {

std::uint64_t ConfusionMatrix::TotalMass() const {
  std::uint64_t mass = 0;
  for (const auto& row : counts) {
    for (std::uint64_t c : row) mass += c;
  }
  return mass;
}

ConfusionAccumulator::ConfusionAccumulator(const BpcCategorization& cat)
    : cat_(&cat),
      counts_(cat.num_classes(),
              std::vector<std::uint64_t>(cat.num_classes(), 0)) {}

void ConfusionAccumulator::Add(const Alignment& alignment) {
  for (const EditStep& step : alignment.steps) {
    if (step.kind != EditKind::kSubstitute) continue;
    ++counts_[cat_->ClassIndexOf(*step.ref)][cat_->ClassIndexOf(*step.hyp)];
  }
}

void ConfusionAccumulator::Merge(const ConfusionAccumulator& other) {
  if (other.cat_ != cat_) {
    throw std::invalid_argument("cannot merge accumulators of different categorizations");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    for (std::size_t j = 0; j < counts_.size(); ++j) {
      counts_[i][j] += other.counts_[i][j];
    }
  }
}

ConfusionMatrix ConfusionAccumulator::Finish() const {
  ConfusionMatrix out;
  out.categorization = cat_->name();
  for (const BpcClass& cls : cat_->classes()) out.labels.push_back(cls.id);
  out.counts = counts_;
  return out;
}

ConfusionMatrix BuildConfusionMatrix(std::span<const Alignment> alignments,
                                     const BpcCategorization& cat) {
  ConfusionAccumulator acc(cat);
  for (const Alignment& a : alignments) acc.Add(a);
  return acc.Finish();
}

ConfusionRanking RankConfusions(const ConfusionMatrix& m) {
  ConfusionRanking out;
  const std::size_t k = m.labels.size();
  out.rows.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& row = m.counts[i];
    std::uint64_t max1 = 0;
    for (std::uint64_t c : row) max1 = std::max(max1, c);
    if (max1 == 0) continue;  // empty sets
    ConfusionRanking::Row& r = out.rows[i];
    for (std::size_t j = 0; j < k; ++j) {
      if (row[j] == max1) r.first.push_back(static_cast<int>(j));
    }
    std::uint64_t max2 = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (row[j] < max1) max2 = std::max(max2, row[j]);
    }
    if (max2 == 0) continue;  // runner-up only among nonzero columns
    for (std::size_t j = 0; j < k; ++j) {
      if (row[j] == max2) r.second.push_back(static_cast<int>(j));
    }
  }
  return out;
}

namespace {

std::string JoinLabels(const ConfusionMatrix& m, const std::vector<int>& cols) {
  if (cols.empty()) return "—";
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i > 0) out += '/';
    out += m.labels[cols[i]];
  }
  return out;
}

}  // namespace

std::string FormatRankingRow(const ConfusionMatrix& m,
                             const ConfusionRanking::Row& row) {
  return JoinLabels(m, row.first) + ", " + JoinLabels(m, row.second);
}

std::vector<std::vector<double>> NormalizeRows(const ConfusionMatrix& m) {
  std::vector<std::vector<double>> out(m.counts.size());
  for (std::size_t i = 0; i < m.counts.size(); ++i) {
    const auto& row = m.counts[i];
    std::uint64_t sum = 0;
    for (std::uint64_t c : row) sum += c;
    out[i].resize(row.size(), 0.0);
    if (sum == 0) continue;
    for (std::size_t j = 0; j < row.size(); ++j) {
      out[i][j] = static_cast<double>(row[j]) / static_cast<double>(sum);
    }
  }
  return out;
}

}  // namespace phoneval
