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

#ifndef PHONEVAL_ALIGNMENT_H_
#define PHONEVAL_ALIGNMENT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "phoneval/phoneset.h"

namespace phoneval {

enum class EditKind { kMatch, kSubstitute, kDelete, kInsert };

// One step of an edit script. `ref` is present for Match/Substitute/Delete,
// `hyp` for Match/Substitute/Insert.
struct EditStep {
  EditKind kind;
  std::optional<Phone> ref;
  std::optional<Phone> hyp;

  friend bool operator==(const EditStep& a, const EditStep& b) = default;
};

// Unit costs by default; PER = distance / ref_len under unit costs. Error
// costs must all be >= 1; matches always cost 0.
struct EditCosts {
  int sub = 1;
  int del = 1;
  int ins = 1;
};

// A minimum-cost edit script between a reference and a hypothesis sequence.
// Removing Inserts from `steps` reproduces the reference; removing Deletes
// reproduces the hypothesis.
struct Alignment {
  std::vector<EditStep> steps;
  std::size_t ref_len = 0;
  std::size_t hyp_len = 0;
  int distance = 0;
};

// Levenshtein alignment with a deterministic backtrace: among minimum-cost
// paths, Match/Substitute is preferred over Delete over Insert at every tie,
// so identical prefixes and suffixes always align as matches and repeated
// runs yield byte-identical step lists. Throws std::invalid_argument if any
// cost is < 1.
Alignment Align(std::span<const Phone> ref, std::span<const Phone> hyp,
                const EditCosts& costs = {});

// Same distance as Align() without materialising steps (two-row DP).
int DistanceOnly(std::span<const Phone> ref, std::span<const Phone> hyp,
                 const EditCosts& costs = {});

}  // namespace phoneval

#endif  // PHONEVAL_ALIGNMENT_H_
