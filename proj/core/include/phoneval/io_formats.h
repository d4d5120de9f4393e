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

#ifndef PHONEVAL_IO_FORMATS_H_
#define PHONEVAL_IO_FORMATS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phoneval/confusion.h"
#include "phoneval/error_analysis.h"

namespace phoneval {

struct PhoneInterval {
  std::int64_t start_sample = 0;
  std::int64_t end_sample = 0;

  friend bool operator==(const PhoneInterval&, const PhoneInterval&) = default;
};

// One transcription. Phones are raw tokens; mapping them onto the scoring
// inventory happens at the fold/validate stage, which is also where unknown
// symbols are reported with their position.
struct Utterance {
  std::string id;
  std::vector<std::string> phones;
  std::vector<PhoneInterval> timing;  // empty, or one interval per phone
};

struct Corpus {
  std::vector<Utterance> utterances;  // ids unique, input order

  const Utterance* Find(std::string_view id) const;
};

// Parses one "start end phone" file (one phone per line). Timing must have
// non-negative sample indices, end >= start, and non-decreasing starts.
// Throws ParseError with a 1-based line number; an input with no phone
// lines at all is an error.
Utterance ParsePhn(std::string_view text, std::string_view id);

struct ParsedHyp {
  Corpus corpus;
  int skipped_lines = 0;  // blank lines, reported so callers can warn
};

// Parses the one-utterance-per-line format "utt_id ph1 ph2 ...". An id with
// no phones is a valid empty hypothesis. Duplicate ids raise ParseError.
ParsedHyp ParseHyp(std::string_view text);

inline constexpr int kReportSchemaVersion = 1;

// JSON reports. Field order is fixed, so equal inputs serialise to equal
// bytes. Percentages are rounded to one decimal; the unrounded fraction
// always travels alongside in a *_raw field.
std::string WriteScoreReport(std::span<const ErrorBreakdown> breakdowns);

// Inverse of WriteScoreReport: rebuilds breakdowns from the serialised
// counts (rates are recomputed, not trusted). Throws ParseError on
// malformed JSON, unknown categorizations, or inconsistent totals.
std::vector<ErrorBreakdown> ParseScoreReport(std::string_view text);

std::string WriteConfusionReport(std::span<const ConfusionMatrix> matrices,
                                 std::span<const ConfusionRanking> rankings);

std::string WriteGainReport(std::span<const GainReport> gains);

// CSV views of the same data, one header line then data rows. Numeric
// columns follow the JSON conventions (raw fraction plus one-decimal
// percent).
std::string WriteBreakdownCsv(std::span<const ErrorBreakdown> breakdowns);
std::string WriteGainCsv(std::span<const GainReport> gains);

// Matrix CSV: header "name,label1,...", then one count row per class.
// Blank lines and '#' comments are ignored by the parser, so ranking
// annotations can ride along in the same file.
std::string WriteMatrixCsv(const ConfusionMatrix& m);
ConfusionMatrix ParseMatrixCsv(std::string_view text);

// round(fraction * 1000) / 10: a fraction as a percent with one decimal.
double PercentFromRaw(double raw);

}  // namespace phoneval

#endif  // PHONEVAL_IO_FORMATS_H_
