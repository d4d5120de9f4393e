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

#include "phoneval/io_formats.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "json.hpp"

#include "phoneval/error.h"
#include "phoneval/phoneset.h"

namespace phoneval {

namespace {

using ojson = nlohmann::ordered_json;

// Splits on '\n', tolerating a trailing '\r' on each line. A final newline
// does not produce an extra empty line.
std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string_view> SplitCsvRow(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(pos));
      break;
    }
    cells.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return cells;
}

std::int64_t ParseSample(std::string_view token, int line_no,
                         std::string_view what) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(token) +
                         "', want a non-negative integer",
                     line_no);
  }
  return value;
}

std::uint64_t ParseCount(std::string_view token, int line_no) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("bad count '" + std::string(token) + "'", line_no);
  }
  return value;
}

// Shortest round-trip decimal form, e.g. 0.1 rather than 0.1000...01.
std::string DumpDouble(double x) { return ojson(x).dump(); }

std::string FormatPercent(double percent) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f", percent);
  return buf;
}

ojson ScoreBlock(const ErrorBreakdown& b) {
  ojson block;
  block["name"] = b.categorization;
  block["ref_count"] = b.ref_count;
  ojson classes = ojson::array();
  for (std::size_t i = 0; i < b.class_ids.size(); ++i) {
    const ClassErrorCounts& c = b.per_class[i];
    const double share = b.PerShare(static_cast<int>(i));
    ojson entry;
    entry["id"] = b.class_ids[i];
    entry["sub"] = c.sub;
    entry["del"] = c.del;
    entry["ins"] = c.ins;
    entry["per_share_raw"] = share;
    entry["per_share_percent"] = PercentFromRaw(share);
    classes.push_back(std::move(entry));
  }
  block["classes"] = std::move(classes);
  ojson totals;
  totals["sub"] = b.totals.sub;
  totals["del"] = b.totals.del;
  totals["ins"] = b.totals.ins;
  totals["per_raw"] = b.Per();
  totals["per_percent"] = PercentFromRaw(b.Per());
  block["totals"] = std::move(totals);
  return block;
}

std::uint64_t GetCount(const ojson& node, const char* key) {
  if (!node.contains(key) || !node[key].is_number_unsigned()) {
    throw ParseError(std::string("missing or negative field '") + key + "'");
  }
  return node[key].get<std::uint64_t>();
}

ErrorBreakdown ParseScoreBlock(const ojson& block) {
  if (!block.is_object() || !block.contains("name") ||
      !block["name"].is_string()) {
    throw ParseError("categorization block without a name");
  }
  const std::string name = block["name"].get<std::string>();
  const BpcCategorization* cat = nullptr;
  try {
    cat = &BpcCategorization::Get(name);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  ErrorBreakdown b;
  b.categorization = name;
  b.ref_count = GetCount(block, "ref_count");
  if (b.ref_count == 0) {
    throw ParseError("ref_count must be positive in '" + name + "'");
  }

  if (!block.contains("classes") || !block["classes"].is_array() ||
      block["classes"].size() != cat->classes().size()) {
    throw ParseError("'" + name + "' needs exactly " +
                     std::to_string(cat->classes().size()) + " classes");
  }
  for (std::size_t i = 0; i < cat->classes().size(); ++i) {
    const ojson& entry = block["classes"][i];
    if (!entry.is_object() || !entry.contains("id") ||
        !entry["id"].is_string() ||
        entry["id"].get<std::string>() != cat->classes()[i].id) {
      throw ParseError("class " + std::to_string(i) + " of '" + name +
                       "' must be '" + cat->classes()[i].id + "'");
    }
    ClassErrorCounts c;
    c.sub = GetCount(entry, "sub");
    c.del = GetCount(entry, "del");
    c.ins = GetCount(entry, "ins");
    b.class_ids.push_back(cat->classes()[i].id);
    b.per_class.push_back(c);
    b.totals.sub += c.sub;
    b.totals.del += c.del;
    b.totals.ins += c.ins;
  }

  if (!block.contains("totals") || !block["totals"].is_object()) {
    throw ParseError("'" + name + "' is missing totals");
  }
  const ojson& totals = block["totals"];
  if (GetCount(totals, "sub") != b.totals.sub ||
      GetCount(totals, "del") != b.totals.del ||
      GetCount(totals, "ins") != b.totals.ins) {
    throw ParseError("totals of '" + name + "' disagree with class counts");
  }
  return b;
}

ojson ParseReportEnvelope(std::string_view text, std::string_view kind) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("report must be a JSON object");
  if (!doc.contains("schema_version") ||
      !doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<int>() != kReportSchemaVersion) {
    throw ParseError("unsupported schema_version");
  }
  if (!doc.contains("kind") || !doc["kind"].is_string() ||
      doc["kind"].get<std::string>() != kind) {
    throw ParseError("expected a " + std::string(kind) + " document");
  }
  if (!doc.contains("categorizations") || !doc["categorizations"].is_array()) {
    throw ParseError("report is missing the categorizations array");
  }
  return doc;
}

ojson GainValue(const std::optional<double>& gain, bool percent) {
  if (!gain.has_value()) return nullptr;
  return percent ? PercentFromRaw(*gain) : *gain;
}

}  // namespace

const Utterance* Corpus::Find(std::string_view id) const {
  for (const Utterance& u : utterances) {
    if (u.id == id) return &u;
  }
  return nullptr;
}

Utterance ParsePhn(std::string_view text, std::string_view id) {
  if (id.empty()) throw ParseError("utterance id must be non-empty");
  Utterance utt;
  utt.id = std::string(id);
  std::int64_t prev_start = -1;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    const std::vector<std::string_view> tokens = SplitWhitespace(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw ParseError("expected 'start end phone', got " +
                           std::to_string(tokens.size()) + " fields",
                       line_no);
    }
    PhoneInterval interval;
    interval.start_sample = ParseSample(tokens[0], line_no, "start sample");
    interval.end_sample = ParseSample(tokens[1], line_no, "end sample");
    if (interval.end_sample < interval.start_sample) {
      throw ParseError("interval ends before it starts", line_no);
    }
    if (interval.start_sample < prev_start) {
      throw ParseError("start samples must be non-decreasing", line_no);
    }
    prev_start = interval.start_sample;
    utt.phones.emplace_back(tokens[2]);
    utt.timing.push_back(interval);
  }
  if (utt.phones.empty()) {
    throw ParseError("no phone lines in utterance '" + utt.id + "'");
  }
  return utt;
}

ParsedHyp ParseHyp(std::string_view text) {
  ParsedHyp result;
  std::unordered_set<std::string_view> seen;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    const std::vector<std::string_view> tokens = SplitWhitespace(line);
    if (tokens.empty()) {
      ++result.skipped_lines;
      continue;
    }
    Utterance utt;
    utt.id = std::string(tokens[0]);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      utt.phones.emplace_back(tokens[i]);
    }
    result.corpus.utterances.push_back(std::move(utt));
    if (!seen.insert(result.corpus.utterances.back().id).second) {
      throw ParseError(
          "duplicate utterance id '" + result.corpus.utterances.back().id + "'",
          line_no);
    }
  }
  return result;
}

std::string WriteScoreReport(std::span<const ErrorBreakdown> breakdowns) {
  ojson doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["kind"] = "score_report";
  ojson cats = ojson::array();
  for (const ErrorBreakdown& b : breakdowns) cats.push_back(ScoreBlock(b));
  doc["categorizations"] = std::move(cats);
  return doc.dump(2) + "\n";
}

std::vector<ErrorBreakdown> ParseScoreReport(std::string_view text) {
  const ojson doc = ParseReportEnvelope(text, "score_report");
  std::vector<ErrorBreakdown> breakdowns;
  try {
    for (const ojson& block : doc["categorizations"]) {
      breakdowns.push_back(ParseScoreBlock(block));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return breakdowns;
}

std::string WriteConfusionReport(std::span<const ConfusionMatrix> matrices,
                                 std::span<const ConfusionRanking> rankings) {
  if (matrices.size() != rankings.size()) {
    throw std::invalid_argument("one ranking per matrix required");
  }
  ojson doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["kind"] = "confusion_report";
  ojson cats = ojson::array();
  for (std::size_t m = 0; m < matrices.size(); ++m) {
    const ConfusionMatrix& matrix = matrices[m];
    const ConfusionRanking& ranking = rankings[m];
    if (ranking.rows.size() != matrix.labels.size()) {
      throw std::invalid_argument("ranking does not match matrix shape");
    }
    ojson block;
    block["name"] = matrix.categorization;
    block["labels"] = matrix.labels;
    block["counts"] = matrix.counts;
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
      const ConfusionRanking::Row& row = ranking.rows[i];
      ojson entry;
      entry["id"] = matrix.labels[i];
      ojson first = ojson::array();
      for (int col : row.first) first.push_back(matrix.labels[col]);
      ojson second = ojson::array();
      for (int col : row.second) second.push_back(matrix.labels[col]);
      entry["first"] = std::move(first);
      entry["second"] = std::move(second);
      entry["rendered"] = FormatRankingRow(matrix, row);
      rows.push_back(std::move(entry));
    }
    block["rankings"] = std::move(rows);
    cats.push_back(std::move(block));
  }
  doc["categorizations"] = std::move(cats);
  return doc.dump(2) + "\n";
}

std::string WriteGainReport(std::span<const GainReport> gains) {
  ojson doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["kind"] = "gain_report";
  ojson cats = ojson::array();
  for (const GainReport& g : gains) {
    ojson block;
    block["name"] = g.categorization;
    ojson classes = ojson::array();
    for (std::size_t i = 0; i < g.class_ids.size(); ++i) {
      ojson entry;
      entry["id"] = g.class_ids[i];
      entry["gain_raw"] = GainValue(g.per_class[i], false);
      entry["gain_percent"] = GainValue(g.per_class[i], true);
      classes.push_back(std::move(entry));
    }
    block["classes"] = std::move(classes);
    block["average_gain_raw"] = g.average;
    block["average_gain_percent"] = PercentFromRaw(g.average);
    cats.push_back(std::move(block));
  }
  doc["categorizations"] = std::move(cats);
  return doc.dump(2) + "\n";
}

std::string WriteBreakdownCsv(std::span<const ErrorBreakdown> breakdowns) {
  std::string out = "categorization,class,sub,del,ins,per_raw,per_percent\n";
  for (const ErrorBreakdown& b : breakdowns) {
    for (std::size_t i = 0; i < b.class_ids.size(); ++i) {
      const ClassErrorCounts& c = b.per_class[i];
      const double share = b.PerShare(static_cast<int>(i));
      out += b.categorization + "," + b.class_ids[i] + "," +
             std::to_string(c.sub) + "," + std::to_string(c.del) + "," +
             std::to_string(c.ins) + "," + DumpDouble(share) + "," +
             FormatPercent(PercentFromRaw(share)) + "\n";
    }
    out += b.categorization + ",total," + std::to_string(b.totals.sub) + "," +
           std::to_string(b.totals.del) + "," + std::to_string(b.totals.ins) +
           "," + DumpDouble(b.Per()) + "," +
           FormatPercent(PercentFromRaw(b.Per())) + "\n";
  }
  return out;
}

std::string WriteGainCsv(std::span<const GainReport> gains) {
  std::string out = "categorization,class,gain_raw,gain_percent\n";
  for (const GainReport& g : gains) {
    for (std::size_t i = 0; i < g.class_ids.size(); ++i) {
      out += g.categorization + "," + g.class_ids[i] + ",";
      if (g.per_class[i].has_value()) {
        out += DumpDouble(*g.per_class[i]) + "," +
               FormatPercent(PercentFromRaw(*g.per_class[i]));
      } else {
        out += ",";
      }
      out += "\n";
    }
    out += g.categorization + ",average," + DumpDouble(g.average) + "," +
           FormatPercent(PercentFromRaw(g.average)) + "\n";
  }
  return out;
}

std::string WriteMatrixCsv(const ConfusionMatrix& m) {
  std::string out = m.categorization;
  for (const std::string& label : m.labels) out += "," + label;
  out += "\n";
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    out += m.labels[i];
    for (std::uint64_t count : m.counts[i]) out += "," + std::to_string(count);
    out += "\n";
  }
  return out;
}

ConfusionMatrix ParseMatrixCsv(std::string_view text) {
  ConfusionMatrix m;
  const BpcCategorization* cat = nullptr;
  std::size_t next_row = 0;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string_view> cells = SplitCsvRow(line);
    if (cat == nullptr) {
      try {
        cat = &BpcCategorization::Get(cells[0]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no);
      }
      if (cells.size() != cat->classes().size() + 1) {
        throw ParseError("header needs " +
                             std::to_string(cat->classes().size()) + " labels",
                         line_no);
      }
      m.categorization = std::string(cells[0]);
      for (std::size_t i = 0; i < cat->classes().size(); ++i) {
        if (cells[i + 1] != cat->classes()[i].id) {
          throw ParseError("label " + std::to_string(i) + " must be '" +
                               cat->classes()[i].id + "'",
                           line_no);
        }
        m.labels.emplace_back(cells[i + 1]);
      }
      m.counts.assign(m.labels.size(),
                      std::vector<std::uint64_t>(m.labels.size(), 0));
      continue;
    }
    if (next_row >= m.labels.size()) {
      throw ParseError("unexpected row after the matrix", line_no);
    }
    if (cells.size() != m.labels.size() + 1 || cells[0] != m.labels[next_row]) {
      throw ParseError("row " + std::to_string(next_row) + " must start with '" +
                           m.labels[next_row] + "' and carry " +
                           std::to_string(m.labels.size()) + " counts",
                       line_no);
    }
    for (std::size_t j = 0; j < m.labels.size(); ++j) {
      m.counts[next_row][j] = ParseCount(cells[j + 1], line_no);
    }
    ++next_row;
  }
  if (cat == nullptr) throw ParseError("empty matrix document");
  if (next_row != m.labels.size()) {
    throw ParseError("matrix has " + std::to_string(next_row) + " of " +
                     std::to_string(m.labels.size()) + " rows");
  }
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    if (cat->classes()[i].members.size() == 1 && m.counts[i][i] != 0) {
      throw ParseError("diagonal of single-phone class '" + m.labels[i] +
                       "' must be zero");
    }
  }
  return m;
}

double PercentFromRaw(double raw) { return std::round(raw * 1000.0) / 10.0; }

}  // namespace phoneval
