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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "phoneval/alignment.h"
#include "phoneval/confusion.h"
#include "phoneval/error.h"
#include "phoneval/error_analysis.h"
#include "phoneval/io_formats.h"
#include "phoneval/phoneset.h"
#include "testutil.h"

namespace phoneval {
namespace {

using testutil::MutateSeq;
using testutil::Phones;
using testutil::RandomSeq;

std::vector<Alignment> RandomCorpus(std::mt19937& rng, int n_utts) {
  const auto& inventory = testutil::AllPhones();
  std::uniform_int_distribution<int> len(1, 30);
  std::vector<Alignment> alignments;
  for (int u = 0; u < n_utts; ++u) {
    const auto ref = RandomSeq(rng, len(rng), inventory);
    alignments.push_back(Align(ref, MutateSeq(rng, ref, 0.4, inventory)));
  }
  return alignments;
}

std::vector<ErrorBreakdown> AllBreakdowns(std::span<const Alignment> a) {
  std::vector<ErrorBreakdown> out;
  for (std::string_view name : BpcCategorization::Names()) {
    out.push_back(ComputeBreakdown(a, BpcCategorization::Get(name)));
  }
  return out;
}

TEST_CASE("phn parsing keeps order, timing, and line diagnostics") {
  Utterance u = ParsePhn("0 1600 sil\n1600 3200 aa\n", "u1");
  CHECK(u.id == "u1");
  REQUIRE(u.phones.size() == 2);
  CHECK(u.phones[0] == "sil");
  CHECK(u.phones[1] == "aa");
  REQUIRE(u.timing.size() == 2);
  CHECK(u.timing[0] == PhoneInterval{0, 1600});
  CHECK(u.timing[1] == PhoneInterval{1600, 3200});
}

TEST_CASE("phn parsing tolerates blank lines and CRLF") {
  Utterance u = ParsePhn("0 10 sil\r\n\r\n10 30 t\r\n", "x");
  REQUIRE(u.phones.size() == 2);
  CHECK(u.phones[1] == "t");
  CHECK(u.timing[1] == PhoneInterval{10, 30});
}

TEST_CASE("phn parse failures carry line numbers") {
  CHECK_THROWS_AS(ParsePhn("", "u1"), ParseError);
  try {
    ParsePhn("0 1600\n", "u1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  try {
    ParsePhn("0 1600 sil\nbad 3200 aa\n", "u1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(ParsePhn("0 1600 sil aa\n", "u1"), ParseError);
  CHECK_THROWS_AS(ParsePhn("-4 1600 sil\n", "u1"), ParseError);
  CHECK_THROWS_AS(ParsePhn("1600 0 sil\n", "u1"), ParseError);
  CHECK_THROWS_AS(ParsePhn("3200 4000 sil\n100 200 aa\n", "u1"), ParseError);
  CHECK_THROWS_AS(ParsePhn("0 10 sil\n", ""), ParseError);
}

TEST_CASE("hypothesis corpus parsing") {
  ParsedHyp parsed = ParseHyp("u1 sil aa sil\n\nu2\n");
  CHECK(parsed.skipped_lines == 1);
  REQUIRE(parsed.corpus.utterances.size() == 2);
  CHECK(parsed.corpus.utterances[0].id == "u1");
  CHECK(parsed.corpus.utterances[0].phones ==
        std::vector<std::string>{"sil", "aa", "sil"});
  CHECK(parsed.corpus.utterances[1].id == "u2");
  CHECK(parsed.corpus.utterances[1].phones.empty());
  CHECK(parsed.corpus.Find("u2") == &parsed.corpus.utterances[1]);
  CHECK(parsed.corpus.Find("u3") == nullptr);
}

TEST_CASE("duplicate hypothesis ids are rejected by name") {
  try {
    ParseHyp("u1 aa\nu1 t\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("u1") != std::string::npos);
    CHECK(e.line() == 2);
  }
}

TEST_CASE("score reports round-trip through JSON") {
  std::mt19937 rng(401);
  const auto alignments = RandomCorpus(rng, 6);
  const auto breakdowns = AllBreakdowns(alignments);

  const std::string text = WriteScoreReport(breakdowns);
  const auto parsed = ParseScoreReport(text);
  REQUIRE(parsed.size() == breakdowns.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].categorization == breakdowns[i].categorization);
    CHECK(parsed[i].class_ids == breakdowns[i].class_ids);
    CHECK(parsed[i].per_class == breakdowns[i].per_class);
    CHECK(parsed[i].totals == breakdowns[i].totals);
    CHECK(parsed[i].ref_count == breakdowns[i].ref_count);
    CHECK(parsed[i].Per() == breakdowns[i].Per());
  }
  // Serialising the parsed form reproduces the document byte for byte.
  CHECK(WriteScoreReport(parsed) == text);
}

TEST_CASE("percentages are rendered to one decimal with the raw value kept") {
  // 19 errors in 125 reference phones: rate 0.152, printed 15.2.
  ErrorBreakdown b;
  b.categorization = "voicing";
  const BpcCategorization& cat = BpcCategorization::Get("voicing");
  for (const BpcClass& cls : cat.classes()) b.class_ids.push_back(cls.id);
  b.per_class.resize(3);
  b.per_class[cat.FindClassIndex("voi")].sub = 19;
  b.totals.sub = 19;
  b.ref_count = 125;

  const std::vector<ErrorBreakdown> one = {b};
  const std::string text = WriteScoreReport(one);
  CHECK(text.find("\"per_raw\": 0.152") != std::string::npos);
  CHECK(text.find("\"per_percent\": 15.2") != std::string::npos);
}

TEST_CASE("percent rounding helper") {
  CHECK(PercentFromRaw(0.152) == 15.2);
  CHECK(PercentFromRaw(1.0 / 3.0) == doctest::Approx(33.3).epsilon(1e-12));
  CHECK(PercentFromRaw(0.0) == 0.0);
  CHECK(PercentFromRaw(-0.1) == doctest::Approx(-10.0).epsilon(1e-12));
  CHECK(PercentFromRaw(1.0) == 100.0);
}

TEST_CASE("score report parsing rejects malformed documents") {
  CHECK_THROWS_AS(ParseScoreReport(""), ParseError);
  CHECK_THROWS_AS(ParseScoreReport("{"), ParseError);
  CHECK_THROWS_AS(ParseScoreReport("[1,2]"), ParseError);
  CHECK_THROWS_AS(ParseScoreReport("{\"schema_version\": 999}"), ParseError);
  CHECK_THROWS_AS(
      ParseScoreReport(
          R"({"schema_version":1,"kind":"gain_report","categorizations":[]})"),
      ParseError);
  CHECK_THROWS_AS(
      ParseScoreReport(
          R"({"schema_version":1,"kind":"score_report","categorizations":[{"name":"five_class"}]})"),
      ParseError);
  // Totals that disagree with the class counts are data corruption.
  std::mt19937 rng(403);
  const auto alignments = RandomCorpus(rng, 2);
  std::string text = WriteScoreReport(AllBreakdowns(alignments));
  auto doc = nlohmann::ordered_json::parse(text);
  doc["categorizations"][0]["totals"]["sub"] =
      doc["categorizations"][0]["totals"]["sub"].get<std::uint64_t>() + 1;
  CHECK_THROWS_AS(ParseScoreReport(doc.dump()), ParseError);
}

TEST_CASE("parsers survive arbitrary bytes with structured errors") {
  const std::vector<std::string> garbage = {
      "\x00\x01\x02",     "\xff\xfe junk",        "{\"a\":",
      "null",             "true",                 "42",
      "{}",               "\"quoted\"",           "{\"kind\":7}",
  };
  for (const std::string& g : garbage) {
    CHECK_THROWS_AS(ParseScoreReport(g), ParseError);
    CHECK_THROWS_AS(ParseMatrixCsv(g), ParseError);
  }
}

TEST_CASE("confusion reports serialize matrices and rendered rankings") {
  std::vector<Alignment> alignments = {
      Align(Phones("ch aa m"), Phones("jh aa n"))};
  std::vector<ConfusionMatrix> matrices;
  std::vector<ConfusionRanking> rankings;
  for (std::string_view name : BpcCategorization::Names()) {
    matrices.push_back(
        BuildConfusionMatrix(alignments, BpcCategorization::Get(name)));
    rankings.push_back(RankConfusions(matrices.back()));
  }
  const std::string text = WriteConfusionReport(matrices, rankings);
  auto doc = nlohmann::ordered_json::parse(text);
  CHECK(doc["schema_version"] == kReportSchemaVersion);
  CHECK(doc["kind"] == "confusion_report");
  REQUIRE(doc["categorizations"].size() == 3);
  const auto& eight = doc["categorizations"][0];
  CHECK(eight["name"] == "eight_class");
  CHECK(eight["labels"].size() == 8);
  CHECK(eight["counts"].size() == 8);
  bool saw_aff = false;
  for (const auto& row : eight["rankings"]) {
    if (row["id"] == "aff") {
      saw_aff = true;
      CHECK(row["rendered"] == "aff, —");
      CHECK(row["first"] == nlohmann::ordered_json::array({"aff"}));
      CHECK(row["second"].empty());
    }
  }
  CHECK(saw_aff);
}

TEST_CASE("gain reports carry nulls for undefined classes") {
  GainReport g;
  g.categorization = "voicing";
  g.class_ids = {"voi", "sil", "unv"};
  g.per_class = {0.25, std::nullopt, -0.5};
  g.average = -0.125;
  const std::vector<GainReport> gains = {g};
  const std::string text = WriteGainReport(gains);
  auto doc = nlohmann::ordered_json::parse(text);
  const auto& classes = doc["categorizations"][0]["classes"];
  CHECK(classes[0]["gain_raw"] == 0.25);
  CHECK(classes[0]["gain_percent"] == 25.0);
  CHECK(classes[1]["gain_raw"].is_null());
  CHECK(classes[1]["gain_percent"].is_null());
  CHECK(classes[2]["gain_raw"] == -0.5);
  CHECK(classes[2]["gain_percent"] == -50.0);
  CHECK(doc["categorizations"][0]["average_gain_raw"] == -0.125);
  CHECK(doc["categorizations"][0]["average_gain_percent"] == -12.5);

  const std::string csv = WriteGainCsv(gains);
  CHECK(csv.find("voicing,voi,0.25,25.0\n") != std::string::npos);
  CHECK(csv.find("voicing,sil,,\n") != std::string::npos);
  CHECK(csv.find("voicing,average,-0.125,-12.5\n") != std::string::npos);
}

TEST_CASE("breakdown CSV is one labelled row per class plus totals") {
  std::vector<Alignment> alignments = {
      Align(Phones("sil aa ch sil m sil aa t sil uw"),
            Phones("sil aa jh sil m sil aa t sil uw"))};
  const auto breakdowns = AllBreakdowns(alignments);
  const std::string csv = WriteBreakdownCsv(breakdowns);
  CHECK(csv.rfind("categorization,class,sub,del,ins,per_raw,per_percent\n",
                  0) == 0);
  CHECK(csv.find("eight_class,aff,1,0,0,0.1,10.0\n") != std::string::npos);
  CHECK(csv.find("eight_class,total,1,0,0,0.1,10.0\n") != std::string::npos);
  CHECK(csv.find("voicing,unv,1,0,0,0.1,10.0\n") != std::string::npos);
  // 3 categorizations: (8 + 1) + (3 + 1) + (3 + 1) data rows plus a header.
  std::size_t rows = 0;
  for (char c : csv) rows += (c == '\n') ? 1 : 0;
  CHECK(rows == 18);
}

TEST_CASE("matrix CSV round-trips and tolerates annotations") {
  std::mt19937 rng(407);
  const auto alignments = RandomCorpus(rng, 6);
  ConfusionMatrix m =
      BuildConfusionMatrix(alignments, BpcCategorization::Get("eight_class"));
  const std::string csv = WriteMatrixCsv(m);
  ConfusionMatrix parsed = ParseMatrixCsv(csv);
  CHECK(parsed.categorization == m.categorization);
  CHECK(parsed.labels == m.labels);
  CHECK(parsed.counts == m.counts);
  CHECK(WriteMatrixCsv(parsed) == csv);

  const std::string annotated =
      "# produced by a tool\n" + csv + "\n# ranking aff: fri, —\n";
  ConfusionMatrix reparsed = ParseMatrixCsv(annotated);
  CHECK(reparsed.counts == m.counts);
}

TEST_CASE("matrix CSV parsing validates shape and content") {
  ConfusionMatrix m;
  m.categorization = "voicing";
  m.labels = {"voi", "sil", "unv"};
  m.counts = {{1, 2, 3}, {4, 0, 6}, {7, 8, 9}};
  const std::string good = WriteMatrixCsv(m);
  CHECK(ParseMatrixCsv(good).counts == m.counts);

  CHECK_THROWS_AS(ParseMatrixCsv(""), ParseError);
  CHECK_THROWS_AS(ParseMatrixCsv("nosuch,a,b\n"), ParseError);
  CHECK_THROWS_AS(ParseMatrixCsv("voicing,voi,sil\n"), ParseError);
  CHECK_THROWS_AS(ParseMatrixCsv("voicing,voi,sil,unv\nvoi,1,2\n"), ParseError);
  CHECK_THROWS_AS(ParseMatrixCsv("voicing,voi,sil,unv\nvoi,1,2,x\n"),
                  ParseError);
  CHECK_THROWS_AS(ParseMatrixCsv(good + "extra,1,2,3\n"), ParseError);
  const std::string truncated = "voicing,voi,sil,unv\nvoi,1,2,3\n";
  CHECK_THROWS_AS(ParseMatrixCsv(truncated), ParseError);
  // A substitution count on the silence diagonal is structurally impossible.
  const std::string bad_sil =
      "voicing,voi,sil,unv\nvoi,0,0,0\nsil,0,5,0\nunv,0,0,0\n";
  CHECK_THROWS_AS(ParseMatrixCsv(bad_sil), ParseError);
}

}  // namespace
}  // namespace phoneval
