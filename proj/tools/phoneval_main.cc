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

// Command line driver. Subcommands: score (per-class error breakdown),
// confusion (class confusion matrices and rankings), compare (relative gain
// between two score reports), filters (kernel synthesis, frequency response,
// gradient check).
//
// Exit codes: 0 success, 1 failed numeric check (filters gradcheck),
// 2 input or parse error, 3 no utterance ids in common, 4 incompatible
// reports.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "phoneval/alignment.h"
#include "phoneval/confusion.h"
#include "phoneval/error.h"
#include "phoneval/error_analysis.h"
#include "phoneval/io_formats.h"
#include "phoneval/phoneset.h"
#include "phoneval/sinc2net.h"

namespace {

using phoneval::Align;
using phoneval::Alignment;
using phoneval::BpcCategorization;
using phoneval::ConfusionAccumulator;
using phoneval::ConfusionMatrix;
using phoneval::ConfusionRanking;
using phoneval::Corpus;
using phoneval::ErrorAccumulator;
using phoneval::ErrorBreakdown;
using phoneval::FilterBankSpec;
using phoneval::FoldMap;
using phoneval::FormatRankingRow;
using phoneval::FreqResponse;
using phoneval::GainReport;
using phoneval::GradParams;
using phoneval::KernelConfig;
using phoneval::KernelGradients;
using phoneval::ParsedHyp;
using phoneval::ParseError;
using phoneval::Phone;
using phoneval::RankConfusions;
using phoneval::RelativeGain;
using phoneval::SincFilterParams;
using phoneval::Spectrum;
using phoneval::SynthKernel;
using phoneval::TokenError;
using phoneval::Window;

// Shortest representation that round-trips, identical to the JSON writers'
// convention, so CSV and JSON outputs agree byte for byte on every number.
std::string FormatDouble(double x) {
  return nlohmann::ordered_json(x).dump();
}

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw std::runtime_error("read failed on '" + path + "'");
  }
  return std::move(buf).str();
}

// Writes to `out_path`, or to stdout when the path is empty. File and stream
// bytes are identical.
void EmitOutput(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + out_path + "' for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed on '" + out_path + "'");
  }
}

int ThreadBudget() {
  const char* env = std::getenv("PHONEVAL_THREADS");
  long value = 0;
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    value = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || value < 0) {
      throw std::runtime_error(
          std::string("PHONEVAL_THREADS must be a non-negative integer, got '") +
          env + "'");
    }
  }
  if (value == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    value = hw == 0 ? 1 : static_cast<long>(hw);
  }
  return static_cast<int>(value);
}

// References come either as a directory tree of per-utterance .phn files
// (id = relative path minus the extension) or as the one-line-per-utterance
// format shared with hypotheses.
Corpus LoadReference(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::is_directory(path)) {
    std::vector<std::pair<std::string, fs::path>> files;
    for (const auto& entry : fs::recursive_directory_iterator(path)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".phn") {
        continue;
      }
      fs::path rel = fs::relative(entry.path(), path);
      rel.replace_extension();
      files.emplace_back(rel.generic_string(), entry.path());
    }
    if (files.empty()) {
      throw std::runtime_error("no .phn files under '" + path + "'");
    }
    std::sort(files.begin(), files.end());
    Corpus corpus;
    corpus.utterances.reserve(files.size());
    for (const auto& [id, file] : files) {
      try {
        corpus.utterances.push_back(
            phoneval::ParsePhn(ReadFileOrThrow(file.string()), id));
      } catch (const ParseError& e) {
        throw std::runtime_error(file.string() + ": " + e.what());
      }
    }
    return corpus;
  }
  ParsedHyp parsed = phoneval::ParseHyp(ReadFileOrThrow(path));
  if (parsed.skipped_lines > 0) {
    std::cerr << "warning: skipped " << parsed.skipped_lines
              << " blank line(s) in '" << path << "'\n";
  }
  return std::move(parsed.corpus);
}

struct UttPair {
  std::string id;
  std::vector<Phone> ref;
  std::vector<Phone> hyp;
};

// Id-intersection matching in reference order. Unmatched ids on either side
// are warnings, not errors; zero matches is exit 3, handled by the caller.
std::vector<UttPair> MatchAndFold(const Corpus& ref, const Corpus& hyp,
                                  const FoldMap& fold) {
  std::set<std::string_view> ref_ids;
  for (const auto& utt : ref.utterances) {
    ref_ids.insert(utt.id);
  }
  for (const auto& utt : hyp.utterances) {
    if (!ref_ids.contains(utt.id)) {
      std::cerr << "warning: hypothesis utterance '" << utt.id
                << "' has no reference\n";
    }
  }
  std::vector<UttPair> pairs;
  pairs.reserve(ref.utterances.size());
  for (const auto& utt : ref.utterances) {
    const phoneval::Utterance* matched = hyp.Find(utt.id);
    if (matched == nullptr) {
      std::cerr << "warning: no hypothesis for utterance '" << utt.id
                << "'\n";
      continue;
    }
    try {
      UttPair pair;
      pair.id = utt.id;
      pair.ref = fold.Apply(utt.phones);
      pair.hyp = fold.Apply(matched->phones);
      pairs.push_back(std::move(pair));
    } catch (const TokenError& e) {
      throw std::runtime_error("utterance '" + utt.id + "': " + e.what());
    }
  }
  return pairs;
}

// Aligns every pair and feeds one accumulator per categorization, fanning
// out over contiguous chunks. The accumulators count integers and merging
// is element-wise addition, so any chunking yields the same result and the
// serialized report is byte-identical across thread counts.
template <typename Accumulator>
std::vector<Accumulator> AccumulateParallel(
    const std::vector<UttPair>& pairs,
    const std::vector<const BpcCategorization*>& cats, int threads) {
  const int n = static_cast<int>(pairs.size());
  const int chunks = std::max(1, std::min(threads, n));
  std::vector<std::vector<Accumulator>> shards;
  shards.reserve(static_cast<std::size_t>(chunks));
  for (int c = 0; c < chunks; ++c) {
    std::vector<Accumulator> accs;
    accs.reserve(cats.size());
    for (const BpcCategorization* cat : cats) {
      accs.emplace_back(*cat);
    }
    shards.push_back(std::move(accs));
  }

  auto run_chunk = [&pairs, &shards](int chunk, int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const Alignment alignment = Align(pairs[static_cast<std::size_t>(i)].ref,
                                        pairs[static_cast<std::size_t>(i)].hyp);
      for (Accumulator& acc : shards[static_cast<std::size_t>(chunk)]) {
        acc.Add(alignment);
      }
    }
  };

  if (chunks == 1) {
    run_chunk(0, 0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(chunks));
    for (int c = 0; c < chunks; ++c) {
      const int begin = static_cast<int>(static_cast<long>(n) * c / chunks);
      const int end = static_cast<int>(static_cast<long>(n) * (c + 1) / chunks);
      pool.emplace_back(run_chunk, c, begin, end);
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }

  std::vector<Accumulator> merged = std::move(shards[0]);
  for (int c = 1; c < chunks; ++c) {
    for (std::size_t k = 0; k < merged.size(); ++k) {
      merged[k].Merge(shards[static_cast<std::size_t>(c)][k]);
    }
  }
  return merged;
}

// Selected categorizations in canonical order; empty selection means all.
std::vector<const BpcCategorization*> ResolveCats(
    const std::vector<std::string>& requested) {
  for (const std::string& name : requested) {
    BpcCategorization::Get(name);  // throws on unknown names
  }
  std::vector<const BpcCategorization*> cats;
  for (std::string_view name : BpcCategorization::Names()) {
    if (requested.empty() ||
        std::find(requested.begin(), requested.end(), name) !=
            requested.end()) {
      cats.push_back(&BpcCategorization::Get(name));
    }
  }
  return cats;
}

FoldMap LoadFold(const std::string& path) {
  if (path.empty()) {
    return FoldMap();
  }
  try {
    return FoldMap::Parse(ReadFileOrThrow(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

struct ScoreOptions {
  std::string ref_path;
  std::string hyp_path;
  std::string fold_path;
  std::vector<std::string> cats;
  std::string format = "json";
  std::string out_path;
};

// Shared front half of score and confusion: load, fold, match, align.
// Returns nullopt when no ids match (exit 3).
std::optional<std::vector<UttPair>> LoadPairs(const ScoreOptions& opt) {
  const Corpus ref = LoadReference(opt.ref_path);
  ParsedHyp hyp = phoneval::ParseHyp(ReadFileOrThrow(opt.hyp_path));
  if (hyp.skipped_lines > 0) {
    std::cerr << "warning: skipped " << hyp.skipped_lines
              << " blank line(s) in '" << opt.hyp_path << "'\n";
  }
  const FoldMap fold = LoadFold(opt.fold_path);
  std::vector<UttPair> pairs = MatchAndFold(ref, hyp.corpus, fold);
  if (pairs.empty()) {
    std::cerr << "error: reference and hypothesis share no utterance ids\n";
    return std::nullopt;
  }
  return pairs;
}

int RunScore(const ScoreOptions& opt) {
  std::optional<std::vector<UttPair>> pairs = LoadPairs(opt);
  if (!pairs.has_value()) {
    return 3;
  }
  const std::vector<const BpcCategorization*> cats = ResolveCats(opt.cats);
  std::vector<ErrorAccumulator> accs =
      AccumulateParallel<ErrorAccumulator>(*pairs, cats, ThreadBudget());
  std::vector<ErrorBreakdown> breakdowns;
  breakdowns.reserve(accs.size());
  for (const ErrorAccumulator& acc : accs) {
    breakdowns.push_back(acc.Finish());
  }
  EmitOutput(opt.format == "csv" ? phoneval::WriteBreakdownCsv(breakdowns)
                                 : phoneval::WriteScoreReport(breakdowns),
             opt.out_path);
  return 0;
}

int RunConfusion(const ScoreOptions& opt) {
  std::optional<std::vector<UttPair>> pairs = LoadPairs(opt);
  if (!pairs.has_value()) {
    return 3;
  }
  const std::vector<const BpcCategorization*> cats = ResolveCats(opt.cats);
  std::vector<ConfusionAccumulator> accs =
      AccumulateParallel<ConfusionAccumulator>(*pairs, cats, ThreadBudget());
  std::vector<ConfusionMatrix> matrices;
  std::vector<ConfusionRanking> rankings;
  matrices.reserve(accs.size());
  rankings.reserve(accs.size());
  for (const ConfusionAccumulator& acc : accs) {
    matrices.push_back(acc.Finish());
    rankings.push_back(RankConfusions(matrices.back()));
  }
  if (opt.format == "csv") {
    std::string text;
    for (std::size_t m = 0; m < matrices.size(); ++m) {
      if (m > 0) {
        text += "\n";
      }
      text += phoneval::WriteMatrixCsv(matrices[m]);
      for (std::size_t r = 0; r < rankings[m].rows.size(); ++r) {
        text += "# ranking " + matrices[m].labels[r] + ": " +
                FormatRankingRow(matrices[m], rankings[m].rows[r]) + "\n";
      }
    }
    EmitOutput(text, opt.out_path);
  } else {
    EmitOutput(phoneval::WriteConfusionReport(matrices, rankings),
               opt.out_path);
  }
  return 0;
}

struct CompareOptions {
  std::string baseline_path;
  std::string improved_path;
  std::string format = "json";
  std::string out_path;
};

int RunCompare(const CompareOptions& opt) {
  std::vector<ErrorBreakdown> baseline;
  std::vector<ErrorBreakdown> improved;
  try {
    baseline = phoneval::ParseScoreReport(ReadFileOrThrow(opt.baseline_path));
  } catch (const ParseError& e) {
    throw std::runtime_error(opt.baseline_path + ": " + e.what());
  }
  try {
    improved = phoneval::ParseScoreReport(ReadFileOrThrow(opt.improved_path));
  } catch (const ParseError& e) {
    throw std::runtime_error(opt.improved_path + ": " + e.what());
  }

  std::map<std::string, const ErrorBreakdown*> by_name;
  for (const ErrorBreakdown& b : improved) {
    if (!by_name.emplace(b.categorization, &b).second) {
      throw std::runtime_error(opt.improved_path +
                               ": duplicate categorization '" +
                               b.categorization + "'");
    }
  }
  std::set<std::string> baseline_names;
  for (const ErrorBreakdown& b : baseline) {
    if (!baseline_names.insert(b.categorization).second) {
      throw std::runtime_error(opt.baseline_path +
                               ": duplicate categorization '" +
                               b.categorization + "'");
    }
  }
  if (by_name.size() != baseline_names.size() ||
      !std::all_of(baseline.begin(), baseline.end(),
                   [&by_name](const ErrorBreakdown& b) {
                     return by_name.contains(b.categorization);
                   })) {
    std::cerr << "error: reports cover different categorization sets\n";
    return 4;
  }

  std::vector<GainReport> gains;
  gains.reserve(baseline.size());
  for (const ErrorBreakdown& base : baseline) {
    gains.push_back(RelativeGain(base, *by_name.at(base.categorization)));
  }
  EmitOutput(opt.format == "csv" ? phoneval::WriteGainCsv(gains)
                                 : phoneval::WriteGainReport(gains),
             opt.out_path);
  return 0;
}

Window ParseWindow(const std::string& name) {
  if (name == "none") {
    return Window::kNone;
  }
  if (name == "hamming") {
    return Window::kHamming;
  }
  throw std::runtime_error("unknown window '" + name +
                           "' (expected none or hamming)");
}

struct FilterOptions {
  int n_filters = 128;
  int length = 129;
  double sample_rate = 16000.0;
  std::string window = "none";
  double bandwidth = 200.0;
  double center = 1000.0;
  int n_fft = 16384;
  std::string format = "csv";
  std::string out_path;
};

int RunFiltersSynth(const FilterOptions& opt) {
  KernelConfig cfg;
  cfg.length = opt.length;
  cfg.sample_rate_hz = opt.sample_rate;
  cfg.window = ParseWindow(opt.window);
  const FilterBankSpec bank = phoneval::InitMel(opt.n_filters, cfg);

  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["sample_rate"] = bank.kernel.sample_rate_hz;
    doc["length"] = bank.kernel.length;
    doc["window"] = opt.window;
    doc["filters"] = nlohmann::ordered_json::array();
    for (const SincFilterParams& p : bank.params) {
      nlohmann::ordered_json f;
      f["center_hz"] = p.center_hz;
      f["bandwidth_hz"] = p.bandwidth_hz;
      doc["filters"].push_back(std::move(f));
    }
    EmitOutput(doc.dump(2) + "\n", opt.out_path);
    return 0;
  }

  // Tap matrix: one kernel per row, one column per tap.
  std::string text;
  for (const SincFilterParams& p : bank.params) {
    const std::vector<double> taps = SynthKernel(p, bank.kernel);
    for (std::size_t i = 0; i < taps.size(); ++i) {
      if (i > 0) {
        text += ',';
      }
      text += FormatDouble(taps[i]);
    }
    text += '\n';
  }
  EmitOutput(text, opt.out_path);
  return 0;
}

int RunFiltersResponse(const FilterOptions& opt) {
  KernelConfig cfg;
  cfg.length = opt.length;
  cfg.sample_rate_hz = opt.sample_rate;
  cfg.window = ParseWindow(opt.window);
  const SincFilterParams params{opt.bandwidth, opt.center};
  const std::vector<double> taps = SynthKernel(params, cfg);
  const Spectrum spectrum = FreqResponse(taps, opt.n_fft, cfg.sample_rate_hz);

  std::string text = "freq_hz,magnitude\n";
  for (std::size_t i = 0; i < spectrum.freq_hz.size(); ++i) {
    text += FormatDouble(spectrum.freq_hz[i]);
    text += ',';
    text += FormatDouble(spectrum.magnitude[i]);
    text += '\n';
  }
  EmitOutput(text, opt.out_path);
  return 0;
}

// Central-difference check of the analytical gradients. The bandwidth step
// is relative; the centre-frequency step is capped because the difference
// truncation grows with (2*pi*t*dfc)^2 regardless of f_c's magnitude.
int RunFiltersGradcheck(const FilterOptions& opt) {
  KernelConfig cfg;
  cfg.length = opt.length;
  cfg.sample_rate_hz = opt.sample_rate;
  cfg.window = ParseWindow(opt.window);
  const double b = opt.bandwidth;
  const double fc = opt.center;
  const KernelGradients g = GradParams(SincFilterParams{b, fc}, cfg);

  auto max_relative_error = [](const std::vector<double>& analytic,
                               const std::vector<double>& numeric) {
    double scale = 1e-300;
    for (double v : numeric) {
      scale = std::max(scale, std::abs(v));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < analytic.size(); ++i) {
      worst = std::max(worst, std::abs(analytic[i] - numeric[i]) / scale);
    }
    return worst;
  };
  auto central_difference = [&cfg](const SincFilterParams& plus,
                                   const SincFilterParams& minus,
                                   double step) {
    const std::vector<double> hi = SynthKernel(plus, cfg);
    const std::vector<double> lo = SynthKernel(minus, cfg);
    std::vector<double> fd(hi.size());
    for (std::size_t i = 0; i < fd.size(); ++i) {
      fd[i] = (hi[i] - lo[i]) / (2.0 * step);
    }
    return fd;
  };

  const double db = std::min(1e-4 * std::max(std::abs(b), 1.0), b / 2.0);
  const double err_b = max_relative_error(
      g.d_bandwidth, central_difference(SincFilterParams{b + db, fc},
                                        SincFilterParams{b - db, fc}, db));
  const double dfc = std::min(1e-4 * std::max(std::abs(fc), 1.0), 0.1);
  const double err_fc = max_relative_error(
      g.d_center, central_difference(SincFilterParams{b, fc + dfc},
                                     SincFilterParams{b, fc - dfc}, dfc));

  const double worst = std::max(err_b, err_fc);
  std::cout << "max relative gradient error: " << FormatDouble(worst)
            << " (bandwidth " << FormatDouble(err_b) << ", center "
            << FormatDouble(err_fc) << ")\n";
  return worst > 1e-4 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phone error analysis over broad phonetic classes"};
  app.require_subcommand(1);

  ScoreOptions score_opt;
  CLI::App* score = app.add_subcommand(
      "score", "Align a hypothesis against a reference and break the phone "
               "error rate down per class");
  score->add_option("--ref", score_opt.ref_path,
                    "Reference corpus: a directory tree of .phn files or a "
                    "one-utterance-per-line file")
      ->required();
  score->add_option("--hyp", score_opt.hyp_path,
                    "Hypothesis file, one utterance per line: id ph1 ph2 ...")
      ->required();
  score->add_option("--fold", score_opt.fold_path,
                    "Token fold map: 'source target' per line, '-' drops");
  score->add_option("--cats", score_opt.cats,
                    "Categorizations to report (default: all)")
      ->delimiter(',');
  score->add_option("--format", score_opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  score->add_option("--out", score_opt.out_path,
                    "Output path (default: stdout)");

  ScoreOptions confusion_opt;
  CLI::App* confusion = app.add_subcommand(
      "confusion", "Build class confusion matrices and most-confused "
                   "rankings from substitutions");
  confusion->add_option("--ref", confusion_opt.ref_path,
                        "Reference corpus: a directory tree of .phn files or "
                        "a one-utterance-per-line file")
      ->required();
  confusion->add_option("--hyp", confusion_opt.hyp_path,
                        "Hypothesis file, one utterance per line")
      ->required();
  confusion->add_option("--fold", confusion_opt.fold_path,
                        "Token fold map: 'source target' per line, '-' drops");
  confusion->add_option("--cats", confusion_opt.cats,
                        "Categorizations to report (default: all)")
      ->delimiter(',');
  confusion->add_option("--format", confusion_opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  confusion->add_option("--out", confusion_opt.out_path,
                        "Output path (default: stdout)");

  CompareOptions compare_opt;
  CLI::App* compare = app.add_subcommand(
      "compare", "Relative per-class gain of an improved system over a "
                 "baseline, from two score reports");
  compare->add_option("--baseline", compare_opt.baseline_path,
                      "Baseline score report (JSON)")
      ->required();
  compare->add_option("--improved", compare_opt.improved_path,
                      "Improved-system score report (JSON)")
      ->required();
  compare->add_option("--format", compare_opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  compare->add_option("--out", compare_opt.out_path,
                      "Output path (default: stdout)");

  FilterOptions filter_opt;
  CLI::App* filters = app.add_subcommand(
      "filters", "Inspect the parametric sinc^2 filterbank");
  filters->require_subcommand(1);

  CLI::App* synth = filters->add_subcommand(
      "synth", "Synthesize a mel-initialized filterbank");
  synth->add_option("--n", filter_opt.n_filters, "Number of filters")
      ->capture_default_str();
  synth->add_option("--len", filter_opt.length, "Kernel length in taps")
      ->capture_default_str();
  synth->add_option("--fs", filter_opt.sample_rate, "Sample rate in Hz")
      ->capture_default_str();
  synth->add_option("--window", filter_opt.window, "Window: none or hamming")
      ->capture_default_str();
  synth->add_option("--format", filter_opt.format,
                    "csv = tap matrix, json = filter parameters")
      ->check(CLI::IsMember({"json", "csv"}));
  synth->add_option("--out", filter_opt.out_path,
                    "Output path (default: stdout)");

  CLI::App* response = filters->add_subcommand(
      "response", "Frequency response of one filter as freq,magnitude CSV");
  response->add_option("--b", filter_opt.bandwidth, "Bandwidth in Hz")
      ->capture_default_str();
  response->add_option("--fc", filter_opt.center, "Centre frequency in Hz")
      ->capture_default_str();
  response->add_option("--len", filter_opt.length, "Kernel length in taps")
      ->capture_default_str();
  response->add_option("--fs", filter_opt.sample_rate, "Sample rate in Hz")
      ->capture_default_str();
  response->add_option("--n-fft", filter_opt.n_fft,
                       "Transform size (power of two, >= 4x length)")
      ->capture_default_str();
  response->add_option("--window", filter_opt.window,
                       "Window: none or hamming")
      ->capture_default_str();
  response->add_option("--out", filter_opt.out_path,
                       "Output path (default: stdout)");

  CLI::App* gradcheck = filters->add_subcommand(
      "gradcheck", "Check analytical gradients against central differences");
  gradcheck->add_option("--b", filter_opt.bandwidth, "Bandwidth in Hz")
      ->capture_default_str();
  gradcheck->add_option("--fc", filter_opt.center, "Centre frequency in Hz")
      ->capture_default_str();
  gradcheck->add_option("--len", filter_opt.length, "Kernel length in taps")
      ->capture_default_str();
  gradcheck->add_option("--fs", filter_opt.sample_rate, "Sample rate in Hz")
      ->capture_default_str();
  gradcheck->add_option("--window", filter_opt.window,
                        "Window: none or hamming")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (score->parsed()) {
      return RunScore(score_opt);
    }
    if (confusion->parsed()) {
      return RunConfusion(confusion_opt);
    }
    if (compare->parsed()) {
      return RunCompare(compare_opt);
    }
    if (synth->parsed()) {
      return RunFiltersSynth(filter_opt);
    }
    if (response->parsed()) {
      return RunFiltersResponse(filter_opt);
    }
    if (gradcheck->parsed()) {
      return RunFiltersGradcheck(filter_opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
