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

#include "phoneval/phoneset.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "phoneval/error.h"

namespace phoneval {

namespace {

// The 39-phone scoring inventory, lexicographically sorted so lookup can
// binary-search.
constexpr std::string_view kInventory[Phone::kInventorySize] = {
    "aa", "ae", "ah", "aw", "ay", "b",  "ch", "d",  "dh", "dx",
    "eh", "er", "ey", "f",  "g",  "hh", "ih", "iy", "jh", "k",
    "l",  "m",  "n",  "ng", "ow", "oy", "p",  "r",  "s",  "sh",
    "sil", "t", "th", "uh", "uw", "v",  "w",  "y",  "z"};

int InventoryIndex(std::string_view symbol) {
  auto it = std::lower_bound(std::begin(kInventory), std::end(kInventory), symbol);
  if (it == std::end(kInventory) || *it != symbol) return -1;
  return static_cast<int>(it - std::begin(kInventory));
}

// Class tables. Each categorization is a list of (id, display) pairs and a
// parallel list of space-separated member phones.
constexpr std::pair<const char*, const char*> kEightClassIds[] = {
    {"aff", "Affricates"}, {"dip", "Diphthongs"}, {"fri", "Fricatives"},
    {"nas", "Nasal"},      {"plo", "Plosive"},    {"sem", "Semi-vowel"},
    {"sil", "Silence"},    {"vow", "Vowel"}};
constexpr const char* kEightClassMembers[] = {
    "ch jh",
    "aw ay ey ow oy",
    "dh f s sh th v z",
    "m n ng",
    "b d dx g k p t",
    "hh l r w y",
    "sil",
    "aa ae ah eh er ih iy uh uw"};

constexpr std::pair<const char*, const char*> kConsonantVowelIds[] = {
    {"con", "Consonant"}, {"sil", "Silence"}, {"vow+", "Vowel+"}};
constexpr const char* kConsonantVowelMembers[] = {
    "b ch d dh dx f g hh jh k l m n ng p r s sh t th v w y z",
    "sil",
    "aw ay ey ow oy aa ae ah eh er ih iy uh uw"};

constexpr std::pair<const char*, const char*> kVoicingIds[] = {
    {"voi", "Voiced"}, {"sil", "Silence"}, {"unv", "Unvoiced"}};
constexpr const char* kVoicingMembers[] = {
    "aa ae ah aw ay b d dh dx eh er ey g hh ih iy jh l m n ng ow oy r uh uw v w y z",
    "sil",
    "ch f k p s sh t th"};

std::vector<std::string_view> SplitTokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = text.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    std::size_t end = text.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    pos = end;
  }
  return out;
}

}  // namespace

Phone::Phone(std::string_view symbol) {
  int idx = InventoryIndex(symbol);
  if (idx < 0) {
    throw std::invalid_argument("unknown phone '" + std::string(symbol) + "'");
  }
  index_ = static_cast<std::uint8_t>(idx);
}

std::optional<Phone> Phone::TryParse(std::string_view symbol) {
  int idx = InventoryIndex(symbol);
  if (idx < 0) return std::nullopt;
  return Phone(idx);
}

std::span<const std::string_view> Phone::Inventory() {
  return {kInventory, Phone::kInventorySize};
}

std::string_view Phone::symbol() const { return kInventory[index_]; }

bool BpcClass::Contains(Phone p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

BpcCategorization::BpcCategorization(
    std::string_view name,
    std::span<const std::pair<const char*, const char*>> specs,
    std::span<const char* const> member_lists)
    : name_(name) {
  class_of_.fill(0xff);
  for (std::size_t c = 0; c < specs.size(); ++c) {
    BpcClass cls;
    cls.id = specs[c].first;
    cls.display = specs[c].second;
    for (std::string_view tok : SplitTokens(member_lists[c])) {
      Phone p(tok);
      if (class_of_[p.index()] != 0xff) {
        throw std::logic_error("class table: phone '" + std::string(tok) +
                               "' assigned twice in " + name_);
      }
      class_of_[p.index()] = static_cast<std::uint8_t>(c);
      cls.members.push_back(p);
    }
    if (cls.members.empty()) {
      throw std::logic_error("class table: empty class " + cls.id);
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
  for (std::uint8_t c : class_of_) {
    if (c == 0xff) {
      throw std::logic_error("class table: incomplete partition in " + name_);
    }
  }
}

const BpcCategorization& BpcCategorization::Get(std::string_view name) {
  static const BpcCategorization eight_class("eight_class", kEightClassIds,
                                             kEightClassMembers);
  static const BpcCategorization consonant_vowel(
      "consonant_vowel", kConsonantVowelIds, kConsonantVowelMembers);
  static const BpcCategorization voicing("voicing", kVoicingIds,
                                         kVoicingMembers);
  if (name == "eight_class") return eight_class;
  if (name == "consonant_vowel") return consonant_vowel;
  if (name == "voicing") return voicing;
  throw std::invalid_argument("unknown categorization '" + std::string(name) +
                              "' (expected eight_class, consonant_vowel or voicing)");
}

std::span<const std::string_view> BpcCategorization::Names() {
  static constexpr std::string_view kNames[] = {"eight_class",
                                                "consonant_vowel", "voicing"};
  return kNames;
}

int BpcCategorization::FindClassIndex(std::string_view class_id) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].id == class_id) return static_cast<int>(i);
  }
  return -1;
}

FoldMap FoldMap::Parse(std::string_view text) {
  std::vector<std::pair<std::string, std::optional<Phone>>> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = SplitTokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError("expected 'source target' pair", line_no);
    }
    if (tokens[1] == "-") {
      entries.emplace_back(std::string(tokens[0]), std::nullopt);
      continue;
    }
    auto target = Phone::TryParse(tokens[1]);
    if (!target) {
      throw ParseError("target '" + std::string(tokens[1]) +
                           "' is not an inventory phone",
                       line_no);
    }
    entries.emplace_back(std::string(tokens[0]), *target);
  }
  try {
    return FromEntries(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

FoldMap FoldMap::FromEntries(
    std::vector<std::pair<std::string, std::optional<Phone>>> entries) {
  FoldMap map;
  for (auto& [source, target] : entries) {
    auto [it, inserted] = map.entries_.emplace(std::move(source), target);
    if (!inserted) {
      throw std::invalid_argument("duplicate fold source '" + it->first + "'");
    }
  }
  // Idempotency: a kept target that is itself a source must be a fixed point,
  // otherwise folding twice would differ from folding once.
  for (const auto& [source, target] : map.entries_) {
    if (!target.has_value()) continue;
    auto it = map.entries_.find(target->symbol());
    if (it != map.entries_.end() && it->second != target) {
      throw std::invalid_argument(
          "fold map is not idempotent: '" + source + "' maps to '" +
          std::string(target->symbol()) + "', which maps elsewhere");
    }
  }
  return map;
}

std::vector<Phone> FoldMap::Apply(std::span<const std::string> tokens) const {
  std::vector<Phone> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto it = entries_.find(tokens[i]);
    if (it != entries_.end()) {
      if (it->second.has_value()) out.push_back(*it->second);
      continue;  // dropped
    }
    auto phone = Phone::TryParse(tokens[i]);
    if (!phone) throw TokenError(tokens[i], i);
    out.push_back(*phone);
  }
  return out;
}

}  // namespace phoneval
