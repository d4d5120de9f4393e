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

#ifndef PHONEVAL_PHONESET_H_
#define PHONEVAL_PHONESET_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phoneval {

// One phone from the 39-token scoring inventory (38 speech phones plus
// "sil"). Phones are interned as indices into the fixed inventory, so copies
// and comparisons are trivial and a Phone is always valid once constructed.
class Phone {
 public:
  static constexpr int kInventorySize = 39;

  // Throws std::invalid_argument if `symbol` is not in the inventory.
  explicit Phone(std::string_view symbol);

  // Non-throwing variant for parse paths.
  static std::optional<Phone> TryParse(std::string_view symbol);

  // The inventory in lexicographic order.
  static std::span<const std::string_view> Inventory();

  std::string_view symbol() const;
  int index() const { return index_; }

  friend bool operator==(Phone a, Phone b) { return a.index_ == b.index_; }
  friend bool operator!=(Phone a, Phone b) { return a.index_ != b.index_; }
  friend bool operator<(Phone a, Phone b) { return a.index_ < b.index_; }

 private:
  friend class BpcCategorization;
  explicit Phone(int index) : index_(static_cast<std::uint8_t>(index)) {}

  std::uint8_t index_;
};

// A named broad phonetic class and its member phones.
struct BpcClass {
  std::string id;              // short name, e.g. "aff"
  std::string display;         // full name, e.g. "Affricates"
  std::vector<Phone> members;  // sorted by phone index, non-empty

  bool Contains(Phone p) const;
};

// One of the three partitions of the phone inventory into broad phonetic
// classes. Instances are immutable compiled-in singletons: the class tables
// are data, not configuration, so they cannot drift.
class BpcCategorization {
 public:
  // `name` is one of "eight_class", "consonant_vowel", "voicing".
  // Throws std::invalid_argument for any other name.
  static const BpcCategorization& Get(std::string_view name);

  // The three known categorization names, in the order above.
  static std::span<const std::string_view> Names();

  std::string_view name() const { return name_; }
  const std::vector<BpcClass>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }

  // The unique class containing `p`. Total on the inventory by the partition
  // invariant.
  const BpcClass& ClassOf(Phone p) const { return classes_[class_of_[p.index()]]; }
  int ClassIndexOf(Phone p) const { return class_of_[p.index()]; }

  // Index of the class with the given id, or -1 if absent.
  int FindClassIndex(std::string_view class_id) const;

  BpcCategorization(const BpcCategorization&) = delete;
  BpcCategorization& operator=(const BpcCategorization&) = delete;

 private:
  BpcCategorization(std::string_view name,
                    std::span<const std::pair<const char*, const char*>> specs,
                    std::span<const char* const> member_lists);

  std::string name_;
  std::vector<BpcClass> classes_;
  std::array<std::uint8_t, Phone::kInventorySize> class_of_;
};

// Many-to-one token mapping applied before scoring, e.g. a 61-to-39 phone
// fold. Each entry maps a source token to an inventory phone or drops it.
// The map must be idempotent on its own output: a kept target whose symbol
// also appears as a source must map to itself.
class FoldMap {
 public:
  // Identity map: tokens pass through and must already be inventory phones.
  FoldMap() = default;

  // Text format: one "source target" pair per line, "-" as target drops the
  // source, "#" starts a comment. Throws ParseError.
  static FoldMap Parse(std::string_view text);

  // `entries` values are either a phone or std::nullopt for drop. Throws
  // std::invalid_argument on duplicate sources or idempotency violations.
  static FoldMap FromEntries(
      std::vector<std::pair<std::string, std::optional<Phone>>> entries);

  // Maps every token, removing dropped ones. Tokens outside the map's domain
  // must already be inventory phones. Throws TokenError otherwise, naming
  // the offending token and its position.
  std::vector<Phone> Apply(std::span<const std::string> tokens) const;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::optional<Phone>, std::less<>> entries_;
};

}  // namespace phoneval

#endif  // PHONEVAL_PHONESET_H_
