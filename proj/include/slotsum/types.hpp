// Copyright 2026 The SlotSum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Domain vocabulary shared by every module: entities, fact tables,
// slot templates, corpus records and the run configuration. All types are
// immutable once constructed and validate their invariants up front.

#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace slotsum {

inline constexpr std::string_view kSlotOpen = "[SLT]";
inline constexpr std::string_view kSlotClose = "[/SLT]";

std::string trim(std::string_view text);

// Lowercase (ASCII) and strip surrounding whitespace. Underscores are kept.
std::string normalize_key(std::string_view key);

class Entity {
 public:
  // Throws InvalidArgument if the name is blank.
  explicit Entity(std::string_view name);
  const std::string& name() const noexcept { return name_; }
  bool operator==(const Entity&) const = default;

 private:
  std::string name_;
};

using Document = std::string;
using DocumentSet = std::vector<Document>;

// A similarity value in [0, 1].
class SimScore {
 public:
  constexpr SimScore() = default;
  // Throws InvalidArgument outside [0, 1].
  explicit SimScore(double value);
  constexpr double value() const noexcept { return value_; }
  auto operator<=>(const SimScore&) const = default;

 private:
  double value_ = 0.0;
};

struct FactPair {
  std::string key;
  std::string value;
  bool operator==(const FactPair&) const = default;
};

// Ordered fact table with keys unique under normalize_key().
class FactSet {
 public:
  FactSet() = default;
  // Throws DataError on a blank key or value, or on a duplicate key.
  explicit FactSet(std::vector<FactPair> facts);
  FactSet(std::initializer_list<FactPair> facts)
      : FactSet(std::vector<FactPair>(facts)) {}

  // Lenient ingestion for raw tables: a duplicate key keeps its first
  // occurrence and appends a message to `warnings`. Blank keys or values
  // still throw DataError.
  static FactSet from_raw(std::vector<FactPair> raw,
                          std::vector<std::string>* warnings);

  const std::vector<FactPair>& pairs() const noexcept { return facts_; }
  std::size_t size() const noexcept { return facts_.size(); }
  bool empty() const noexcept { return facts_.empty(); }
  auto begin() const noexcept { return facts_.begin(); }
  auto end() const noexcept { return facts_.end(); }

  // Lookup by key, compared after normalize_key().
  const FactPair* find(std::string_view key) const;

  bool operator==(const FactSet&) const = default;

 private:
  std::vector<FactPair> facts_;
};

// Throws MarkupError if `key` is blank or contains a markup token.
void validate_slot_key(std::string_view key);

class Slot {
 public:
  // Stores the trimmed key; see validate_slot_key().
  explicit Slot(std::string_view key);
  const std::string& key() const noexcept { return key_; }
  bool operator==(const Slot&) const = default;

 private:
  std::string key_;
};

struct LiteralText {
  std::string text;
  bool operator==(const LiteralText&) const = default;
};

using Segment = std::variant<LiteralText, Slot>;

// A sequence of literal text and slots. Construction merges adjacent
// literals and drops empty ones, so two templates with the same markup
// always compare equal.
class Template {
 public:
  Template() = default;
  // Throws MarkupError if a literal contains a markup token.
  explicit Template(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  // Distinct slot keys in order of first appearance.
  std::vector<std::string> slot_keys() const;
  // Number of slot segments, repeats included.
  std::size_t slot_count() const;
  bool has_slots() const { return slot_count() > 0; }

  bool operator==(const Template&) const = default;

 private:
  std::vector<Segment> segments_;
};

enum class Split { kTrain, kValid, kTest };
std::string_view to_string(Split split);
// Throws DataError on anything other than train/valid/test.
Split parse_split(std::string_view name);

struct CorpusRecord {
  std::string id;
  Entity entity;
  DocumentSet documents;
  std::string summary;
  FactSet facts;
  std::optional<Template> golden_template;
  // Template keys with no counterpart in `facts`.
  std::vector<std::string> unmatched_slots;
  Split split = Split::kTrain;

  // Throws DataError if the id is blank, a document is empty, or a template
  // slot key is neither a fact key nor listed in unmatched_slots.
  void validate() const;
};

enum class Strategy { kDiscard, kPredict, kAllPredict };
std::string_view to_string(Strategy strategy);
// Accepts discard, predict, all_predict (and all-predict). Throws
// InvalidArgument on anything else.
Strategy parse_strategy(std::string_view name);

struct Config {
  double delta = 0.8;
  std::size_t span_window_slack = 2;
  Strategy strategy = Strategy::kDiscard;

  // Throws InvalidArgument unless 0 < delta <= 1.
  void validate() const;
};

}  // namespace slotsum
