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

#include "slotsum/types.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "slotsum/errors.hpp"

namespace slotsum {

const char* to_string(BackendErrorKind kind) {
  switch (kind) {
    case BackendErrorKind::kTimeout:
      return "timeout";
    case BackendErrorKind::kMalformedResponse:
      return "malformed response";
    case BackendErrorKind::kBadStatus:
      return "bad status";
    case BackendErrorKind::kBadRequest:
      return "bad request";
    case BackendErrorKind::kUnavailable:
      return "backend unavailable";
  }
  return "backend error";
}

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool contains_markup(std::string_view text) {
  return text.find(kSlotOpen) != std::string_view::npos ||
         text.find(kSlotClose) != std::string_view::npos;
}

}  // namespace

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return std::string(text.substr(begin, end - begin));
}

std::string normalize_key(std::string_view key) {
  std::string out = trim(key);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

Entity::Entity(std::string_view name) : name_(trim(name)) {
  if (name_.empty()) throw InvalidArgument("entity name is blank");
}

SimScore::SimScore(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw InvalidArgument("similarity score outside [0, 1]: " +
                          std::to_string(value));
  }
}

namespace {

FactPair checked_pair(const FactPair& raw) {
  FactPair pair{trim(raw.key), trim(raw.value)};
  if (pair.key.empty()) throw DataError("fact with blank key");
  if (pair.value.empty()) {
    throw DataError("fact '" + pair.key + "' has a blank value");
  }
  return pair;
}

}  // namespace

FactSet::FactSet(std::vector<FactPair> facts) {
  std::unordered_set<std::string> seen;
  facts_.reserve(facts.size());
  for (const auto& raw : facts) {
    FactPair pair = checked_pair(raw);
    if (!seen.insert(normalize_key(pair.key)).second) {
      throw DataError("duplicate fact key '" + pair.key + "'");
    }
    facts_.push_back(std::move(pair));
  }
}

FactSet FactSet::from_raw(std::vector<FactPair> raw,
                          std::vector<std::string>* warnings) {
  std::unordered_set<std::string> seen;
  std::vector<FactPair> kept;
  kept.reserve(raw.size());
  for (const auto& r : raw) {
    FactPair pair = checked_pair(r);
    if (!seen.insert(normalize_key(pair.key)).second) {
      if (warnings != nullptr) {
        warnings->push_back("duplicate fact key '" + pair.key +
                            "': keeping first occurrence");
      }
      continue;
    }
    kept.push_back(std::move(pair));
  }
  return FactSet(std::move(kept));
}

const FactPair* FactSet::find(std::string_view key) const {
  const std::string wanted = normalize_key(key);
  for (const auto& pair : facts_) {
    if (normalize_key(pair.key) == wanted) return &pair;
  }
  return nullptr;
}

void validate_slot_key(std::string_view key) {
  if (contains_markup(key)) {
    throw MarkupError("slot key '" + std::string(key) +
                      "' contains a markup token");
  }
  if (trim(key).empty()) throw MarkupError("slot key is blank");
}

Slot::Slot(std::string_view key) : key_(trim(key)) { validate_slot_key(key); }

Template::Template(std::vector<Segment> segments) {
  segments_.reserve(segments.size());
  for (auto& segment : segments) {
    if (auto* literal = std::get_if<LiteralText>(&segment)) {
      if (contains_markup(literal->text)) {
        throw MarkupError("literal text contains a markup token");
      }
      if (literal->text.empty()) continue;
      if (!segments_.empty()) {
        if (auto* prev = std::get_if<LiteralText>(&segments_.back())) {
          prev->text += literal->text;
          continue;
        }
      }
    }
    segments_.push_back(std::move(segment));
  }
}

std::vector<std::string> Template::slot_keys() const {
  std::vector<std::string> keys;
  std::set<std::string> seen;
  for (const auto& segment : segments_) {
    if (const auto* slot = std::get_if<Slot>(&segment)) {
      if (seen.insert(slot->key()).second) keys.push_back(slot->key());
    }
  }
  return keys;
}

std::size_t Template::slot_count() const {
  return static_cast<std::size_t>(
      std::count_if(segments_.begin(), segments_.end(), [](const Segment& s) {
        return std::holds_alternative<Slot>(s);
      }));
}

std::string_view to_string(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kValid:
      return "valid";
    case Split::kTest:
      return "test";
  }
  return "train";
}

Split parse_split(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "valid") return Split::kValid;
  if (name == "test") return Split::kTest;
  throw DataError("unknown split '" + std::string(name) + "'");
}

void CorpusRecord::validate() const {
  if (trim(id).empty()) throw DataError("record with blank id");
  for (const auto& doc : documents) {
    if (doc.empty()) throw DataError("record " + id + ": empty document");
  }
  if (!golden_template) return;
  for (const auto& key : golden_template->slot_keys()) {
    if (facts.find(key) != nullptr) continue;
    if (std::find(unmatched_slots.begin(), unmatched_slots.end(), key) !=
        unmatched_slots.end()) {
      continue;
    }
    throw DataError("record " + id + ": template slot '" + key +
                    "' has no fact and is not annotated as unmatched");
  }
}

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::kDiscard:
      return "discard";
    case Strategy::kPredict:
      return "predict";
    case Strategy::kAllPredict:
      return "all_predict";
  }
  return "discard";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "discard") return Strategy::kDiscard;
  if (name == "predict") return Strategy::kPredict;
  if (name == "all_predict" || name == "all-predict") {
    return Strategy::kAllPredict;
  }
  throw InvalidArgument("unknown strategy '" + std::string(name) + "'");
}

void Config::validate() const {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw InvalidArgument("delta must be in (0, 1], got " +
                          std::to_string(delta));
  }
}

}  // namespace slotsum
