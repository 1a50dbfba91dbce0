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

// Slot filling: predict each slot from the documents, correct slots from
// trusted external facts, then combine the two under a strategy.
//
//   strategy      k in K_c     k not in K_c
//   discard       corrected    empty
//   predict       corrected    predicted
//   all_predict   predicted    predicted
//
// K_c is the set of slots whose key matched an external fact key with
// sorted_indel_sim >= delta.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slotsum/backend.hpp"
#include "slotsum/templater.hpp"
#include "slotsum/types.hpp"

namespace slotsum {

// "[CLS] " + name + " " + key + " [SEP] " + newline-joined docs + " [SEP]"
std::string format_slot_query(const Entity& entity, std::string_view key,
                              const DocumentSet& documents);

using PredictionMap = std::map<std::string, std::string, std::less<>>;

struct PredictionFailure {
  std::string key;
  std::string message;
};

struct PredictionResult {
  PredictionMap values;  // non-empty outputs only
  std::vector<PredictionFailure> failures;
};

// One backend query per distinct slot key. A BackendError on one key is
// recorded in `failures` and leaves the key absent. Throws
// BackendError(kUnavailable) if every query failed. With `concurrent`, the
// queries run in parallel; the result does not depend on completion order.
PredictionResult predict_slots(const Entity& entity, const Template& tmpl,
                               const DocumentSet& documents, Backend& backend,
                               bool concurrent = false);

struct Correction {
  std::string value;
  std::string external_key;
  SimScore score;
};

struct CorrectionMap {
  std::map<std::string, Correction, std::less<>> entries;

  std::set<std::string> corrected_keys() const;
  bool contains(std::string_view key) const {
    return entries.find(key) != entries.end();
  }
};

// Maps each slot to the value of the external fact whose key is most similar
// (ties: lexicographically smallest key), when that similarity is >= delta.
CorrectionMap correct_slots(const Template& tmpl, const FactSet& external,
                            const Config& config);

enum class Provenance { kCorrected, kPredicted, kEmpty };
std::string_view to_string(Provenance provenance);

struct FillEntry {
  std::string value;
  Provenance provenance = Provenance::kEmpty;
  bool operator==(const FillEntry&) const = default;
};

// Exactly one entry per distinct template slot key.
using FillPlan = std::map<std::string, FillEntry, std::less<>>;

FillPlan apply_strategy(Strategy strategy, const Template& tmpl,
                        const PredictionMap& predictions,
                        const CorrectionMap& corrections);
// Throws InvalidArgument on an unknown strategy name.
FillPlan apply_strategy(std::string_view strategy, const Template& tmpl,
                        const PredictionMap& predictions,
                        const CorrectionMap& corrections);

FillValues fill_values(const FillPlan& plan);

struct SummarizeOptions {
  // Skips template generation when set.
  std::optional<Template> precomputed_template;
  // Strict parsing of backend template markup; lenient parsing records
  // warnings instead of throwing.
  bool strict = true;
  bool concurrent = false;
};

struct SummaryResult {
  std::string summary;
  Template tmpl;
  std::string template_markup;
  PredictionResult predictions;
  bool predictions_skipped = false;
  CorrectionMap corrections;
  FillPlan plan;
  std::vector<std::string> warnings;
};

// Template -> corrections (skipped for all_predict) -> predictions (skipped
// for discard, which never reads them) -> strategy -> render. Unparseable
// backend markup in strict mode is BackendError(kMalformedResponse).
SummaryResult summarize(const Entity& entity, const DocumentSet& documents,
                        const FactSet& external, Backend& backend,
                        const Config& config,
                        const SummarizeOptions& options = {});

}  // namespace slotsum
