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

// Deterministic evaluation: ROUGE-N / ROUGE-L and slot-level fact accuracy.
//
// ROUGE here is one frozen definition: tokenize() then drop tokens made only
// of punctuation; no stemming; balanced F1. Two empty texts score 1.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "slotsum/slotfill.hpp"
#include "slotsum/types.hpp"

namespace slotsum {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

std::vector<std::string> rouge_tokens(std::string_view text);

// Clipped multiset n-gram overlap. Throws InvalidArgument if n == 0.
RougeScore rouge_n(std::string_view candidate, std::string_view reference,
                   std::size_t n);
RougeScore rouge_l(std::string_view candidate, std::string_view reference);

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b);

struct FactAccuracyScore {
  std::size_t exact_correct = 0;
  std::size_t fuzzy_correct = 0;
  std::size_t filled = 0;
  std::size_t total_slots = 0;

  // 1 when nothing was filled.
  double precision() const;
  // 1 when there are no slots.
  double recall() const;
};

// Each slot is paired with the golden fact whose key is most similar (same
// rule as correct_slots). A non-empty fill is exact when it equals the
// golden value and fuzzy when sorted_indel_sim >= delta.
FactAccuracyScore slot_fact_accuracy(const FillPlan& plan,
                                     const FactSet& golden, double delta);

struct FillOutput {
  std::string id;
  std::string summary;
  FillPlan plan;
};

struct RecordScores {
  std::string id;
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rouge_l;
  FactAccuracyScore facts;
};

struct CorpusReport {
  std::size_t record_count = 0;
  double delta = 0.8;
  // Macro averages over records.
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rouge_l;
  double fact_precision = 0.0;
  double fact_recall = 0.0;
  // Summed counts.
  FactAccuracyScore fact_totals;
  std::vector<RecordScores> per_record;  // sorted by id
};

// Scores each output against the record with the same id. Aggregation runs
// in id order, so permuting either input leaves the report unchanged.
// Throws DataError when the id sets differ or an id repeats.
CorpusReport evaluate_corpus(const std::vector<CorpusRecord>& records,
                             const std::vector<FillOutput>& outputs,
                             double delta = 0.8);

std::string report_to_json(const CorpusReport& report);
std::string report_to_table(const CorpusReport& report);

}  // namespace slotsum
