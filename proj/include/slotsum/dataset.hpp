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

// Fact-augmented corpus construction: align a summarization corpus with a
// fact-table corpus by bag-of-words similarity of their abstracts, join the
// matched pairs into CorpusRecords, split them, and report statistics.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slotsum/types.hpp"

namespace slotsum {

struct AbstractEntry {
  std::string id;
  std::string abstract;
};

struct MatchCandidate {
  std::string left_id;
  std::string right_id;
  SimScore score;
};

// Pairs whose jaccard_bow score is strictly above `threshold`, assigned
// one-to-one greedily by descending score (ties: left order, then right
// order). Output follows left input order; unmatched entries are omitted.
// Throws InvalidArgument unless 0 < threshold <= 1.
std::vector<MatchCandidate> match_entries(
    const std::vector<AbstractEntry>& left,
    const std::vector<AbstractEntry>& right, double threshold = 0.8);

// Summarization side: documents plus the reference summary.
struct SummaryEntry {
  std::string id;
  std::string entity_name;
  DocumentSet documents;
  std::string summary;
};

// Fact-table side: an abstract used for alignment plus raw fact pairs.
struct FactEntry {
  std::string id;
  std::string abstract;
  std::vector<FactPair> facts;
};

struct JoinResult {
  std::vector<CorpusRecord> records;
  std::vector<std::string> warnings;  // e.g. duplicate fact keys
  std::vector<std::string> dropped;   // "<id>: <reason>"
};

// One record per match, id and text from the left, facts from the right.
// Throws DataError listing every match id absent from its side.
JoinResult join_corpora(const std::vector<SummaryEntry>& summaries,
                        const std::vector<FactEntry>& fact_tables,
                        const std::vector<MatchCandidate>& matches);

// Keys joined with " | ". '|', '#' and '\' are backslash-escaped.
std::string serialize_keys(const FactSet& facts);
// "key | value" pairs joined with " # ", escaped as above.
std::string serialize_kv(const FactSet& facts);
// Inverse of serialize_kv. Throws DataError on a malformed pair.
FactSet parse_kv(std::string_view serialized);

// "[CLS] " + serialized + " [SEP] " + document + " [SEP]"
std::string augment_input(std::string_view serialized,
                          std::string_view document);

struct SplitRatios {
  double train = 0.8;
  double valid = 0.1;
  double test = 0.1;
};

// Seeded Fisher-Yates shuffle (mt19937_64), then contiguous train/valid/test
// partition with round(n * ratio) train and valid records and the rest test.
// Records come back in input order with split labels set. Throws
// InvalidArgument if a ratio is negative or they do not sum to 1.
std::vector<CorpusRecord> split_corpus(std::vector<CorpusRecord> records,
                                       const SplitRatios& ratios,
                                       std::uint64_t seed);

struct SlotFrequency {
  std::string key;
  std::size_t count = 0;    // records whose template contains the key
  double popularity = 0.0;  // count / example_count
};

struct StatsReport {
  std::size_t example_count = 0;
  std::array<std::size_t, 3> split_counts{};  // indexed by Split
  std::size_t slot_count = 0;  // slot segments over all golden templates
  double avg_slots = 0.0;
  std::size_t key_count = 0;  // fact pairs
  double avg_keys = 0.0;
  std::size_t value_tokens = 0;
  double avg_value_len = 0.0;  // per fact value
  std::size_t src_tokens = 0;
  double avg_src_len = 0.0;
  std::size_t tgt_tokens = 0;
  double avg_tgt_len = 0.0;
  // Sorted by count descending, then key.
  std::vector<SlotFrequency> slot_frequency;
};

// Throws DataError on an empty corpus.
StatsReport corpus_stats(const std::vector<CorpusRecord>& records);

// count / total as a percentage rounded half-up to two decimals, trailing
// zeros dropped but one decimal kept: (21743, 27372) -> "79.44%",
// (3286, 27372) -> "12.0%".
std::string format_popularity(std::size_t count, std::size_t total);

std::string format_stats_table(const StatsReport& report,
                               std::size_t top_slots = 10);

}  // namespace slotsum
