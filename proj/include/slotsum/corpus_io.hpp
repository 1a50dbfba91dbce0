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

// JSONL (UTF-8, one object per line) encodings.
//
// Corpus record:
//   {"id": str, "entity_name": str, "documents": [str], "summary": str,
//    "facts": [{"key": str, "value": str}], "template": str|null,
//    "split": "train"|"valid"|"test"}
// with an optional "unmatched_slots": [str]. Readers ignore unknown fields.
//
// Build inputs:
//   summaries   {"id", "entity_name", "documents": [str], "summary"}
//   fact tables {"id", "abstract", "facts": [{"key", "value"}]}

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slotsum/dataset.hpp"
#include "slotsum/types.hpp"

namespace slotsum {

nlohmann::ordered_json record_to_json(const CorpusRecord& record);
// Throws DataError on schema violations; the record is validate()d.
CorpusRecord record_from_json(const nlohmann::json& value);

SummaryEntry summary_entry_from_json(const nlohmann::json& value);
FactEntry fact_entry_from_json(const nlohmann::json& value);

// Calls `visit` with each non-blank line parsed as JSON. Throws DataError
// naming the file and line on a parse failure or when `visit` throws one.
void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(const nlohmann::json&)>& visit);

std::vector<CorpusRecord> read_corpus(const std::filesystem::path& path);
std::vector<SummaryEntry> read_summaries(const std::filesystem::path& path);
std::vector<FactEntry> read_fact_tables(const std::filesystem::path& path);

// Writes one compact JSON object per line, "\n"-terminated.
void write_jsonl(const std::filesystem::path& path,
                 const std::vector<nlohmann::ordered_json>& lines);
void write_corpus(const std::filesystem::path& path,
                  const std::vector<CorpusRecord>& records);

}  // namespace slotsum
