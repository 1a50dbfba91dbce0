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

#include "slotsum/corpus_io.hpp"

#include <fstream>

#include "slotsum/errors.hpp"
#include "slotsum/templater.hpp"

namespace slotsum {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

template <typename T>
T field(const json& object, const char* name) {
  const auto it = object.find(name);
  if (it == object.end()) {
    throw DataError(std::string("missing field '") + name + "'");
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw DataError(std::string("field '") + name + "' has the wrong type");
  }
}

std::vector<FactPair> facts_from_json(const json& object) {
  std::vector<FactPair> facts;
  const auto it = object.find("facts");
  if (it == object.end()) throw DataError("missing field 'facts'");
  if (!it->is_array()) throw DataError("field 'facts' must be an array");
  for (const auto& item : *it) {
    if (!item.is_object()) throw DataError("fact must be an object");
    facts.push_back({field<std::string>(item, "key"),
                     field<std::string>(item, "value")});
  }
  return facts;
}

void require_object(const json& value) {
  if (!value.is_object()) throw DataError("line is not a JSON object");
}

}  // namespace

ordered_json record_to_json(const CorpusRecord& record) {
  ordered_json facts = ordered_json::array();
  for (const auto& fact : record.facts) {
    facts.push_back({{"key", fact.key}, {"value", fact.value}});
  }
  ordered_json out;
  out["id"] = record.id;
  out["entity_name"] = record.entity.name();
  out["documents"] = record.documents;
  out["summary"] = record.summary;
  out["facts"] = std::move(facts);
  out["template"] = record.golden_template
                        ? ordered_json(to_markup(*record.golden_template))
                        : ordered_json(nullptr);
  out["split"] = std::string(to_string(record.split));
  if (!record.unmatched_slots.empty()) {
    out["unmatched_slots"] = record.unmatched_slots;
  }
  return out;
}

CorpusRecord record_from_json(const json& value) {
  require_object(value);
  const auto id = field<std::string>(value, "id");
  try {
    std::optional<Template> tmpl;
    const auto it = value.find("template");
    if (it != value.end() && !it->is_null()) {
      if (!it->is_string()) throw DataError("field 'template' must be a string");
      tmpl = parse_template(it->get<std::string>());
    }
    std::vector<std::string> unmatched;
    if (value.contains("unmatched_slots")) {
      unmatched = field<std::vector<std::string>>(value, "unmatched_slots");
    }
    CorpusRecord record{id,
                        Entity(field<std::string>(value, "entity_name")),
                        field<DocumentSet>(value, "documents"),
                        field<std::string>(value, "summary"),
                        FactSet(facts_from_json(value)),
                        std::move(tmpl),
                        std::move(unmatched),
                        parse_split(field<std::string>(value, "split"))};
    record.validate();
    return record;
  } catch (const InvalidArgument& e) {
    throw DataError("record " + id + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError("record " + id + ": " + e.what());
  }
}

SummaryEntry summary_entry_from_json(const json& value) {
  require_object(value);
  return SummaryEntry{field<std::string>(value, "id"),
                      field<std::string>(value, "entity_name"),
                      field<DocumentSet>(value, "documents"),
                      field<std::string>(value, "summary")};
}

FactEntry fact_entry_from_json(const json& value) {
  require_object(value);
  return FactEntry{field<std::string>(value, "id"),
                   field<std::string>(value, "abstract"),
                   facts_from_json(value)};
}

void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(const json&)>& visit) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    json value = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) throw DataError(where + ": invalid JSON");
    try {
      visit(value);
    } catch (const DataError& e) {
      throw DataError(where + ": " + e.what());
    }
  }
}

std::vector<CorpusRecord> read_corpus(const std::filesystem::path& path) {
  std::vector<CorpusRecord> records;
  for_each_jsonl(path, [&](const json& value) {
    records.push_back(record_from_json(value));
  });
  return records;
}

std::vector<SummaryEntry> read_summaries(const std::filesystem::path& path) {
  std::vector<SummaryEntry> entries;
  for_each_jsonl(path, [&](const json& value) {
    entries.push_back(summary_entry_from_json(value));
  });
  return entries;
}

std::vector<FactEntry> read_fact_tables(const std::filesystem::path& path) {
  std::vector<FactEntry> entries;
  for_each_jsonl(path, [&](const json& value) {
    entries.push_back(fact_entry_from_json(value));
  });
  return entries;
}

void write_jsonl(const std::filesystem::path& path,
                 const std::vector<ordered_json>& lines) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& line : lines) out << line.dump() << '\n';
  if (!out) throw DataError("write failed for " + path.string());
}

void write_corpus(const std::filesystem::path& path,
                  const std::vector<CorpusRecord>& records) {
  std::vector<ordered_json> lines;
  lines.reserve(records.size());
  for (const auto& record : records) lines.push_back(record_to_json(record));
  write_jsonl(path, lines);
}

}  // namespace slotsum
