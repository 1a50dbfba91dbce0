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

#include "slotsum/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "slotsum/errors.hpp"
#include "slotsum/simtext.hpp"

namespace slotsum {

std::vector<MatchCandidate> match_entries(
    const std::vector<AbstractEntry>& left,
    const std::vector<AbstractEntry>& right, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw InvalidArgument("match threshold must be in (0, 1]");
  }
  std::vector<TokenSet> right_sets;
  std::unordered_map<std::string, std::vector<std::size_t>> index;
  right_sets.reserve(right.size());
  for (std::size_t r = 0; r < right.size(); ++r) {
    right_sets.push_back(token_set(right[r].abstract));
    for (const auto& word : right_sets.back()) index[word].push_back(r);
  }

  struct Pair {
    std::size_t left;
    std::size_t right;
    SimScore score;
  };
  std::vector<Pair> pairs;
  for (std::size_t l = 0; l < left.size(); ++l) {
    const TokenSet words = token_set(left[l].abstract);
    // A score above zero needs a shared word, so only those are scored.
    std::set<std::size_t> candidates;
    for (const auto& word : words) {
      const auto it = index.find(word);
      if (it != index.end()) candidates.insert(it->second.begin(), it->second.end());
    }
    for (std::size_t r : candidates) {
      const SimScore score = jaccard(words, right_sets[r]);
      if (score.value() > threshold) pairs.push_back({l, r, score});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  });

  std::vector<std::optional<Pair>> assigned(left.size());
  std::vector<bool> right_used(right.size(), false);
  for (const auto& pair : pairs) {
    if (assigned[pair.left] || right_used[pair.right]) continue;
    assigned[pair.left] = pair;
    right_used[pair.right] = true;
  }
  std::vector<MatchCandidate> matches;
  for (const auto& pair : assigned) {
    if (!pair) continue;
    matches.push_back(
        {left[pair->left].id, right[pair->right].id, pair->score});
  }
  return matches;
}

JoinResult join_corpora(const std::vector<SummaryEntry>& summaries,
                        const std::vector<FactEntry>& fact_tables,
                        const std::vector<MatchCandidate>& matches) {
  std::unordered_map<std::string, const SummaryEntry*> by_left;
  for (const auto& entry : summaries) by_left.emplace(entry.id, &entry);
  std::unordered_map<std::string, const FactEntry*> by_right;
  for (const auto& entry : fact_tables) by_right.emplace(entry.id, &entry);

  std::vector<std::string> dangling;
  for (const auto& match : matches) {
    if (!by_left.contains(match.left_id)) {
      dangling.push_back("left:" + match.left_id);
    }
    if (!by_right.contains(match.right_id)) {
      dangling.push_back("right:" + match.right_id);
    }
  }
  if (!dangling.empty()) {
    std::string list;
    for (const auto& id : dangling) list += (list.empty() ? "" : ", ") + id;
    throw DataError("matches reference unknown ids: " + list);
  }

  JoinResult result;
  for (const auto& match : matches) {
    const SummaryEntry& left = *by_left.at(match.left_id);
    const FactEntry& right = *by_right.at(match.right_id);
    try {
      std::vector<std::string> warnings;
      CorpusRecord record{left.id,
                          Entity(left.entity_name),
                          left.documents,
                          left.summary,
                          FactSet::from_raw(right.facts, &warnings),
                          std::nullopt,
                          {},
                          Split::kTrain};
      record.validate();
      for (const auto& w : warnings) {
        result.warnings.push_back(left.id + ": " + w);
      }
      result.records.push_back(std::move(record));
    } catch (const Error& e) {
      result.dropped.push_back(left.id + ": " + e.what());
    }
  }
  return result;
}

namespace {

std::string escape_reserved(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '|' || c == '#' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

// Splits on " <sep> " where `sep` is not escaped. Escapes are kept.
std::vector<std::string> split_on(std::string_view text, char sep) {
  std::vector<std::string> pieces;
  std::string current;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\\' && i + 1 < text.size()) {
      current.push_back(c);
      current.push_back(text[++i]);
      continue;
    }
    if (c == sep && !current.empty() && current.back() == ' ' &&
        i + 1 < text.size() && text[i + 1] == ' ') {
      current.pop_back();
      pieces.push_back(std::move(current));
      current.clear();
      ++i;
      continue;
    }
    current.push_back(c);
  }
  pieces.push_back(std::move(current));
  return pieces;
}

std::string unescape(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\\' && i + 1 < text.size()) ++i;
    out.push_back(text[i]);
  }
  return out;
}

}  // namespace

std::string serialize_keys(const FactSet& facts) {
  std::string out;
  for (const auto& fact : facts) {
    if (!out.empty()) out += " | ";
    out += escape_reserved(fact.key);
  }
  return out;
}

std::string serialize_kv(const FactSet& facts) {
  std::string out;
  for (const auto& fact : facts) {
    if (!out.empty()) out += " # ";
    out += escape_reserved(fact.key);
    out += " | ";
    out += escape_reserved(fact.value);
  }
  return out;
}

FactSet parse_kv(std::string_view serialized) {
  if (serialized.empty()) return FactSet();
  std::vector<FactPair> facts;
  for (const auto& raw : split_on(serialized, '#')) {
    const auto parts = split_on(raw, '|');
    if (parts.size() != 2) {
      throw DataError("malformed key/value pair '" + raw + "'");
    }
    facts.push_back({unescape(parts[0]), unescape(parts[1])});
  }
  return FactSet(std::move(facts));
}

std::string augment_input(std::string_view serialized,
                          std::string_view document) {
  std::string out = "[CLS] ";
  out += serialized;
  out += " [SEP] ";
  out += document;
  out += " [SEP]";
  return out;
}

namespace {

// Uniform integer in [0, bound) by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t reject_below = (0 - bound) % bound;
  std::uint64_t draw = engine();
  while (draw < reject_below) draw = engine();
  return draw % bound;
}

}  // namespace

std::vector<CorpusRecord> split_corpus(std::vector<CorpusRecord> records,
                                       const SplitRatios& ratios,
                                       std::uint64_t seed) {
  if (ratios.train < 0 || ratios.valid < 0 || ratios.test < 0) {
    throw InvalidArgument("split ratios must be non-negative");
  }
  if (std::abs(ratios.train + ratios.valid + ratios.test - 1.0) > 1e-9) {
    throw InvalidArgument("split ratios must sum to 1");
  }
  const std::size_t n = records.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 engine(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[uniform_below(engine, i)]);
  }

  const auto round_count = [n](double ratio) {
    return std::min<std::size_t>(
        n, static_cast<std::size_t>(std::llround(static_cast<double>(n) * ratio)));
  };
  const std::size_t n_train = round_count(ratios.train);
  const std::size_t n_valid = std::min(n - n_train, round_count(ratios.valid));
  for (std::size_t pos = 0; pos < n; ++pos) {
    Split split = Split::kTest;
    if (pos < n_train) {
      split = Split::kTrain;
    } else if (pos < n_train + n_valid) {
      split = Split::kValid;
    }
    records[order[pos]].split = split;
  }
  return records;
}

StatsReport corpus_stats(const std::vector<CorpusRecord>& records) {
  if (records.empty()) throw DataError("corpus has no examples");
  StatsReport report;
  report.example_count = records.size();
  std::map<std::string, std::size_t> frequency;
  for (const auto& record : records) {
    ++report.split_counts[static_cast<std::size_t>(record.split)];
    report.key_count += record.facts.size();
    for (const auto& fact : record.facts) {
      report.value_tokens += tokenize(fact.value).size();
    }
    for (const auto& doc : record.documents) {
      report.src_tokens += tokenize(doc).size();
    }
    report.tgt_tokens += tokenize(record.summary).size();
    if (record.golden_template) {
      report.slot_count += record.golden_template->slot_count();
      for (const auto& key : record.golden_template->slot_keys()) {
        ++frequency[key];
      }
    }
  }
  const auto n = static_cast<double>(report.example_count);
  report.avg_slots = static_cast<double>(report.slot_count) / n;
  report.avg_keys = static_cast<double>(report.key_count) / n;
  report.avg_value_len =
      report.key_count == 0 ? 0.0
                            : static_cast<double>(report.value_tokens) /
                                  static_cast<double>(report.key_count);
  report.avg_src_len = static_cast<double>(report.src_tokens) / n;
  report.avg_tgt_len = static_cast<double>(report.tgt_tokens) / n;

  for (const auto& [key, count] : frequency) {
    report.slot_frequency.push_back(
        {key, count, static_cast<double>(count) / n});
  }
  std::stable_sort(report.slot_frequency.begin(), report.slot_frequency.end(),
                   [](const SlotFrequency& a, const SlotFrequency& b) {
                     return a.count > b.count;
                   });
  return report;
}

std::string format_popularity(std::size_t count, std::size_t total) {
  if (total == 0) throw InvalidArgument("popularity of an empty corpus");
  // Basis points, rounded half up in integer arithmetic.
  const std::uint64_t bp = (static_cast<std::uint64_t>(count) * 20000 + total) /
                           (2 * static_cast<std::uint64_t>(total));
  std::string out = std::to_string(bp / 100) + ".";
  const std::uint64_t frac = bp % 100;
  out += std::to_string(frac / 10);
  if (frac % 10 != 0) out += std::to_string(frac % 10);
  return out + "%";
}

namespace {

std::string fixed2(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << value;
  return out.str();
}

}  // namespace

std::string format_stats_table(const StatsReport& report,
                               std::size_t top_slots) {
  std::ostringstream out;
  const auto row = [&out](std::string_view name, const std::string& value) {
    out << std::left << std::setw(20) << name << value << '\n';
  };
  row("Feature", "Value");
  row("# Examples", std::to_string(report.example_count));
  row("Train/Valid/Test", std::to_string(report.split_counts[0]) + "/" +
                              std::to_string(report.split_counts[1]) + "/" +
                              std::to_string(report.split_counts[2]));
  row("# Slots", std::to_string(report.slot_count));
  row("Avg. Slots", fixed2(report.avg_slots));
  row("# Keys", std::to_string(report.key_count));
  row("Avg. Keys", fixed2(report.avg_keys));
  row("Avg. Value Len", fixed2(report.avg_value_len));
  row("Avg. Src Length", fixed2(report.avg_src_len));
  row("Avg. Tgt Length", fixed2(report.avg_tgt_len));
  out << '\n';
  out << std::left << std::setw(20) << "Slot" << std::setw(12) << "Frequency"
      << "Popularity" << '\n';
  const std::size_t shown = std::min(top_slots, report.slot_frequency.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& slot = report.slot_frequency[i];
    out << std::left << std::setw(20) << slot.key << std::setw(12)
        << slot.count << format_popularity(slot.count, report.example_count)
        << '\n';
  }
  return out.str();
}

}  // namespace slotsum
