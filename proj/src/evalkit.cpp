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

#include "slotsum/evalkit.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "slotsum/errors.hpp"
#include "slotsum/simtext.hpp"

namespace slotsum {

namespace {

bool punctuation_only(std::string_view token) {
  return std::all_of(token.begin(), token.end(), [](char c) {
    return std::ispunct(static_cast<unsigned char>(c)) != 0;
  });
}

RougeScore make_score(std::size_t overlap, std::size_t candidate_total,
                      std::size_t reference_total) {
  if (candidate_total == 0 && reference_total == 0) return {1.0, 1.0, 1.0};
  RougeScore score;
  if (candidate_total > 0) {
    score.precision =
        static_cast<double>(overlap) / static_cast<double>(candidate_total);
  }
  if (reference_total > 0) {
    score.recall =
        static_cast<double>(overlap) / static_cast<double>(reference_total);
  }
  if (score.precision + score.recall > 0.0) {
    score.f1 = 2.0 * score.precision * score.recall /
               (score.precision + score.recall);
  }
  return score;
}

std::map<std::vector<std::string>, std::size_t> ngram_counts(
    const std::vector<std::string>& tokens, std::size_t n) {
  std::map<std::vector<std::string>, std::size_t> counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i,
                                      tokens.begin() + i + n)];
  }
  return counts;
}

std::size_t ngram_total(std::size_t tokens, std::size_t n) {
  return tokens >= n ? tokens - n + 1 : 0;
}

}  // namespace

std::vector<std::string> rouge_tokens(std::string_view text) {
  std::vector<std::string> tokens = tokenize(text);
  std::erase_if(tokens, [](const std::string& t) { return punctuation_only(t); });
  return tokens;
}

RougeScore rouge_n(std::string_view candidate, std::string_view reference,
                   std::size_t n) {
  if (n == 0) throw InvalidArgument("rouge_n needs n >= 1");
  const auto cand = rouge_tokens(candidate);
  const auto ref = rouge_tokens(reference);
  const auto cand_counts = ngram_counts(cand, n);
  const auto ref_counts = ngram_counts(ref, n);
  std::size_t overlap = 0;
  for (const auto& [gram, count] : cand_counts) {
    const auto it = ref_counts.find(gram);
    if (it != ref_counts.end()) overlap += std::min(count, it->second);
  }
  return make_score(overlap, ngram_total(cand.size(), n),
                    ngram_total(ref.size(), n));
}

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (const auto& token : a) {
    std::size_t diagonal = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      row[j] = token == b[j - 1] ? diagonal + 1 : std::max(row[j], row[j - 1]);
      diagonal = above;
    }
  }
  return row[b.size()];
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
  const auto cand = rouge_tokens(candidate);
  const auto ref = rouge_tokens(reference);
  return make_score(lcs_length(cand, ref), cand.size(), ref.size());
}

double FactAccuracyScore::precision() const {
  if (filled == 0) return 1.0;
  return static_cast<double>(fuzzy_correct) / static_cast<double>(filled);
}

double FactAccuracyScore::recall() const {
  if (total_slots == 0) return 1.0;
  return static_cast<double>(fuzzy_correct) / static_cast<double>(total_slots);
}

FactAccuracyScore slot_fact_accuracy(const FillPlan& plan,
                                     const FactSet& golden, double delta) {
  Config config;
  config.delta = delta;
  config.validate();
  FactAccuracyScore score;
  score.total_slots = plan.size();
  for (const auto& [key, entry] : plan) {
    if (entry.value.empty()) continue;
    ++score.filled;
    const FactPair* match = nullptr;
    SimScore best;
    for (const auto& fact : golden) {
      const SimScore sim = sorted_indel_sim(key, fact.key);
      if (match == nullptr || sim > best ||
          (sim == best && fact.key < match->key)) {
        match = &fact;
        best = sim;
      }
    }
    if (match == nullptr || best.value() < delta) continue;
    if (entry.value == match->value) ++score.exact_correct;
    if (sorted_indel_sim(entry.value, match->value).value() >= delta) {
      ++score.fuzzy_correct;
    }
  }
  return score;
}

CorpusReport evaluate_corpus(const std::vector<CorpusRecord>& records,
                             const std::vector<FillOutput>& outputs,
                             double delta) {
  std::map<std::string, const CorpusRecord*> by_id;
  for (const auto& record : records) {
    if (!by_id.emplace(record.id, &record).second) {
      throw DataError("duplicate record id " + record.id);
    }
  }
  std::map<std::string, const FillOutput*> output_by_id;
  for (const auto& output : outputs) {
    if (!output_by_id.emplace(output.id, &output).second) {
      throw DataError("duplicate output id " + output.id);
    }
  }
  std::vector<std::string> mismatched;
  for (const auto& [id, record] : by_id) {
    if (!output_by_id.contains(id)) mismatched.push_back("no output for " + id);
  }
  for (const auto& [id, output] : output_by_id) {
    if (!by_id.contains(id)) mismatched.push_back("unknown output " + id);
  }
  if (!mismatched.empty()) {
    std::string list;
    for (const auto& m : mismatched) list += (list.empty() ? "" : "; ") + m;
    throw DataError("record and output ids differ: " + list);
  }
  if (by_id.empty()) throw DataError("nothing to evaluate");

  CorpusReport report;
  report.delta = delta;
  report.record_count = by_id.size();
  for (const auto& [id, record] : by_id) {
    const FillOutput& output = *output_by_id.at(id);
    RecordScores scores;
    scores.id = id;
    scores.rouge1 = rouge_n(output.summary, record->summary, 1);
    scores.rouge2 = rouge_n(output.summary, record->summary, 2);
    scores.rouge_l = rouge_l(output.summary, record->summary);
    scores.facts = slot_fact_accuracy(output.plan, record->facts, delta);
    report.per_record.push_back(std::move(scores));
  }

  const auto n = static_cast<double>(report.record_count);
  const auto accumulate = [n](RougeScore& into, const RougeScore& add) {
    into.precision += add.precision / n;
    into.recall += add.recall / n;
    into.f1 += add.f1 / n;
  };
  double precision_sum = 0.0;
  double recall_sum = 0.0;
  RougeScore r1;
  RougeScore r2;
  RougeScore rl;
  for (const auto& scores : report.per_record) {
    accumulate(r1, scores.rouge1);
    accumulate(r2, scores.rouge2);
    accumulate(rl, scores.rouge_l);
    precision_sum += scores.facts.precision();
    recall_sum += scores.facts.recall();
    report.fact_totals.exact_correct += scores.facts.exact_correct;
    report.fact_totals.fuzzy_correct += scores.facts.fuzzy_correct;
    report.fact_totals.filled += scores.facts.filled;
    report.fact_totals.total_slots += scores.facts.total_slots;
  }
  report.rouge1 = r1;
  report.rouge2 = r2;
  report.rouge_l = rl;
  report.fact_precision = precision_sum / n;
  report.fact_recall = recall_sum / n;
  return report;
}

namespace {

nlohmann::ordered_json rouge_json(const RougeScore& score) {
  return {{"precision", score.precision},
          {"recall", score.recall},
          {"f1", score.f1}};
}

nlohmann::ordered_json facts_json(const FactAccuracyScore& score) {
  return {{"exact_correct", score.exact_correct},
          {"fuzzy_correct", score.fuzzy_correct},
          {"filled", score.filled},
          {"total_slots", score.total_slots},
          {"precision", score.precision()},
          {"recall", score.recall()}};
}

}  // namespace

std::string report_to_json(const CorpusReport& report) {
  nlohmann::ordered_json out;
  out["record_count"] = report.record_count;
  out["delta"] = report.delta;
  out["f_measure"] = "balanced F1, macro-averaged over records";
  out["rouge1"] = rouge_json(report.rouge1);
  out["rouge2"] = rouge_json(report.rouge2);
  out["rougeL"] = rouge_json(report.rouge_l);
  out["fact_precision"] = report.fact_precision;
  out["fact_recall"] = report.fact_recall;
  out["fact_totals"] = facts_json(report.fact_totals);
  auto& rows = out["records"] = nlohmann::ordered_json::array();
  for (const auto& scores : report.per_record) {
    rows.push_back({{"id", scores.id},
                    {"rouge1", rouge_json(scores.rouge1)},
                    {"rouge2", rouge_json(scores.rouge2)},
                    {"rougeL", rouge_json(scores.rouge_l)},
                    {"facts", facts_json(scores.facts)}});
  }
  return out.dump(2) + "\n";
}

std::string report_to_table(const CorpusReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  const auto pct = [](double v) { return v * 100.0; };
  out << "records: " << report.record_count << "  delta: " << report.delta
      << "  (balanced F1, macro average)\n";
  out << std::left << std::setw(10) << "metric" << std::right << std::setw(10)
      << "P" << std::setw(10) << "R" << std::setw(10) << "F" << '\n';
  const auto row = [&](std::string_view name, const RougeScore& score) {
    out << std::left << std::setw(10) << name << std::right << std::setw(10)
        << pct(score.precision) << std::setw(10) << pct(score.recall)
        << std::setw(10) << pct(score.f1) << '\n';
  };
  row("ROUGE-1", report.rouge1);
  row("ROUGE-2", report.rouge2);
  row("ROUGE-L", report.rouge_l);
  out << std::left << std::setw(10) << "facts" << std::right << std::setw(10)
      << pct(report.fact_precision) << std::setw(10)
      << pct(report.fact_recall) << std::setw(10) << "-" << '\n';
  out << "slots: " << report.fact_totals.total_slots
      << "  filled: " << report.fact_totals.filled
      << "  fuzzy correct: " << report.fact_totals.fuzzy_correct
      << "  exact correct: " << report.fact_totals.exact_correct << '\n';
  return out.str();
}

}  // namespace slotsum
