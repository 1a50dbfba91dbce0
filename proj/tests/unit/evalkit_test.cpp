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

#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "slotsum/errors.hpp"
#include "slotsum/evalkit.hpp"
#include "slotsum/templater.hpp"
#include "support/oracles.hpp"

using namespace slotsum;

namespace {

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += (out.empty() ? "" : " ") + t;
  return out;
}

std::vector<std::string> random_tokens(oracle::Gen& gen, std::size_t max_len) {
  static const std::vector<std::string> vocab{"a", "b", "c", "d"};
  std::vector<std::string> out(gen.below(max_len + 1));
  for (auto& t : out) t = vocab[gen.below(vocab.size())];
  return out;
}

CorpusRecord record(std::string id, std::string summary,
                    std::vector<FactPair> facts) {
  return {std::move(id), Entity("x"), {"d"}, std::move(summary),
          FactSet(std::move(facts)), std::nullopt, {}, Split::kTest};
}

}  // namespace

TEST_SUITE("evalkit") {

TEST_CASE("rouge examples") {
  const auto r1 = rouge_n("the cat", "the cat sat", 1);
  CHECK(r1.precision == 1.0);
  CHECK(r1.recall == doctest::Approx(2.0 / 3.0));
  CHECK(r1.f1 == doctest::Approx(0.8));

  CHECK(lcs_length({"a", "c"}, {"a", "b", "c"}) == 2);
  const auto rl = rouge_l("a c", "a b c");
  CHECK(rl.precision == 1.0);
  CHECK(rl.recall == doctest::Approx(2.0 / 3.0));

  CHECK(rouge_n("a b", "a b", 2).f1 == 1.0);
  CHECK(rouge_n("x", "y", 1).f1 == 0.0);
  CHECK(rouge_n("", "", 1).f1 == 1.0);
  CHECK(rouge_n("", "a", 1).f1 == 0.0);
  CHECK_THROWS_AS(rouge_n("a", "a", 0), InvalidArgument);
}

TEST_CASE("rouge ignores case and bare punctuation") {
  CHECK(rouge_tokens("The cat , sat .") ==
        std::vector<std::string>{"the", "cat", "sat"});
  CHECK(rouge_n("The cat .", "the cat", 1).f1 == 1.0);
  // Clipping: a repeated candidate token only counts as often as in the
  // reference.
  CHECK(rouge_n("the the the", "the cat", 1).precision ==
        doctest::Approx(1.0 / 3.0));
}

TEST_CASE("lcs matches brute force") {
  oracle::Gen gen(51);
  for (int i = 0; i < 3000; ++i) {
    const auto a = random_tokens(gen, 8);
    const auto b = random_tokens(gen, 8);
    REQUIRE(lcs_length(a, b) == oracle::lcs_brute(a, b));
  }
}

TEST_CASE("rouge-n matches the overlap oracle") {
  oracle::Gen gen(52);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_tokens(gen, 9);
    const auto b = random_tokens(gen, 9);
    for (std::size_t n : {1u, 2u, 3u}) {
      const auto score = rouge_n(join(a), join(b), n);
      const std::size_t overlap = oracle::ngram_overlap(a, b, n);
      const std::size_t ca = a.size() >= n ? a.size() - n + 1 : 0;
      const std::size_t rb = b.size() >= n ? b.size() - n + 1 : 0;
      if (ca == 0 && rb == 0) {
        REQUIRE(score.f1 == 1.0);
        continue;
      }
      REQUIRE(score.precision ==
              doctest::Approx(ca ? double(overlap) / double(ca) : 0.0));
      REQUIRE(score.recall ==
              doctest::Approx(rb ? double(overlap) / double(rb) : 0.0));
    }
  }
}

TEST_CASE("swapping candidate and reference swaps precision and recall") {
  oracle::Gen gen(53);
  for (int i = 0; i < 1000; ++i) {
    const auto a = join(random_tokens(gen, 8));
    const auto b = join(random_tokens(gen, 8));
    for (const auto& [ab, ba] :
         {std::pair{rouge_n(a, b, 1), rouge_n(b, a, 1)},
          std::pair{rouge_n(a, b, 2), rouge_n(b, a, 2)},
          std::pair{rouge_l(a, b), rouge_l(b, a)}}) {
      REQUIRE(ab.precision == ba.recall);
      REQUIRE(ab.recall == ba.precision);
      REQUIRE(ab.f1 == doctest::Approx(ba.f1));
      REQUIRE(ab.f1 >= 0.0);
      REQUIRE(ab.f1 <= 1.0);
    }
  }
}

TEST_CASE("fact accuracy") {
  const FactSet golden({{"name", "Peter Wichers"},
                        {"birth_date", "5 June 1979"},
                        {"genre", "heavy metal"}});
  FillPlan plan{{"name", {"Peter Wichers", Provenance::kCorrected}},
                {"birth_date", {"5 June 1979 .", Provenance::kPredicted}},
                {"genre", {"", Provenance::kEmpty}},
                {"spouse", {"Anna", Provenance::kPredicted}}};
  const auto score = slot_fact_accuracy(plan, golden, 0.8);
  CHECK(score.total_slots == 4);
  CHECK(score.filled == 3);
  CHECK(score.exact_correct == 1);
  CHECK(score.fuzzy_correct == 2);
  CHECK(score.precision() == doctest::Approx(2.0 / 3.0));
  CHECK(score.recall() == 0.5);

  FillPlan empty{{"name", {"", Provenance::kEmpty}}};
  const auto none = slot_fact_accuracy(empty, golden, 0.8);
  CHECK(none.precision() == 1.0);
  CHECK(none.recall() == 0.0);
  CHECK(slot_fact_accuracy({}, golden, 0.8).recall() == 1.0);
  CHECK_THROWS_AS(slot_fact_accuracy(plan, golden, 0.0), InvalidArgument);
}

TEST_CASE("corpus evaluation") {
  const std::vector<CorpusRecord> records{
      record("b", "Ada was a writer .", {{"name", "Ada"}}),
      record("a", "Bob sang .", {{"name", "Bob"}, {"genre", "ska"}})};
  const std::vector<FillOutput> outputs{
      {"a", "Bob sang .",
       {{"name", {"Bob", Provenance::kCorrected}},
        {"genre", {"", Provenance::kEmpty}}}},
      {"b", "Ada was writer .", {{"name", {"Ada", Provenance::kCorrected}}}}};

  const auto report = evaluate_corpus(records, outputs, 0.8);
  CHECK(report.record_count == 2);
  REQUIRE(report.per_record.size() == 2);
  CHECK(report.per_record[0].id == "a");
  CHECK(report.per_record[0].rouge1.f1 == 1.0);
  CHECK(report.rouge1.precision == 1.0);
  CHECK(report.rouge1.recall == doctest::Approx((1.0 + 0.75) / 2.0));
  CHECK(report.fact_precision == 1.0);
  CHECK(report.fact_recall == doctest::Approx(0.75));
  CHECK(report.fact_totals.total_slots == 3);
  CHECK(report.fact_totals.exact_correct == 2);

  auto reversed = outputs;
  std::reverse(reversed.begin(), reversed.end());
  CHECK(report_to_json(evaluate_corpus(records, reversed, 0.8)) ==
        report_to_json(report));

  const auto json = nlohmann::json::parse(report_to_json(report));
  CHECK(json["record_count"] == 2);
  CHECK(json["records"].size() == 2);
  CHECK(report_to_table(report).find("ROUGE-1") != std::string::npos);
}

TEST_CASE("corpus evaluation rejects mismatched inputs") {
  const std::vector<CorpusRecord> records{record("a", "x", {{"k", "v"}})};
  CHECK_THROWS_AS(evaluate_corpus(records, {{"b", "x", {}}}), DataError);
  CHECK_THROWS_AS(evaluate_corpus(records, {}), DataError);
  CHECK_THROWS_AS(evaluate_corpus(records, {{"a", "x", {}}, {"a", "x", {}}}),
                  DataError);
  CHECK_THROWS_AS(evaluate_corpus({}, {}), DataError);
}

}  // TEST_SUITE
