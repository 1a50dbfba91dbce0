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

#include <atomic>
#include <map>

#include "slotsum/errors.hpp"
#include "slotsum/slotfill.hpp"
#include "support/oracles.hpp"

using namespace slotsum;

namespace {

// Answers from fixed tables; "!fail" as a slot answer raises a timeout.
class ScriptedBackend : public Backend {
 public:
  std::string template_markup;
  std::map<std::string, std::string> slots;
  std::atomic<int> slot_calls{0};
  std::atomic<int> template_calls{0};

  BackendResponse generate(const BackendRequest& request) override {
    if (request.task == BackendTask::kTemplate) {
      ++template_calls;
      return {template_markup, 0.0, id()};
    }
    ++slot_calls;
    const auto it = slots.find(*request.slot_key);
    const std::string out = it == slots.end() ? "" : it->second;
    if (out == "!fail") {
      throw BackendError(BackendErrorKind::kTimeout, "scripted failure");
    }
    return {out, 0.0, id()};
  }
  std::string id() const override { return "scripted"; }
};

Config with(Strategy strategy, double delta = 0.8) {
  Config config;
  config.strategy = strategy;
  config.delta = delta;
  return config;
}

}  // namespace

TEST_SUITE("slotfill") {

TEST_CASE("slot query format") {
  CHECK(format_slot_query(Entity("Peter Wichers"), "birth_date",
                          {"doc one", "doc two"}) ==
        "[CLS] Peter Wichers birth_date [SEP] doc one\ndoc two [SEP]");
  CHECK(format_slot_query(Entity("x"), "k", {}) == "[CLS] x k [SEP]  [SEP]");
}

TEST_CASE("predictions skip empty outputs and record failures") {
  ScriptedBackend backend;
  backend.slots = {{"name", "Peter"}, {"genre", ""}, {"club", "!fail"}};
  const auto tmpl = parse_template(
      "[SLT] name [/SLT] [SLT] genre [/SLT] [SLT] club [/SLT] [SLT] name [/SLT]");
  for (bool concurrent : {false, true}) {
    backend.slot_calls = 0;
    const auto result = predict_slots(Entity("Peter"), tmpl, {"d"}, backend,
                                      concurrent);
    CHECK(backend.slot_calls == 3);
    CHECK(result.values == PredictionMap{{"name", "Peter"}});
    REQUIRE(result.failures.size() == 1);
    CHECK(result.failures[0].key == "club");
  }
}

TEST_CASE("all predictions failing is a backend error") {
  ScriptedBackend backend;
  backend.slots = {{"a", "!fail"}, {"b", "!fail"}};
  const auto tmpl = parse_template("[SLT] a [/SLT] [SLT] b [/SLT]");
  try {
    predict_slots(Entity("x"), tmpl, {"d"}, backend);
    FAIL("expected BackendError");
  } catch (const BackendError& e) {
    CHECK(e.kind() == BackendErrorKind::kUnavailable);
  }
  CHECK(predict_slots(Entity("x"), parse_template("none"), {}, backend)
            .values.empty());
}

TEST_CASE("corrections use the nearest external key") {
  const auto tmpl = parse_template(
      "[SLT] name [/SLT] [SLT] birth_date [/SLT] [SLT] genre [/SLT]");
  const FactSet external({{"names", "Peter"},
                          {"birthdate", "1979"},
                          {"occupation", "guitarist"}});
  const auto corrections = correct_slots(tmpl, external, Config{});
  CHECK(corrections.corrected_keys() ==
        std::set<std::string>{"birth_date", "name"});
  CHECK(corrections.entries.at("name").value == "Peter");
  CHECK(corrections.entries.at("name").external_key == "names");
  CHECK(corrections.entries.at("birth_date").value == "1979");
  CHECK_FALSE(corrections.contains("genre"));
}

TEST_CASE("correction threshold is inclusive and ties pick the smaller key") {
  const auto tmpl = parse_template("[SLT] abcd [/SLT]");
  // Indel distance 2 over 10 characters: similarity exactly 0.8.
  CHECK(correct_slots(tmpl, FactSet({{"abcdef", "v"}}), with(Strategy::kDiscard, 0.8))
            .contains("abcd"));
  CHECK_FALSE(correct_slots(tmpl, FactSet({{"abcdef", "v"}}),
                            with(Strategy::kDiscard, 0.81))
                  .contains("abcd"));
  const auto tied = correct_slots(
      tmpl, FactSet({{"abcdz", "late"}, {"abcdy", "early"}}), Config{});
  CHECK(tied.entries.at("abcd").external_key == "abcdy");
  CHECK(tied.entries.at("abcd").value == "early");
}

TEST_CASE("strategy table") {
  const auto tmpl = parse_template("[SLT] a [/SLT] [SLT] b [/SLT] [SLT] c [/SLT]");
  const PredictionMap predictions{{"a", "pa"}, {"b", "pb"}};
  CorrectionMap corrections;
  corrections.entries.emplace("a", Correction{"ca", "a", SimScore(1.0)});
  corrections.entries.emplace("c", Correction{"cc", "c", SimScore(1.0)});

  const auto discard = apply_strategy("discard", tmpl, predictions, corrections);
  CHECK(discard.at("a") == FillEntry{"ca", Provenance::kCorrected});
  CHECK(discard.at("b") == FillEntry{"", Provenance::kEmpty});
  CHECK(discard.at("c") == FillEntry{"cc", Provenance::kCorrected});

  const auto predict = apply_strategy("predict", tmpl, predictions, corrections);
  CHECK(predict.at("a") == FillEntry{"ca", Provenance::kCorrected});
  CHECK(predict.at("b") == FillEntry{"pb", Provenance::kPredicted});
  CHECK(predict.at("c") == FillEntry{"cc", Provenance::kCorrected});

  const auto all = apply_strategy("all_predict", tmpl, predictions, corrections);
  CHECK(all.at("a") == FillEntry{"pa", Provenance::kPredicted});
  CHECK(all.at("b") == FillEntry{"pb", Provenance::kPredicted});
  CHECK(all.at("c") == FillEntry{"", Provenance::kEmpty});

  CHECK_THROWS_AS(apply_strategy("vote", tmpl, predictions, corrections),
                  InvalidArgument);
}

TEST_CASE("strategy post-conditions on generated inputs") {
  oracle::Gen gen(31);
  const std::vector<std::string> pool{"a", "b", "c", "d", "e", "f"};
  for (int i = 0; i < 500; ++i) {
    std::vector<Segment> segments;
    const std::size_t n = gen.below(6);
    for (std::size_t k = 0; k < n; ++k) {
      segments.emplace_back(Slot(pool[gen.below(pool.size())]));
      segments.emplace_back(LiteralText{" "});
    }
    const Template tmpl(segments);
    PredictionMap predictions;
    CorrectionMap corrections;
    for (const auto& key : pool) {
      if (gen.coin()) predictions.emplace(key, "p" + key);
      if (gen.coin()) {
        corrections.entries.emplace(key, Correction{"c" + key, key, SimScore(1.0)});
      }
    }
    for (auto strategy :
         {Strategy::kDiscard, Strategy::kPredict, Strategy::kAllPredict}) {
      const auto plan = apply_strategy(strategy, tmpl, predictions, corrections);
      REQUIRE(plan.size() == tmpl.slot_keys().size());
      for (const auto& key : tmpl.slot_keys()) {
        const bool kc = corrections.contains(key);
        const auto p = predictions.find(key);
        const std::string vp = p == predictions.end() ? "" : p->second;
        const std::string vc = kc ? corrections.entries.at(key).value : "";
        const std::string& got = plan.at(key).value;
        switch (strategy) {
          case Strategy::kDiscard:
            REQUIRE(got == (kc ? vc : ""));
            break;
          case Strategy::kPredict:
            REQUIRE(got == (kc ? vc : vp));
            break;
          case Strategy::kAllPredict:
            REQUIRE(got == vp);
            break;
        }
      }
    }
  }
}

TEST_CASE("summarize wires the stages together") {
  ScriptedBackend backend;
  backend.template_markup =
      "[SLT] name [/SLT] is a [SLT] nationality [/SLT] [SLT] occupation [/SLT] .";
  backend.slots = {{"name", "Pete"}, {"nationality", "swedish"},
                   {"occupation", "guitarist"}};
  const FactSet external({{"name", "Peter Wichers"}, {"nationality", "Swedish"}});
  const Entity entity("Peter Wichers");

  SUBCASE("discard never asks for predictions") {
    const auto r = summarize(entity, {"doc"}, external, backend,
                             with(Strategy::kDiscard));
    CHECK(backend.slot_calls == 0);
    CHECK(r.predictions_skipped);
    CHECK(r.summary == "Peter Wichers is a Swedish.");
    CHECK(r.plan.at("occupation").provenance == Provenance::kEmpty);
  }
  SUBCASE("predict fills the rest from the backend") {
    const auto r = summarize(entity, {"doc"}, external, backend,
                             with(Strategy::kPredict));
    CHECK(backend.slot_calls == 3);
    CHECK(r.summary == "Peter Wichers is a Swedish guitarist .");
  }
  SUBCASE("all_predict ignores external facts") {
    const auto r = summarize(entity, {"doc"}, external, backend,
                             with(Strategy::kAllPredict));
    CHECK(r.corrections.entries.empty());
    CHECK(r.summary == "Pete is a swedish guitarist .");
  }
  SUBCASE("precomputed template bypasses generation") {
    SummarizeOptions options;
    options.precomputed_template = parse_template("[SLT] name [/SLT] rocks");
    const auto r = summarize(entity, {"doc"}, external, backend,
                             with(Strategy::kDiscard), options);
    CHECK(backend.template_calls == 0);
    CHECK(r.summary == "Peter Wichers rocks");
    CHECK(r.template_markup == "[SLT] name [/SLT] rocks");
  }
  SUBCASE("malformed markup") {
    backend.template_markup = "[SLT] name is";
    try {
      summarize(entity, {"doc"}, external, backend, with(Strategy::kDiscard));
      FAIL("expected BackendError");
    } catch (const BackendError& e) {
      CHECK(e.kind() == BackendErrorKind::kMalformedResponse);
    }
    SummarizeOptions lenient;
    lenient.strict = false;
    const auto r = summarize(entity, {"doc"}, external, backend,
                             with(Strategy::kDiscard), lenient);
    CHECK(r.warnings.size() == 1);
    CHECK(r.summary == " name is");
  }
}

}  // TEST_SUITE
