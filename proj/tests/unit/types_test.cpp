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

#include "slotsum/errors.hpp"
#include "slotsum/types.hpp"

using namespace slotsum;

TEST_SUITE("types") {

TEST_CASE("entity name is trimmed and must not be blank") {
  CHECK(Entity("  Peter Wichers ").name() == "Peter Wichers");
  CHECK_THROWS_AS(Entity(""), InvalidArgument);
  CHECK_THROWS_AS(Entity(" \t\n"), InvalidArgument);
}

TEST_CASE("sim score range") {
  CHECK(SimScore(0.0).value() == 0.0);
  CHECK(SimScore(1.0).value() == 1.0);
  CHECK_THROWS_AS(SimScore(-0.01), InvalidArgument);
  CHECK_THROWS_AS(SimScore(1.0001), InvalidArgument);
  CHECK(SimScore(0.2) < SimScore(0.3));
}

TEST_CASE("fact set keys are unique after normalization") {
  FactSet facts({{"name", "peter"}, {" Birth_Date ", " 1990 "}});
  REQUIRE(facts.size() == 2);
  CHECK(facts.pairs()[1].key == "Birth_Date");
  CHECK(facts.pairs()[1].value == "1990");
  REQUIRE(facts.find("birth_date") != nullptr);
  CHECK(facts.find("birth_date")->value == "1990");
  CHECK(facts.find("death_date") == nullptr);

  CHECK_THROWS_AS(FactSet({{"name", "a"}, {"NAME", "b"}}), DataError);
  CHECK_THROWS_AS(FactSet({{"", "a"}}), DataError);
  CHECK_THROWS_AS(FactSet({{"name", "  "}}), DataError);
}

TEST_CASE("raw fact tables keep the first duplicate and warn") {
  std::vector<std::string> warnings;
  const FactSet facts = FactSet::from_raw(
      {{"nationality", "Danish"}, {"name", "Niels"}, {"Nationality", "Dane"}},
      &warnings);
  REQUIRE(facts.size() == 2);
  CHECK(facts.find("nationality")->value == "Danish");
  CHECK(warnings.size() == 1);
}

TEST_CASE("slot keys reject markup") {
  CHECK_NOTHROW(validate_slot_key("birth_date"));
  CHECK_THROWS_AS(validate_slot_key("a[SLT]b"), MarkupError);
  CHECK_THROWS_AS(validate_slot_key("x [/SLT]"), MarkupError);
  CHECK_THROWS_AS(validate_slot_key("  "), MarkupError);
  CHECK(Slot(" name ").key() == "name");
}

TEST_CASE("template normalizes literals") {
  const Template tmpl({LiteralText{""}, Slot("name"), LiteralText{" is "},
                       LiteralText{"a "}, Slot("genre"), Slot("name"),
                       LiteralText{""}});
  REQUIRE(tmpl.segments().size() == 4);
  CHECK(std::get<LiteralText>(tmpl.segments()[1]).text == " is a ");
  CHECK(tmpl.slot_keys() == std::vector<std::string>{"name", "genre"});
  CHECK(tmpl.slot_count() == 3);
  CHECK(tmpl.has_slots());
  CHECK_FALSE(Template({LiteralText{"plain"}}).has_slots());
  CHECK_THROWS_AS(Template({LiteralText{"oops [SLT] x"}}), MarkupError);
}

TEST_CASE("record validation") {
  CorpusRecord record{"r1", Entity("Peter"), {"doc"}, "summary",
                      FactSet({{"name", "Peter"}}),
                      Template({Slot("name"), LiteralText{" plays"}}),
                      {}, Split::kTrain};
  CHECK_NOTHROW(record.validate());

  SUBCASE("template key without a fact") {
    record.golden_template = Template({Slot("genre")});
    CHECK_THROWS_AS(record.validate(), DataError);
    record.unmatched_slots = {"genre"};
    CHECK_NOTHROW(record.validate());
  }
  SUBCASE("blank id") {
    record.id = " ";
    CHECK_THROWS_AS(record.validate(), DataError);
  }
  SUBCASE("empty document") {
    record.documents.push_back("");
    CHECK_THROWS_AS(record.validate(), DataError);
  }
}

TEST_CASE("enum parsing") {
  CHECK(parse_strategy("discard") == Strategy::kDiscard);
  CHECK(parse_strategy("predict") == Strategy::kPredict);
  CHECK(parse_strategy("all_predict") == Strategy::kAllPredict);
  CHECK(parse_strategy("all-predict") == Strategy::kAllPredict);
  CHECK_THROWS_AS(parse_strategy("guess"), InvalidArgument);
  CHECK(to_string(Strategy::kAllPredict) == "all_predict");

  CHECK(parse_split("valid") == Split::kValid);
  CHECK(to_string(Split::kTest) == "test");
  CHECK_THROWS_AS(parse_split("dev"), DataError);
}

TEST_CASE("config delta bounds") {
  Config config;
  CHECK_NOTHROW(config.validate());
  config.delta = 1.0;
  CHECK_NOTHROW(config.validate());
  config.delta = 0.0;
  CHECK_THROWS_AS(config.validate(), InvalidArgument);
  config.delta = 1.5;
  CHECK_THROWS_AS(config.validate(), InvalidArgument);
}

}  // TEST_SUITE
