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
#include <set>

#include "slotsum/errors.hpp"
#include "slotsum/templater.hpp"
#include "support/oracles.hpp"

using namespace slotsum;

namespace {

Config at_delta(double delta) {
  Config config;
  config.delta = delta;
  return config;
}

// Summary built from unique random words with some facts planted verbatim.
struct Planted {
  std::string summary;
  std::vector<FactPair> facts;
};

Planted plant(oracle::Gen& gen, std::size_t n_facts) {
  std::set<std::string> used;
  auto fresh = [&] {
    for (;;) {
      auto w = gen.word();
      if (used.insert(w).second) return w;
    }
  };
  Planted out;
  std::vector<std::string> pieces;
  for (std::size_t i = 0; i < n_facts; ++i) {
    std::string value = fresh();
    const std::size_t extra = gen.below(3);
    for (std::size_t k = 0; k < extra; ++k) value += " " + fresh();
    out.facts.push_back({"key" + std::to_string(i), value});
    pieces.push_back(value);
    const std::size_t filler = 1 + gen.below(3);
    for (std::size_t k = 0; k < filler; ++k) pieces.push_back(fresh());
  }
  std::shuffle(pieces.begin(), pieces.end(), gen.engine());
  for (const auto& p : pieces) out.summary += (out.summary.empty() ? "" : " ") + p;
  if (gen.coin()) out.summary += " .";
  return out;
}

}  // namespace

TEST_SUITE("templater") {

TEST_CASE("slot markup") {
  CHECK(make_slot_markup("name") == "[SLT] name [/SLT]");
  CHECK(make_slot_markup("birth_date") == "[SLT] birth_date [/SLT]");
  CHECK_THROWS_AS(make_slot_markup("a[SLT]b"), MarkupError);
}

TEST_CASE("best matching span examples") {
  const auto exact = best_matching_span("born in 1984 in sweden", "1984", 2);
  REQUIRE(exact);
  CHECK(exact->matched_text == "1984");
  CHECK(exact->score.value() == 1.0);
  CHECK(exact->start == 8);
  CHECK(exact->end == 12);

  CHECK_FALSE(best_matching_span("", "x", 2));
  CHECK_THROWS_AS(best_matching_span("abc", "  ", 2), InvalidArgument);

  const std::string summary = "marc muniesa martinez plays soccer";
  const std::string value = "muniesa martinez , marc";
  const auto fuzzy = best_matching_span(summary, value, 2);
  const auto expected = oracle::best_window(summary, value, 2);
  REQUIRE(fuzzy);
  CHECK(expected.text == "marc muniesa martinez");
  CHECK(fuzzy->matched_text == expected.text);
  CHECK(fuzzy->score.value() ==
        doctest::Approx(expected.score).epsilon(1e-12));
}

TEST_CASE("span ties prefer the earlier then shorter window") {
  const auto tie = best_matching_span("red blue red", "red", 0);
  REQUIRE(tie);
  CHECK(tie->start == 0);
  CHECK(tie->end == 3);
}

TEST_CASE("best matching span agrees with window enumeration") {
  oracle::Gen gen(21);
  for (int i = 0; i < 400; ++i) {
    std::string summary;
    const std::size_t n = gen.below(9);
    for (std::size_t k = 0; k < n; ++k) {
      summary += (k ? " " : "") + gen.string_over("abc", 3) + "x";
    }
    const std::string value = gen.string_over("abc", 2) + "x " +
                              (gen.coin() ? gen.string_over("abc", 3) + "x" : "");
    const std::size_t slack = gen.below(3);
    const auto got = best_matching_span(summary, value, slack);
    const auto want = oracle::best_window(summary, value, slack);
    if (want.score < 0) {
      CHECK_FALSE(got);
      continue;
    }
    REQUIRE(got);
    INFO(summary, " | ", value, " | slack ", slack);
    CHECK(got->matched_text == want.text);
    CHECK(got->score.value() == doctest::Approx(want.score).epsilon(1e-12));
    CHECK(summary.substr(got->start, got->end - got->start) == got->matched_text);
  }
}

TEST_CASE("golden template examples") {
  const auto both = build_golden_template(
      "peter wichers is a swedish guitarist",
      FactSet({{"name", "peter wichers"}, {"nationality", "swedish"}}),
      at_delta(0.8));
  CHECK(both.markup == "[SLT] name [/SLT] is a [SLT] nationality [/SLT] guitarist");
  CHECK(both.report.replaced.size() == 2);
  CHECK(both.report.skipped_facts.empty());

  const auto none = build_golden_template(
      "he lives abroad", FactSet({{"name", "peter wichers"}}), at_delta(0.8));
  CHECK(none.markup == "he lives abroad");
  CHECK(none.report.skipped_facts == std::vector<std::string>{"name"});
  CHECK(oracle::best_window("he lives abroad", "peter wichers", 2).score < 0.8);

  const auto empty = build_golden_template("any summary at all", FactSet(),
                                           at_delta(0.8));
  REQUIRE(empty.tmpl.segments().size() == 1);
  CHECK(std::get<LiteralText>(empty.tmpl.segments()[0]).text ==
        "any summary at all");
}

TEST_CASE("overlapping matches keep the stronger fact") {
  const auto built = build_golden_template(
      "john smith was born in paris",
      FactSet({{"fullname", "john smith jr"}, {"name", "john smith"}}),
      at_delta(0.7));
  CHECK(built.markup == "[SLT] name [/SLT] was born in paris");
  CHECK(built.report.overlap_dropped == std::vector<std::string>{"fullname"});

  // Equal scores: the longer value wins, then the smaller key.
  const auto tied = build_golden_template(
      "alpha beta", FactSet({{"k2", "beta alpha"}, {"k1", "alpha beta"}}),
      at_delta(0.8));
  CHECK(tied.markup == "[SLT] k1 [/SLT]");
  CHECK(tied.report.overlap_dropped == std::vector<std::string>{"k2"});
}

TEST_CASE("report partitions fact keys and spans never overlap") {
  oracle::Gen gen(22);
  for (int i = 0; i < 300; ++i) {
    std::string summary = gen.phrase(10);
    std::vector<FactPair> facts;
    const std::size_t n = gen.below(5);
    for (std::size_t k = 0; k < n; ++k) {
      const auto words = oracle::words(summary);
      std::string value;
      if (!words.empty() && gen.coin()) {
        const std::size_t s = gen.below(words.size());
        value = words[s];
        if (s + 1 < words.size() && gen.coin()) value += " " + words[s + 1];
      } else {
        value = gen.word();
      }
      facts.push_back({"k" + std::to_string(k), value});
    }
    const double delta = 0.5 + 0.1 * static_cast<double>(gen.below(6));
    const auto built = build_golden_template(summary, FactSet(facts),
                                             at_delta(delta));
    std::multiset<std::string> seen;
    for (const auto& s : built.report.replaced) seen.insert(s.fact_key);
    for (const auto& k : built.report.skipped_facts) seen.insert(k);
    for (const auto& k : built.report.overlap_dropped) seen.insert(k);
    std::multiset<std::string> keys;
    for (const auto& f : facts) keys.insert(f.key);
    REQUIRE(seen == keys);
    for (std::size_t k = 1; k < built.report.replaced.size(); ++k) {
      REQUIRE(built.report.replaced[k - 1].end <= built.report.replaced[k].start);
    }
    for (const auto& s : built.report.replaced) REQUIRE(s.score.value() >= delta);
  }
}

TEST_CASE("raising delta never adds replacements") {
  oracle::Gen gen(23);
  for (int i = 0; i < 200; ++i) {
    const std::string summary = gen.phrase(8);
    std::vector<FactPair> facts;
    for (std::size_t k = 0; k < 3; ++k) {
      facts.push_back({"k" + std::to_string(k), gen.phrase(2) + " x"});
    }
    const FactSet fs(facts);
    std::size_t previous = SIZE_MAX;
    for (double delta : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
      const auto count =
          build_golden_template(summary, fs, at_delta(delta)).report.replaced.size();
      REQUIRE(count <= previous);
      previous = count;
    }
  }
}

TEST_CASE("round trip on verbatim facts") {
  oracle::Gen gen(24);
  for (int i = 0; i < 500; ++i) {
    const Planted p = plant(gen, 1 + gen.below(4));
    const FactSet facts(p.facts);
    const auto built = build_golden_template(p.summary, facts, at_delta(0.8));
    REQUIRE(built.report.replaced.size() == p.facts.size());
    FillValues fills;
    for (const auto& f : facts) fills.emplace(f.key, f.value);
    REQUIRE(render(built.tmpl, fills) == p.summary);
  }
}

TEST_CASE("parse template") {
  const auto tmpl = parse_template("[SLT] name [/SLT] is an artist");
  REQUIRE(tmpl.segments().size() == 2);
  CHECK(std::get<Slot>(tmpl.segments()[0]).key() == "name");
  CHECK(std::get<LiteralText>(tmpl.segments()[1]).text == " is an artist");

  const auto plain = parse_template("plain text");
  REQUIRE(plain.segments().size() == 1);
  CHECK(std::get<LiteralText>(plain.segments()[0]).text == "plain text");

  CHECK(parse_template("").segments().empty());
  CHECK(parse_template("[SLT]birth_date[/SLT]").slot_keys() ==
        std::vector<std::string>{"birth_date"});
}

TEST_CASE("parse errors carry offsets") {
  auto offset_of = [](std::string_view markup) -> long {
    try {
      parse_template(markup);
    } catch (const TemplateParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("[SLT] name is") == 0);
  CHECK(offset_of("ab [/SLT]") == 3);
  CHECK(offset_of("[SLT] a [SLT] b [/SLT]") == 8);
  CHECK(offset_of("x [SLT]  [/SLT]") == 2);
  CHECK_THROWS_AS(parse_template("[SLT] name is"), DataError);
}

TEST_CASE("lenient parse keeps text and warns") {
  std::vector<std::string> warnings;
  const auto tmpl = parse_template_lenient("[SLT] name is", warnings);
  CHECK(warnings.size() == 1);
  CHECK(tmpl.slot_count() == 0);
  CHECK(to_markup(tmpl) == " name is");

  warnings.clear();
  const auto mixed =
      parse_template_lenient("a [/SLT] [SLT] k [/SLT] b", warnings);
  CHECK(warnings.size() == 1);
  CHECK(mixed.slot_keys() == std::vector<std::string>{"k"});
  CHECK(to_markup(mixed) == "a  [SLT] k [/SLT] b");
}

TEST_CASE("markup round trip on generated templates") {
  oracle::Gen gen(25);
  for (int i = 0; i < 500; ++i) {
    std::vector<Segment> segments;
    const std::size_t n = gen.below(6);
    for (std::size_t k = 0; k < n; ++k) {
      if (gen.coin()) {
        segments.emplace_back(Slot(gen.word()));
      } else {
        segments.emplace_back(LiteralText{gen.string_over("ab .,", 6)});
      }
    }
    const Template tmpl(segments);
    REQUIRE(parse_template(to_markup(tmpl)) == tmpl);
  }
}

TEST_CASE("render") {
  const Template tmpl({Slot("name"), LiteralText{" is swedish"}});
  CHECK(render(tmpl, {{"name", "peter"}}) == "peter is swedish");
  CHECK(render(tmpl, {{"name", ""}}) == "is swedish");
  CHECK(render(tmpl, {}) == "is swedish");

  const auto mid = parse_template("a [SLT] x [/SLT] b");
  CHECK(render(mid, {}) == "a b");
  const auto tail = parse_template("born in [SLT] place [/SLT] .");
  CHECK(render(tail, {}) == "born in.");
  CHECK(render(tail, {{"place", "Oslo"}}) == "born in Oslo .");
  const auto pair = parse_template("x [SLT] a [/SLT] [SLT] b [/SLT] , y");
  CHECK(render(pair, {}) == "x, y");
  CHECK(render(pair, {{"b", "B"}}) == "x B , y");
  const auto spaced = parse_template("keep  this  [SLT] a [/SLT]");
  CHECK(render(spaced, {}) == "keep  this");
}

}  // TEST_SUITE
