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

// Slot markup and golden template construction.
//
// A golden template is a reference summary in which every fact value that
// can be located (fuzzily) is replaced by "[SLT] key [/SLT]". Candidate
// locations are contiguous token windows; a fact is replaced only when its
// best window scores at least delta under sorted_indel_sim.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slotsum/types.hpp"

namespace slotsum {

// "[SLT] " + key + " [/SLT]". Throws MarkupError on an invalid key.
std::string make_slot_markup(std::string_view key);

struct SpanMatch {
  std::size_t start = 0;  // byte offsets into the summary, token aligned
  std::size_t end = 0;
  std::string matched_text;
  SimScore score;
  std::string fact_key;
};

// Best token window of `summary` for `value`. Window lengths range over
// [max(1, n - slack), n + slack] where n = |tokens(value)|. Ties go to the
// earlier start, then the shorter window. Returns nullopt for a summary with
// no tokens. Throws InvalidArgument if `value` is blank.
std::optional<SpanMatch> best_matching_span(std::string_view summary,
                                            std::string_view value,
                                            std::size_t slack);

struct TemplateBuildReport {
  std::vector<SpanMatch> replaced;  // sorted by start, non-overlapping
  std::vector<std::string> skipped_facts;
  std::vector<std::string> overlap_dropped;
};

struct GoldenTemplate {
  Template tmpl;
  std::string markup;
  TemplateBuildReport report;
};

GoldenTemplate build_golden_template(std::string_view summary,
                                     const FactSet& facts,
                                     const Config& config);

std::string to_markup(const Template& tmpl);

// Strict parse. Throws TemplateParseError on an unbalanced or nested
// delimiter, or an empty slot.
Template parse_template(std::string_view markup);

// Recovery parse: a malformed region becomes literal text with its stray
// delimiter tokens removed, and one warning per repair is appended.
Template parse_template_lenient(std::string_view markup,
                                std::vector<std::string>& warnings);

using FillValues = std::map<std::string, std::string, std::less<>>;

// Substitutes fills into the template. Missing keys render as empty. Where
// a slot renders empty, whitespace at the junction collapses to one space
// (none at either end of the text or before . , ; :). Text away from empty
// slots is reproduced verbatim.
std::string render(const Template& tmpl, const FillValues& fills);

}  // namespace slotsum
