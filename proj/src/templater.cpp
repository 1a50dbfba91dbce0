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

#include "slotsum/templater.hpp"

#include <algorithm>
#include <cctype>

#include "slotsum/errors.hpp"
#include "slotsum/simtext.hpp"

namespace slotsum {

std::string make_slot_markup(std::string_view key) {
  validate_slot_key(key);
  std::string out;
  out.reserve(key.size() + kSlotOpen.size() + kSlotClose.size() + 2);
  out += kSlotOpen;
  out += ' ';
  out += key;
  out += ' ';
  out += kSlotClose;
  return out;
}

namespace {

double score_sorted(const std::u32string& sorted_value,
                    std::string_view window) {
  const std::u32string sorted_window = decode_utf8(sorted_token_string(window));
  const std::size_t total = sorted_value.size() + sorted_window.size();
  if (total == 0) return 1.0;
  const std::size_t distance = indel_distance(sorted_value, sorted_window);
  return static_cast<double>(total - distance) / static_cast<double>(total);
}

}  // namespace

std::optional<SpanMatch> best_matching_span(std::string_view summary,
                                            std::string_view value,
                                            std::size_t slack) {
  const std::size_t n = tokenize(value).size();
  if (n == 0) throw InvalidArgument("fact value is blank");
  const std::vector<TokenSpan> spans = token_spans(summary);
  if (spans.empty()) return std::nullopt;

  const std::u32string sorted_value = decode_utf8(sorted_token_string(value));
  const std::size_t min_len = n > slack ? n - slack : 1;
  const std::size_t max_len = n + slack;

  std::optional<SpanMatch> best;
  double best_score = -1.0;
  for (std::size_t first = 0; first < spans.size(); ++first) {
    for (std::size_t len = min_len;
         len <= max_len && first + len <= spans.size(); ++len) {
      const std::size_t start = spans[first].begin;
      const std::size_t end = spans[first + len - 1].end;
      const std::string_view window = summary.substr(start, end - start);
      const double score = score_sorted(sorted_value, window);
      if (score > best_score) {
        best_score = score;
        best = SpanMatch{start, end, std::string(window), SimScore(score), {}};
      }
    }
  }
  return best;
}

GoldenTemplate build_golden_template(std::string_view summary,
                                     const FactSet& facts,
                                     const Config& config) {
  config.validate();
  GoldenTemplate result;
  TemplateBuildReport& report = result.report;

  struct Candidate {
    SpanMatch match;
    std::size_t value_chars;
  };
  std::vector<Candidate> candidates;
  for (const auto& fact : facts) {
    validate_slot_key(fact.key);
    auto match =
        best_matching_span(summary, fact.value, config.span_window_slack);
    if (!match || match->score.value() < config.delta) {
      report.skipped_facts.push_back(fact.key);
      continue;
    }
    match->fact_key = fact.key;
    candidates.push_back({std::move(*match), decode_utf8(fact.value).size()});
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.match.score != b.match.score) {
                       return a.match.score > b.match.score;
                     }
                     if (a.value_chars != b.value_chars) {
                       return a.value_chars > b.value_chars;
                     }
                     return a.match.fact_key < b.match.fact_key;
                   });
  for (auto& candidate : candidates) {
    const bool overlaps = std::any_of(
        report.replaced.begin(), report.replaced.end(),
        [&](const SpanMatch& kept) {
          return candidate.match.start < kept.end &&
                 kept.start < candidate.match.end;
        });
    if (overlaps) {
      report.overlap_dropped.push_back(candidate.match.fact_key);
    } else {
      report.replaced.push_back(std::move(candidate.match));
    }
  }
  std::sort(report.replaced.begin(), report.replaced.end(),
            [](const SpanMatch& a, const SpanMatch& b) {
              return a.start < b.start;
            });

  std::vector<Segment> segments;
  std::size_t cursor = 0;
  for (const auto& span : report.replaced) {
    segments.emplace_back(
        LiteralText{std::string(summary.substr(cursor, span.start - cursor))});
    segments.emplace_back(Slot(span.fact_key));
    cursor = span.end;
  }
  segments.emplace_back(LiteralText{std::string(summary.substr(cursor))});
  result.tmpl = Template(std::move(segments));
  result.markup = to_markup(result.tmpl);
  return result;
}

std::string to_markup(const Template& tmpl) {
  std::string out;
  for (const auto& segment : tmpl.segments()) {
    if (const auto* literal = std::get_if<LiteralText>(&segment)) {
      out += literal->text;
    } else {
      out += make_slot_markup(std::get<Slot>(segment).key());
    }
  }
  return out;
}

namespace {

Template parse_markup(std::string_view markup,
                      std::vector<std::string>* warnings) {
  const bool strict = warnings == nullptr;
  std::vector<Segment> segments;
  std::string literal;
  constexpr std::size_t kClosed = std::string_view::npos;
  std::size_t open_at = kClosed;
  std::string inner;

  auto flush_literal = [&] {
    if (!literal.empty()) segments.emplace_back(LiteralText{literal});
    literal.clear();
  };
  auto warn = [&](const std::string& what, std::size_t offset) {
    warnings->push_back(what + " at offset " + std::to_string(offset) +
                        "; kept as literal text");
  };

  std::size_t i = 0;
  while (i < markup.size()) {
    const std::string_view rest = markup.substr(i);
    if (rest.starts_with(kSlotOpen)) {
      if (open_at != kClosed) {
        if (strict) throw TemplateParseError("nested [SLT]", i);
        warn("nested [SLT]", open_at);
        literal += inner;
        inner.clear();
      }
      open_at = i;
      i += kSlotOpen.size();
      continue;
    }
    if (rest.starts_with(kSlotClose)) {
      if (open_at == kClosed) {
        if (strict) throw TemplateParseError("unmatched [/SLT]", i);
        warn("unmatched [/SLT]", i);
        i += kSlotClose.size();
        continue;
      }
      const std::string key = trim(inner);
      if (key.empty()) {
        if (strict) throw TemplateParseError("empty slot", open_at);
        warn("empty slot", open_at);
        literal += inner;
      } else {
        flush_literal();
        segments.emplace_back(Slot(key));
      }
      inner.clear();
      open_at = kClosed;
      i += kSlotClose.size();
      continue;
    }
    (open_at != kClosed ? inner : literal).push_back(markup[i]);
    ++i;
  }
  if (open_at != kClosed) {
    if (strict) throw TemplateParseError("unclosed [SLT]", open_at);
    warn("unclosed [SLT]", open_at);
    literal += inner;
  }
  flush_literal();
  return Template(std::move(segments));
}

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool attaches_left(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':';
}

}  // namespace

Template parse_template(std::string_view markup) {
  return parse_markup(markup, nullptr);
}

Template parse_template_lenient(std::string_view markup,
                                std::vector<std::string>& warnings) {
  return parse_markup(markup, &warnings);
}

std::string render(const Template& tmpl, const FillValues& fills) {
  std::string out;
  bool in_gap = false;
  bool gap_had_space = false;

  for (const auto& segment : tmpl.segments()) {
    std::string_view text;
    if (const auto* literal = std::get_if<LiteralText>(&segment)) {
      text = literal->text;
    } else {
      const auto it = fills.find(std::get<Slot>(segment).key());
      if (it != fills.end()) text = it->second;
      if (text.empty()) {
        if (!in_gap) {
          in_gap = true;
          gap_had_space = false;
        }
        while (!out.empty() && is_space(out.back())) {
          out.pop_back();
          gap_had_space = true;
        }
        continue;
      }
    }
    if (in_gap) {
      std::size_t lead = 0;
      while (lead < text.size() && is_space(text[lead])) ++lead;
      gap_had_space = gap_had_space || lead > 0;
      text.remove_prefix(lead);
      if (text.empty()) continue;
      if (!out.empty() && gap_had_space && !attaches_left(text.front())) {
        out.push_back(' ');
      }
      in_gap = false;
    }
    out += text;
  }
  return out;
}

}  // namespace slotsum
