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

// Heuristic extractive backend. Everything here is a pure function of the
// request so the pipeline can run, and be tested, without model weights.

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>

#include "slotsum/backend.hpp"
#include "slotsum/errors.hpp"
#include "slotsum/simtext.hpp"
#include "slotsum/templater.hpp"

namespace slotsum {

namespace {

constexpr std::size_t kMaxWindow = 5;

struct Sentence {
  std::string_view text;
  std::vector<std::string> surface;  // original tokens
  std::vector<std::string> lower;    // tokenize() form
};

bool ends_sentence(std::string_view token) {
  const char last = token.back();
  return last == '.' || last == '!' || last == '?';
}

std::vector<Sentence> split_sentences(std::string_view document) {
  std::vector<Sentence> sentences;
  const auto spans = token_spans(document);
  std::size_t first = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const std::string_view token =
        document.substr(spans[i].begin, spans[i].end - spans[i].begin);
    if (!ends_sentence(token) && i + 1 < spans.size()) continue;
    Sentence sentence;
    sentence.text = document.substr(spans[first].begin,
                                    spans[i].end - spans[first].begin);
    for (std::size_t k = first; k <= i; ++k) {
      sentence.surface.emplace_back(
          document.substr(spans[k].begin, spans[k].end - spans[k].begin));
    }
    sentence.lower = tokenize(sentence.text);
    sentences.push_back(std::move(sentence));
    first = i + 1;
  }
  return sentences;
}

bool is_edge_punct(char c) {
  return std::string_view(".,;:!?()[]\"'").find(c) != std::string_view::npos;
}

std::string strip_edges(std::string_view token) {
  while (!token.empty() && is_edge_punct(token.front())) token.remove_prefix(1);
  while (!token.empty() && is_edge_punct(token.back())) token.remove_suffix(1);
  return std::string(token);
}

std::string join_window(const std::vector<std::string>& surface,
                        std::size_t first, std::size_t len) {
  std::string out;
  for (std::size_t k = first; k < first + len; ++k) {
    if (!out.empty()) out.push_back(' ');
    out += surface[k];
  }
  // Trim punctuation at the window edges only.
  std::size_t begin = 0;
  std::size_t end = out.size();
  while (begin < end && is_edge_punct(out[begin])) ++begin;
  while (end > begin && is_edge_punct(out[end - 1])) --end;
  return trim(std::string_view(out).substr(begin, end - begin));
}

bool has_digit(std::string_view token) {
  return std::any_of(token.begin(), token.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

bool is_month(std::string_view token) {
  static constexpr std::array<std::string_view, 24> kMonths = {
      "january", "february", "march",     "april",   "may",      "june",
      "july",    "august",   "september", "october", "november", "december",
      "jan",     "feb",      "mar",       "apr",     "jun",      "jul",
      "aug",     "sep",      "sept",      "oct",     "nov",      "dec"};
  return std::find(kMonths.begin(), kMonths.end(), token) != kMonths.end();
}

// Digits, month names, and bare connectors ("," "-" or punctuation only).
bool is_date_like(const std::string& lower) {
  const std::string core = strip_edges(lower);
  return core.empty() || core == "-" || has_digit(core) || is_month(core);
}

bool is_date_anchor(const std::string& lower) {
  const std::string core = strip_edges(lower);
  return has_digit(core) || is_month(core);
}

std::string extract_date(const Sentence& sentence) {
  const auto& tokens = sentence.lower;
  std::size_t best_first = 0;
  std::size_t best_len = 0;
  for (std::size_t first = 0; first < tokens.size(); ++first) {
    if (!is_date_anchor(tokens[first])) continue;
    bool any_digit = false;
    for (std::size_t len = 1;
         len <= kMaxWindow && first + len <= tokens.size(); ++len) {
      const std::string& last = tokens[first + len - 1];
      if (!is_date_like(last)) break;
      any_digit = any_digit || has_digit(last);
      if (any_digit && is_date_anchor(last) && len > best_len) {
        best_first = first;
        best_len = len;
      }
    }
  }
  if (best_len == 0) return {};
  return join_window(sentence.surface, best_first, best_len);
}

std::string extract_name(const Sentence& sentence, std::string_view name) {
  double best_score = 0.0;
  std::size_t best_first = 0;
  std::size_t best_len = 0;
  for (std::size_t first = 0; first < sentence.surface.size(); ++first) {
    for (std::size_t len = 1;
         len <= kMaxWindow && first + len <= sentence.surface.size(); ++len) {
      const double score =
          sorted_indel_sim(name, join_window(sentence.surface, first, len))
              .value();
      if (score > best_score) {
        best_score = score;
        best_first = first;
        best_len = len;
      }
    }
  }
  if (best_len == 0) return {};
  return join_window(sentence.surface, best_first, best_len);
}

bool is_stopword(std::string_view token) {
  static constexpr std::array<std::string_view, 29> kStop = {
      "a",    "an",   "the",   "and",  "or",   "but",  "who",  "which",
      "that", "is",   "was",   "are",  "were", "he",   "she",  "it",
      "they", "his",  "her",   "for",  "in",   "on",   "at",   "from",
      "with", "since", "by",   "of",   "to"};
  return std::find(kStop.begin(), kStop.end(), token) != kStop.end();
}

std::string extract_after_cue(const Sentence& sentence,
                              const std::vector<std::string>& cues,
                              std::size_t max_tokens) {
  std::vector<std::string> words;
  for (const auto& token : sentence.lower) words.push_back(strip_edges(token));

  // Earliest cue occurrence; the longer cue wins at the same position.
  std::optional<std::size_t> cue_start;
  std::size_t cue_len = 0;
  for (const auto& cue : cues) {
    const std::vector<std::string> cue_words = tokenize(cue);
    if (cue_words.empty()) continue;
    const auto hit = std::search(words.begin(), words.end(), cue_words.begin(),
                                 cue_words.end());
    if (hit == words.end()) continue;
    const auto at = static_cast<std::size_t>(hit - words.begin());
    if (!cue_start || at < *cue_start ||
        (at == *cue_start && cue_words.size() > cue_len)) {
      cue_start = at;
      cue_len = cue_words.size();
    }
  }
  if (!cue_start) return {};

  std::size_t len = 0;
  const std::size_t first = *cue_start + cue_len;
  while (first + len < words.size() && len < max_tokens) {
    const std::string& word = words[first + len];
    if (word.empty() || is_stopword(word)) break;
    ++len;
    const std::string& raw = sentence.surface[first + len - 1];
    if (is_edge_punct(raw.back())) break;
  }
  if (len == 0) return {};
  return join_window(sentence.surface, first, len);
}

enum class ExtractKind { kEntityName, kDate, kAfterCue };

struct CueEntry {
  std::string_view key;
  ExtractKind kind;
  std::vector<std::string> cues;
  std::size_t max_tokens;
};

const std::vector<CueEntry>& cue_lexicon() {
  static const std::vector<CueEntry> kLexicon = {
      {"name", ExtractKind::kEntityName, {}, kMaxWindow},
      {"fullname", ExtractKind::kEntityName, {}, kMaxWindow},
      {"birth_date", ExtractKind::kDate, {}, kMaxWindow},
      {"death_date", ExtractKind::kDate, {}, kMaxWindow},
      {"birth_place", ExtractKind::kAfterCue, {"born in", "born at"}, 3},
      {"death_place", ExtractKind::kAfterCue, {"died in", "died at"}, 3},
      {"nationality",
       ExtractKind::kAfterCue,
       {"is a", "was a", "is an", "was an"},
       1},
      {"occupation",
       ExtractKind::kAfterCue,
       {"is a", "was a", "is an", "was an"},
       kMaxWindow},
      {"position",
       ExtractKind::kAfterCue,
       {"plays as a", "played as a", "plays as an", "played as an", "as a"},
       2},
      {"currentclub",
       ExtractKind::kAfterCue,
       {"currently plays for", "plays for"},
       kMaxWindow},
      {"clubs", ExtractKind::kAfterCue, {"played for", "plays for"}, kMaxWindow},
      {"genre", ExtractKind::kAfterCue, {"genre", "genres"}, 3},
  };
  return kLexicon;
}

std::vector<std::string> key_words(std::string_view key) {
  std::string spaced = normalize_key(key);
  std::replace(spaced.begin(), spaced.end(), '_', ' ');
  return tokenize(spaced);
}

}  // namespace

BackendResponse extractive_baseline_slot(const BackendRequest& request,
                                         const BaselineOptions& options) {
  if (request.task != BackendTask::kSlot || !request.slot_key) {
    throw InvalidArgument("extractive_baseline_slot needs a slot request");
  }
  const std::string key = normalize_key(*request.slot_key);

  TokenSet query = token_set(request.entity_name);
  for (auto& word : key_words(key)) query.insert(std::move(word));

  std::vector<Sentence> sentences;
  for (const auto& document : request.documents) {
    for (auto& sentence : split_sentences(document)) {
      sentences.push_back(std::move(sentence));
    }
  }
  const Sentence* best = nullptr;
  double best_overlap = 0.0;
  for (const auto& sentence : sentences) {
    const TokenSet words(sentence.lower.begin(), sentence.lower.end());
    const double overlap = jaccard(words, query).value();
    if (overlap > best_overlap) {
      best_overlap = overlap;
      best = &sentence;
    }
  }
  BackendResponse response;
  response.backend_id = kBaselineId;
  if (best == nullptr) return response;

  const auto words = key_words(key);
  const bool date_key = std::any_of(words.begin(), words.end(), [](auto& w) {
    return w == "date" || w == "year";
  });

  const CueEntry* entry = nullptr;
  double entry_score = 0.0;
  for (const auto& candidate : cue_lexicon()) {
    const double score = sorted_indel_sim(key, candidate.key).value();
    if (score > entry_score) {
      entry_score = score;
      entry = &candidate;
    }
  }
  if (entry_score < options.delta) entry = nullptr;

  if (date_key || (entry && entry->kind == ExtractKind::kDate)) {
    response.output = extract_date(*best);
  } else if (entry && entry->kind == ExtractKind::kEntityName) {
    response.output = extract_name(*best, request.entity_name);
  } else if (entry) {
    response.output = extract_after_cue(*best, entry->cues, entry->max_tokens);
  } else {
    std::string own_cue;
    for (const auto& word : words) own_cue += (own_cue.empty() ? "" : " ") + word;
    response.output = extract_after_cue(*best, {own_cue}, 3);
  }
  return response;
}

BackendResponse extractive_baseline_template(const BackendRequest& request,
                                             const BaselineOptions& options) {
  if (request.task != BackendTask::kTemplate) {
    throw InvalidArgument("extractive_baseline_template needs a template "
                          "request");
  }
  if (request.documents.empty()) {
    throw BackendError(BackendErrorKind::kBadRequest,
                       "template request without documents");
  }
  const TokenSet name_words = token_set(request.entity_name);
  std::size_t best_doc = 0;
  double best_overlap = -1.0;
  for (std::size_t i = 0; i < request.documents.size(); ++i) {
    const double overlap =
        jaccard(token_set(request.documents[i]), name_words).value();
    if (overlap > best_overlap) {
      best_overlap = overlap;
      best_doc = i;
    }
  }
  BackendResponse response;
  response.backend_id = kBaselineId;
  const auto sentences = split_sentences(request.documents[best_doc]);
  if (sentences.empty()) return response;

  const std::string_view first = sentences.front().text;
  std::string output(first);
  if (!tokenize(request.entity_name).empty()) {
    const auto match =
        best_matching_span(first, request.entity_name, options.slack);
    if (match && match->score.value() >= options.delta) {
      output = std::string(first.substr(0, match->start)) +
               make_slot_markup("name") +
               std::string(first.substr(match->end));
    }
  }
  response.output = std::move(output);
  return response;
}

}  // namespace slotsum
