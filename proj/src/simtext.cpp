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

#include "slotsum/simtext.hpp"

#include <algorithm>
#include <cctype>

namespace slotsum {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string lowercase(std::string_view token) {
  std::string out(token);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// Exact rational (total - distance) / total, rounded once.
SimScore normalized(std::size_t distance, std::size_t total) {
  if (total == 0) return SimScore(1.0);
  return SimScore(static_cast<double>(total - distance) /
                  static_cast<double>(total));
}

}  // namespace

std::vector<TokenSpan> token_spans(std::string_view text) {
  std::vector<TokenSpan> spans;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i == text.size()) break;
    const std::size_t begin = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    spans.push_back({begin, i});
  }
  return spans;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  for (const auto& span : token_spans(text)) {
    tokens.push_back(lowercase(text.substr(span.begin, span.end - span.begin)));
  }
  return tokens;
}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      len = 1;
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4;
      cp = lead & 0x07;
    }
    bool valid = len > 0 && i + len <= text.size();
    for (std::size_t k = 1; valid && k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      valid = (cont & 0xC0) == 0x80;
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (!valid) {
      out.push_back(lead);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::size_t indel_distance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Rolling-row LCS over the shorter string.
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (char32_t ca : a) {
    std::size_t diagonal = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      row[j] = ca == b[j - 1] ? diagonal + 1 : std::max(row[j], row[j - 1]);
      diagonal = above;
    }
  }
  return a.size() + b.size() - 2 * row[b.size()];
}

std::size_t indel_distance(std::string_view a, std::string_view b) {
  return indel_distance(decode_utf8(a), decode_utf8(b));
}

std::string sorted_token_string(std::string_view text) {
  std::vector<std::string> tokens = tokenize(text);
  std::sort(tokens.begin(), tokens.end());
  std::string joined;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) joined.push_back(' ');
    joined += tokens[i];
  }
  return joined;
}

SimScore sorted_indel_sim(std::string_view a, std::string_view b) {
  const std::u32string sa = decode_utf8(sorted_token_string(a));
  const std::u32string sb = decode_utf8(sorted_token_string(b));
  return normalized(indel_distance(sa, sb), sa.size() + sb.size());
}

TokenSet token_set(std::string_view text) {
  std::vector<std::string> tokens = tokenize(text);
  return TokenSet(std::make_move_iterator(tokens.begin()),
                  std::make_move_iterator(tokens.end()));
}

SimScore jaccard(const TokenSet& a, const TokenSet& b) {
  if (a.empty() && b.empty()) return SimScore(1.0);
  std::size_t shared = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++shared;
      ++ia;
      ++ib;
    }
  }
  const std::size_t uni = a.size() + b.size() - shared;
  return SimScore(static_cast<double>(shared) / static_cast<double>(uni));
}

SimScore jaccard_bow(std::string_view a, std::string_view b) {
  return jaccard(token_set(a), token_set(b));
}

}  // namespace slotsum
