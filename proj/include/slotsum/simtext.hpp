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

// String similarity used for fuzzy fact matching and corpus alignment.
//
// Two metrics live here:
//
//   sorted_indel_sim  token-sort both strings, then 1 - L / (len(a) + len(b))
//                     where L is the character-level Indel distance
//                     (insertions and deletions only) between the
//                     space-joined sorted token strings.
//   jaccard_bow       |A n B| / |A u B| over the token sets.
//
// Tokens are whitespace-delimited and lowercased (ASCII only; other bytes
// pass through). Punctuation stays attached to its token. Character lengths
// count Unicode code points; invalid UTF-8 bytes count as one character each.

#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slotsum/types.hpp"

namespace slotsum {

std::vector<std::string> tokenize(std::string_view text);

// Byte range [begin, end) of one whitespace-delimited token.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Spans of the tokens tokenize() would produce, in the original text.
std::vector<TokenSpan> token_spans(std::string_view text);

std::u32string decode_utf8(std::string_view text);

// Minimum number of single-character insertions and deletions turning a
// into b, i.e. len(a) + len(b) - 2 * LCS(a, b).
std::size_t indel_distance(std::u32string_view a, std::u32string_view b);
std::size_t indel_distance(std::string_view a, std::string_view b);

// Lowercased tokens sorted by code point and joined with single spaces.
std::string sorted_token_string(std::string_view text);

// Both-empty inputs score 1.
SimScore sorted_indel_sim(std::string_view a, std::string_view b);

using TokenSet = std::set<std::string>;
TokenSet token_set(std::string_view text);

// Both-empty inputs score 1.
SimScore jaccard(const TokenSet& a, const TokenSet& b);
SimScore jaccard_bow(std::string_view a, std::string_view b);

}  // namespace slotsum
