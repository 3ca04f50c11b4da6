// Copyright 2026 The Guardgate Authors
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

#include "guardgate/scorer/tokenize.h"

#include <algorithm>
#include <string>

#include "guardgate/core/error.h"
#include "guardgate/core/unicode.h"

namespace guardgate::scorer {
namespace {

bool IsPunct(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  switch (c) {
    case U'«': case U'»': case U'\u2014': case U'\u2013': case U'…': case U'“':
    case U'”': case U'„': case U'№': case U'‘': case U'’':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<Token> Tokenize(std::u32string_view text) {
  std::vector<Token> tokens;
  const int n = static_cast<int>(text.size());
  int i = 0;
  while (i < n) {
    if (IsSpace(text[i]) || IsPunct(text[i])) {
      ++i;
      continue;
    }
    const int start = i;
    while (i < n && !IsSpace(text[i]) && !IsPunct(text[i])) ++i;
    tokens.push_back({start, i});
  }
  return tokens;
}

std::vector<CandidateSpan> EnumerateSpans(const std::vector<Token>& tokens,
                                          int max_width) {
  if (max_width < 1) throw InvalidArgument("max_span_width must be >= 1");
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].start >= tokens[i].end ||
        (i > 0 && tokens[i].start < tokens[i - 1].end)) {
      throw InvalidArgument("token boundaries must be strictly increasing");
    }
  }
  std::vector<CandidateSpan> out;
  const int n = static_cast<int>(tokens.size());
  out.reserve(static_cast<size_t>(CandidateCount(n, max_width)));
  for (int first = 0; first < n; ++first) {
    const int last_limit = std::min(n, first + max_width);
    for (int last = first; last < last_limit; ++last) {
      out.push_back({first, last, tokens[first].start, tokens[last].end});
    }
  }
  return out;
}

int64_t CandidateCount(int64_t n, int64_t max_width) {
  const int64_t w = std::min(n, max_width);
  if (w <= 0) return 0;
  // Σ_{k=1..w} (n - k + 1) = w(n + 1) - w(w + 1)/2.
  return w * (n + 1) - w * (w + 1) / 2;
}

}  // namespace guardgate::scorer
