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

#ifndef GUARDGATE_SCORER_TOKENIZE_H_
#define GUARDGATE_SCORER_TOKENIZE_H_

#include <cstdint>
#include <string_view>
#include <vector>

namespace guardgate::scorer {

// Code-point range [start, end) of one token.
struct Token {
  int start = 0;
  int end = 0;
};

// Splits on whitespace and punctuation; punctuation characters are dropped.
std::vector<Token> Tokenize(std::u32string_view text);

struct CandidateSpan {
  int first_token = 0;
  int last_token = 0;  // inclusive
  int start = 0;
  int end = 0;
};

// All token-aligned spans of 1..max_width tokens, ordered by first token
// then width. Throws InvalidArgument if tokens are not strictly increasing
// and non-empty, or if max_width < 1.
std::vector<CandidateSpan> EnumerateSpans(const std::vector<Token>& tokens,
                                          int max_width);

// Sum over k = 1..min(W, n) of (n - k + 1).
int64_t CandidateCount(int64_t n, int64_t max_width);

}  // namespace guardgate::scorer

#endif  // GUARDGATE_SCORER_TOKENIZE_H_
