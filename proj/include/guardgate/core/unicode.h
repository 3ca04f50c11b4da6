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

#ifndef GUARDGATE_CORE_UNICODE_H_
#define GUARDGATE_CORE_UNICODE_H_

#include <string>
#include <string_view>

namespace guardgate {

// All span offsets in this project count Unicode scalar values. These helpers
// convert between UTF-8 storage and code-point indexing. Invalid UTF-8 bytes
// decode to U+FFFD so offsets stay well defined on dirty input.
std::u32string DecodeUtf8(std::string_view utf8);
std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t cp, std::string* out);

// Number of code points in `utf8`.
int CodePointLength(std::string_view utf8);

// Code-point slice [start, end) of `utf8`, returned as UTF-8.
std::string Utf8Slice(std::string_view utf8, int start, int end);

// Number of UTF-16 code units needed for `text`.
int Utf16Length(std::u32string_view text);

// Simple case folding for ASCII and Cyrillic; other characters pass through.
char32_t FoldCase(char32_t c);
std::u32string FoldCase(std::u32string_view text);

bool IsSpace(char32_t c);
bool IsAsciiDigit(char32_t c);
bool IsAsciiAlnum(char32_t c);
// Letters or digits in the ranges we care about (Latin, Cyrillic, digits).
bool IsWordChar(char32_t c);

}  // namespace guardgate

#endif  // GUARDGATE_CORE_UNICODE_H_
