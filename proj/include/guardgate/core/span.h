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

#ifndef GUARDGATE_CORE_SPAN_H_
#define GUARDGATE_CORE_SPAN_H_

#include <string>
#include <string_view>
#include <vector>

namespace guardgate {

enum class SpanSource { kRule, kModel, kMerged };

std::string_view SourceName(SpanSource source);
SpanSource ParseSource(std::string_view name);

// A labeled half-open region [start, end) of a text, in code points.
struct Span {
  int start = 0;
  int end = 0;
  std::string label;
  double score = 1.0;
  SpanSource source = SpanSource::kModel;

  int length() const { return end - start; }

  friend bool operator==(const Span&, const Span&) = default;
};

// True iff the two half-open intervals share at least one character.
bool SpansOverlap(const Span& a, const Span& b);

// 0 <= start < end <= text_length and score within [0, 1].
bool IsWellFormed(const Span& span, int text_length);

// Orders by (start, end, label).
bool SpanPositionLess(const Span& a, const Span& b);

// True iff no two spans in the list overlap.
bool PairwiseDisjoint(const std::vector<Span>& spans);

}  // namespace guardgate

#endif  // GUARDGATE_CORE_SPAN_H_
