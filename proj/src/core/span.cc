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

#include "guardgate/core/span.h"

#include <algorithm>
#include <tuple>

#include "guardgate/core/error.h"

namespace guardgate {

std::string_view SourceName(SpanSource source) {
  switch (source) {
    case SpanSource::kRule:
      return "rule";
    case SpanSource::kModel:
      return "model";
    case SpanSource::kMerged:
      return "merged";
  }
  return "model";
}

SpanSource ParseSource(std::string_view name) {
  if (name == "rule") return SpanSource::kRule;
  if (name == "model") return SpanSource::kModel;
  if (name == "merged") return SpanSource::kMerged;
  throw InvalidArgument("unknown span source: " + std::string(name));
}

bool SpansOverlap(const Span& a, const Span& b) {
  return std::max(a.start, b.start) < std::min(a.end, b.end);
}

bool IsWellFormed(const Span& span, int text_length) {
  return span.start >= 0 && span.start < span.end &&
         span.end <= text_length && span.score >= 0.0 && span.score <= 1.0;
}

bool SpanPositionLess(const Span& a, const Span& b) {
  return std::tie(a.start, a.end, a.label) < std::tie(b.start, b.end, b.label);
}

bool PairwiseDisjoint(const std::vector<Span>& spans) {
  std::vector<const Span*> sorted;
  sorted.reserve(spans.size());
  for (const Span& s : spans) sorted.push_back(&s);
  std::sort(sorted.begin(), sorted.end(),
            [](const Span* a, const Span* b) { return a->start < b->start; });
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i]->start < sorted[i - 1]->end) return false;
  }
  return true;
}

}  // namespace guardgate
