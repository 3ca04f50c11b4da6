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

#include "guardgate/spanforge/arbitrate.h"

#include <algorithm>
#include <tuple>

#include "guardgate/rulepii/detector.h"

namespace guardgate::spanforge {

std::vector<Span> Arbitrate(const std::vector<Span>& rule_spans,
                            const std::vector<Span>& model_spans) {
  std::vector<Span> out = rule_spans;

  std::vector<const Span*> candidates;
  for (const Span& m : model_spans) {
    if (rulepii::IsStructuredLabel(m.label)) continue;
    const bool hits_rule =
        std::any_of(rule_spans.begin(), rule_spans.end(),
                    [&](const Span& r) { return SpansOverlap(r, m); });
    if (!hits_rule) candidates.push_back(&m);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Span* a, const Span* b) {
              return std::make_tuple(-a->score, -a->length(), a->start) <
                     std::make_tuple(-b->score, -b->length(), b->start);
            });
  std::vector<Span> kept;
  for (const Span* c : candidates) {
    const bool clash = std::any_of(kept.begin(), kept.end(), [&](const Span& k) {
      return SpansOverlap(k, *c);
    });
    if (!clash) kept.push_back(*c);
  }
  out.insert(out.end(), kept.begin(), kept.end());
  std::sort(out.begin(), out.end(), SpanPositionLess);
  return out;
}

}  // namespace guardgate::spanforge
