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

#ifndef GUARDGATE_SPANFORGE_ARBITRATE_H_
#define GUARDGATE_SPANFORGE_ARBITRATE_H_

#include <vector>

#include "guardgate/core/span.h"

namespace guardgate::spanforge {

// Combines deterministic and model spans. Rule spans are always kept.
// Model spans with a structured label are discarded (rules own those types),
// as are model spans overlapping any rule span. Remaining model overlaps are
// resolved greedily by higher score, then longer span, then smaller start.
// The result is sorted by start.
std::vector<Span> Arbitrate(const std::vector<Span>& rule_spans,
                            const std::vector<Span>& model_spans);

}  // namespace guardgate::spanforge

#endif  // GUARDGATE_SPANFORGE_ARBITRATE_H_
