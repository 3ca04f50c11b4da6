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

#ifndef GUARDGATE_SCORER_BACKEND_H_
#define GUARDGATE_SCORER_BACKEND_H_

#include <span>
#include <string>
#include <vector>

#include "guardgate/core/schema.h"
#include "guardgate/core/verdict.h"

namespace guardgate::scorer {

struct ScorerConfig {
  // Longest candidate span, in tokens.
  int max_span_width = 12;
  // Longer inputs are truncated and flagged.
  int max_sequence_chars = 2048;
  // Minimum score for an entity span to be emitted.
  double score_threshold = 0.5;

  // Throws InvalidArgument on out-of-range fields.
  void Validate() const;
};

// A schema-conditioned scorer. One ScoreBatch call produces, for every
// text, a result for each classification task and all entity spans.
// Implementations must tolerate concurrent calls.
class ScorerBackend {
 public:
  virtual ~ScorerBackend() = default;

  virtual std::vector<GuardVerdict> ScoreBatch(
      std::span<const std::string> texts, const GuardSchema& schema) = 0;
};

}  // namespace guardgate::scorer

#endif  // GUARDGATE_SCORER_BACKEND_H_
