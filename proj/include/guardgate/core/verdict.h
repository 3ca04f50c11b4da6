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

#ifndef GUARDGATE_CORE_VERDICT_H_
#define GUARDGATE_CORE_VERDICT_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "guardgate/core/schema.h"
#include "guardgate/core/span.h"

namespace guardgate {

using Millis = std::chrono::duration<double, std::milli>;

// Probabilities for one task, in schema label order.
struct ClassificationResult {
  std::string task;
  std::vector<std::pair<std::string, double>> distribution;
  std::string predicted;
  double confidence = 0.0;

  std::optional<double> Probability(std::string_view label) const;

  friend bool operator==(const ClassificationResult&,
                         const ClassificationResult&) = default;
};

// Builds a result from raw probabilities aligned with task.labels. The
// prediction is the argmax; ties go to the label listed first.
ClassificationResult MakeClassification(const ClassificationTask& task,
                                        const std::vector<double>& probs);

// Returns an error description, or nullopt when `result` satisfies the
// invariants for `task`: same label set in schema order, probabilities in
// [0,1], single-label distributions summing to 1 within 1e-6, predicted is
// the first-listed argmax and confidence is its probability.
std::optional<std::string> CheckClassification(
    const ClassificationResult& result, const ClassificationTask& task);

struct GuardVerdict {
  std::vector<ClassificationResult> classifications;
  std::vector<Span> entities;
  Millis scorer_latency{0};
  // Input exceeded the scorer's max_sequence_chars and was cut.
  bool truncated = false;

  const ClassificationResult* Find(std::string_view task) const;
};

// Equality of everything except scorer_latency.
bool SameContent(const GuardVerdict& a, const GuardVerdict& b);

// Checks one-result-per-task and every per-task invariant, plus span
// well-formedness against `text_length` (skipped when negative).
std::optional<std::string> CheckVerdict(const GuardVerdict& verdict,
                                        const GuardSchema& schema,
                                        int text_length = -1);

struct ModelCard {
  std::string name;
  int64_t param_count = 0;
};

}  // namespace guardgate

#endif  // GUARDGATE_CORE_VERDICT_H_
