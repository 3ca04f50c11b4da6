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

#ifndef GUARDGATE_EVALKIT_RUNNER_H_
#define GUARDGATE_EVALKIT_RUNNER_H_

#include <string_view>
#include <vector>

#include "guardgate/core/schema.h"
#include "guardgate/evalkit/bench.h"
#include "guardgate/evalkit/strict_match.h"
#include "guardgate/scorer/backend.h"
#include "guardgate/spanforge/pipeline.h"

namespace guardgate::evalkit {

// kModel scores raw scorer spans; kPipeline runs them through rules, label
// mapping, arbitration and merging first.
enum class EvalMode { kModel, kPipeline };

EvalMode ParseEvalMode(std::string_view name);

struct RunnerOptions {
  EvalMode mode = EvalMode::kPipeline;
  // Entity types offered to the scorer; only entities are requested.
  GuardSchema schema = GuardSchema({}, DefaultGuardSchema().entity_types());
  spanforge::PipelineConfig pipeline;
  int batch_size = 32;
};

std::vector<Prediction> Predict(const std::vector<BenchExample>& examples,
                                scorer::ScorerBackend& backend,
                                const RunnerOptions& options);

EvalReport Evaluate(const std::vector<BenchExample>& examples,
                    scorer::ScorerBackend& backend,
                    const RunnerOptions& options);

}  // namespace guardgate::evalkit

#endif  // GUARDGATE_EVALKIT_RUNNER_H_
