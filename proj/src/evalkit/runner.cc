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

#include "guardgate/evalkit/runner.h"

#include <algorithm>

#include "guardgate/core/error.h"

namespace guardgate::evalkit {

EvalMode ParseEvalMode(std::string_view name) {
  if (name == "model") return EvalMode::kModel;
  if (name == "pipeline") return EvalMode::kPipeline;
  throw InvalidArgument("unknown evaluation mode '" + std::string(name) +
                        "' (want model or pipeline)");
}

std::vector<Prediction> Predict(const std::vector<BenchExample>& examples,
                                scorer::ScorerBackend& backend,
                                const RunnerOptions& options) {
  if (options.batch_size < 1) throw InvalidArgument("batch_size must be >= 1");
  std::vector<Prediction> out;
  out.reserve(examples.size());
  for (size_t begin = 0; begin < examples.size(); begin += options.batch_size) {
    const size_t end = std::min(examples.size(), begin + options.batch_size);
    std::vector<std::string> texts;
    for (size_t i = begin; i < end; ++i) texts.push_back(examples[i].text);
    const auto verdicts = backend.ScoreBatch(texts, options.schema);
    for (size_t i = begin; i < end; ++i) {
      const auto& raw = verdicts[i - begin].entities;
      out.push_back({examples[i].id,
                     options.mode == EvalMode::kModel
                         ? raw
                         : spanforge::RunPipeline(examples[i].text, raw,
                                                  options.pipeline)});
    }
  }
  return out;
}

EvalReport Evaluate(const std::vector<BenchExample>& examples,
                    scorer::ScorerBackend& backend,
                    const RunnerOptions& options) {
  return StrictMatchF1(examples, Predict(examples, backend, options));
}

}  // namespace guardgate::evalkit
