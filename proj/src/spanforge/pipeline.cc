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

#include "guardgate/spanforge/pipeline.h"

#include "guardgate/spanforge/arbitrate.h"

namespace guardgate::spanforge {

std::vector<Span> RunPipeline(std::string_view text,
                              const std::vector<Span>& model_spans,
                              const PipelineConfig& config) {
  const std::vector<Span> rule_spans =
      rulepii::DetectStructured(text, config.registry);
  const std::vector<Span> mapped = MapLabels(model_spans, config.label_map);
  return MergeSpans(text, Arbitrate(rule_spans, mapped), config.merge_policy);
}

}  // namespace guardgate::spanforge
