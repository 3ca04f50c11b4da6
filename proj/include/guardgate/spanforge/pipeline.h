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

#ifndef GUARDGATE_SPANFORGE_PIPELINE_H_
#define GUARDGATE_SPANFORGE_PIPELINE_H_

#include <string_view>
#include <vector>

#include <json.hpp>

#include "guardgate/core/span.h"
#include "guardgate/rulepii/detector.h"
#include "guardgate/spanforge/label_map.h"
#include "guardgate/spanforge/merge.h"

namespace guardgate::spanforge {

struct PipelineConfig {
  rulepii::DetectorRegistry registry = rulepii::DetectorRegistry::Defaults();
  LabelMap label_map = LabelMap::Defaults();
  MergePolicy merge_policy;
};

// detect_structured -> map_labels -> arbitrate -> merge_spans. The result
// is sorted and pairwise non-overlapping.
std::vector<Span> RunPipeline(std::string_view text,
                              const std::vector<Span>& model_spans,
                              const PipelineConfig& config);

}  // namespace guardgate::spanforge

#endif  // GUARDGATE_SPANFORGE_PIPELINE_H_
