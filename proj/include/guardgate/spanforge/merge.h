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

#ifndef GUARDGATE_SPANFORGE_MERGE_H_
#define GUARDGATE_SPANFORGE_MERGE_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "guardgate/core/span.h"

namespace guardgate::spanforge {

struct MergePolicy {
  // Longest gap (in characters) that may be bridged. At most 8.
  int max_gap = 3;
  // Characters allowed inside a bridged gap.
  std::u32string separators = U" ,.-/";
  std::set<std::string> mergeable_targets = {"ADDRESS", "NAME"};

  static MergePolicy FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
  // Throws ConfigError when max_gap is outside [0, 8].
  void Validate() const;
};

// Consolidates fragments: consecutive spans (by start) that share a
// mergeable label and are separated only by up to max_gap separator
// characters become one span covering the run, with the highest score of
// its parts and source kMerged. Other spans pass through unchanged.
std::vector<Span> MergeSpans(std::string_view text, std::vector<Span> spans,
                             const MergePolicy& policy);

}  // namespace guardgate::spanforge

#endif  // GUARDGATE_SPANFORGE_MERGE_H_
