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

#include "guardgate/spanforge/merge.h"

#include <algorithm>

#include "guardgate/core/error.h"
#include "guardgate/core/unicode.h"

namespace guardgate::spanforge {

void MergePolicy::Validate() const {
  if (max_gap < 0 || max_gap > 8) {
    throw ConfigError("merge max_gap must be within [0, 8], got " +
                      std::to_string(max_gap));
  }
}

MergePolicy MergePolicy::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("merge_policy must be an object");
  MergePolicy policy;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "max_gap") {
        policy.max_gap = value.get<int>();
      } else if (key == "separators") {
        policy.separators = DecodeUtf8(value.get<std::string>());
      } else if (key == "mergeable_targets") {
        policy.mergeable_targets = value.get<std::set<std::string>>();
      } else {
        throw ConfigError("unknown merge_policy key: " + key);
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("merge_policy." + key + ": " + e.what());
    }
  }
  policy.Validate();
  return policy;
}

nlohmann::json MergePolicy::ToJson() const {
  return {{"max_gap", max_gap},
          {"separators", EncodeUtf8(separators)},
          {"mergeable_targets", mergeable_targets}};
}

std::vector<Span> MergeSpans(std::string_view text, std::vector<Span> spans,
                             const MergePolicy& policy) {
  if (spans.empty()) return spans;
  std::stable_sort(spans.begin(), spans.end(),
                   [](const Span& a, const Span& b) { return a.start < b.start; });
  const std::u32string cps = DecodeUtf8(text);

  auto bridgeable = [&](const Span& left, const Span& right) {
    if (left.label != right.label) return false;
    if (!policy.mergeable_targets.count(left.label)) return false;
    const int gap = right.start - left.end;
    if (gap > policy.max_gap) return false;
    for (int i = left.end; i < right.start; ++i) {
      if (i < 0 || i >= static_cast<int>(cps.size())) return false;
      if (policy.separators.find(cps[i]) == std::u32string::npos) return false;
    }
    return true;
  };

  std::vector<Span> out;
  Span current = std::move(spans.front());
  for (size_t i = 1; i < spans.size(); ++i) {
    Span& next = spans[i];
    if (bridgeable(current, next)) {
      current.end = std::max(current.end, next.end);
      current.score = std::max(current.score, next.score);
      current.source = SpanSource::kMerged;
    } else {
      out.push_back(std::move(current));
      current = std::move(next);
    }
  }
  out.push_back(std::move(current));
  return out;
}

}  // namespace guardgate::spanforge
