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

#ifndef GUARDGATE_RULEPII_DETECTOR_H_
#define GUARDGATE_RULEPII_DETECTOR_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "guardgate/core/span.h"

namespace guardgate::rulepii {

// The 11 structured labels that have deterministic detectors. NAME and
// ADDRESS are left to the model.
const std::vector<std::string>& StructuredLabels();
bool IsStructuredLabel(std::string_view label);

struct DetectorSpec {
  std::string label;
  // ECMAScript regular expression evaluated over code points.
  std::string pattern;
  bool requires_checksum = false;
  bool requires_context = false;
  // Matched case-insensitively within `context_window` characters on
  // either side of the candidate.
  std::vector<std::string> context_keywords;
  int context_window = 16;
};

struct ValidatorOutcome {
  std::string matched_text;
  bool format_valid = false;
  // nullopt when the label has no checksum.
  std::optional<bool> checksum_valid;
};

// Label-specific format and checksum check of a candidate match.
ValidatorOutcome ValidateCandidate(std::string_view label,
                                   std::string_view matched_text);

// Immutable set of compiled detectors. Safe to share across threads.
class DetectorRegistry {
 public:
  // The 11 built-in detectors.
  static DetectorRegistry Defaults();
  // Array of {label, pattern, requires_checksum, requires_context,
  // context_keywords, context_window}. Throws ConfigError.
  static DetectorRegistry FromJson(const nlohmann::json& specs);
  static DetectorRegistry FromFile(const std::filesystem::path& path);

  explicit DetectorRegistry(std::vector<DetectorSpec> specs);

  const std::vector<DetectorSpec>& specs() const { return specs_; }
  nlohmann::json ToJson() const;

 private:
  friend std::vector<Span> DetectStructured(std::string_view,
                                            const DetectorRegistry&);

  std::vector<DetectorSpec> specs_;
  std::vector<std::shared_ptr<const std::wregex>> compiled_;
  std::vector<std::vector<std::u32string>> folded_keywords_;
};

// Runs every detector over `text`. Output is sorted by start, pairwise
// non-overlapping (when detectors disagree the longer match wins, then the
// earlier one, then registry order), and every span has score 1.0 and
// source kRule. Offsets are code points.
std::vector<Span> DetectStructured(std::string_view text,
                                   const DetectorRegistry& registry);

}  // namespace guardgate::rulepii

#endif  // GUARDGATE_RULEPII_DETECTOR_H_
