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

#ifndef GUARDGATE_SPANFORGE_LABEL_MAP_H_
#define GUARDGATE_SPANFORGE_LABEL_MAP_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "guardgate/core/span.h"

namespace guardgate::spanforge {

// The 13 canonical benchmark labels.
const std::vector<std::string>& CanonicalLabels();

// Maps raw model labels to canonical labels. A nullopt target means DROP.
// Labels with no entry are dropped too, with a warning logged once per label.
class LabelMap {
 public:
  // Model-ontology labels (person, city, card_number, ...) plus the identity
  // mapping for every canonical label.
  static LabelMap Defaults();
  // Object of model label -> canonical label or "DROP".
  static LabelMap FromJson(const nlohmann::json& j);

  LabelMap() = default;
  explicit LabelMap(std::map<std::string, std::optional<std::string>> entries);

  // Target for `label`; nullopt for DROP or unmapped.
  std::optional<std::string> Lookup(const std::string& label) const;
  bool Contains(const std::string& label) const;
  const std::map<std::string, std::optional<std::string>>& entries() const {
    return entries_;
  }
  nlohmann::json ToJson() const;

 private:
  std::map<std::string, std::optional<std::string>> entries_;
};

// Replaces each label by its canonical target and removes dropped spans.
// Offsets, scores and order are preserved.
std::vector<Span> MapLabels(const std::vector<Span>& spans, const LabelMap& map);

}  // namespace guardgate::spanforge

#endif  // GUARDGATE_SPANFORGE_LABEL_MAP_H_
