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

#ifndef GUARDGATE_SCORER_REFERENCE_SCORER_H_
#define GUARDGATE_SCORER_REFERENCE_SCORER_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "guardgate/scorer/backend.h"
#include "guardgate/scorer/label_cache.h"

namespace guardgate::scorer {

// Deterministic stand-in for a trained encoder. Classification uses
// trigram cosine similarity between the text and each label name, softmaxed
// per single-label task. Entities are token-aligned candidate spans whose
// similarity to an entity type's "label description" exceeds the threshold,
// decoded greedily into non-overlapping spans.
class ReferenceScorer : public ScorerBackend {
 public:
  // `cache` may be null; label encodings are then rebuilt per call.
  explicit ReferenceScorer(ScorerConfig config = {},
                           std::shared_ptr<LabelCache> cache = nullptr);

  // Throws InvalidArgument for an empty schema.
  GuardVerdict Score(const std::string& text, const GuardSchema& schema) const;

  std::vector<GuardVerdict> ScoreBatch(std::span<const std::string> texts,
                                       const GuardSchema& schema) override;

  const ScorerConfig& config() const { return config_; }
  LabelCache* cache() const { return cache_.get(); }

 private:
  GuardVerdict ScoreWith(const std::string& text, const GuardSchema& schema,
                         const LabelEncoding& labels) const;
  std::shared_ptr<const LabelEncoding> Labels(const GuardSchema& schema) const;

  ScorerConfig config_;
  std::shared_ptr<LabelCache> cache_;
};

}  // namespace guardgate::scorer

#endif  // GUARDGATE_SCORER_REFERENCE_SCORER_H_
