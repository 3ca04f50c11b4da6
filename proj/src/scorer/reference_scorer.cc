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

#include "guardgate/scorer/reference_scorer.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <tuple>

#include "guardgate/core/error.h"
#include "guardgate/core/unicode.h"
#include "guardgate/scorer/tokenize.h"

namespace guardgate::scorer {
namespace {

// Softmax temperature over cosine similarities.
constexpr double kTemperature = 0.1;

std::vector<double> Softmax(const std::vector<double>& logits) {
  const double mx = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp((logits[i] - mx) / kTemperature);
    sum += out[i];
  }
  for (double& p : out) p /= sum;
  return out;
}

}  // namespace

void ScorerConfig::Validate() const {
  if (max_span_width < 1) throw InvalidArgument("max_span_width must be >= 1");
  if (max_sequence_chars < 1) {
    throw InvalidArgument("max_sequence_chars must be >= 1");
  }
  if (!(score_threshold >= 0.0 && score_threshold <= 1.0)) {
    throw InvalidArgument("score_threshold must be within [0, 1]");
  }
}

ReferenceScorer::ReferenceScorer(ScorerConfig config,
                                 std::shared_ptr<LabelCache> cache)
    : config_(config), cache_(std::move(cache)) {
  config_.Validate();
}

std::shared_ptr<const LabelEncoding> ReferenceScorer::Labels(
    const GuardSchema& schema) const {
  if (cache_) return CachedLabelEncode(schema, *cache_);
  return std::make_shared<const LabelEncoding>(EncodeLabels(schema));
}

GuardVerdict ReferenceScorer::Score(const std::string& text,
                                    const GuardSchema& schema) const {
  if (schema.empty()) throw InvalidArgument("schema has no tasks or entities");
  const auto start = std::chrono::steady_clock::now();
  GuardVerdict verdict = ScoreWith(text, schema, *Labels(schema));
  verdict.scorer_latency = std::chrono::steady_clock::now() - start;
  return verdict;
}

std::vector<GuardVerdict> ReferenceScorer::ScoreBatch(
    std::span<const std::string> texts, const GuardSchema& schema) {
  if (schema.empty()) throw InvalidArgument("schema has no tasks or entities");
  const auto start = std::chrono::steady_clock::now();
  const auto labels = Labels(schema);
  std::vector<GuardVerdict> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) {
    out.push_back(ScoreWith(text, schema, *labels));
  }
  const Millis elapsed = std::chrono::steady_clock::now() - start;
  for (auto& v : out) v.scorer_latency = elapsed;
  return out;
}

GuardVerdict ReferenceScorer::ScoreWith(const std::string& text,
                                        const GuardSchema& schema,
                                        const LabelEncoding& labels) const {
  GuardVerdict verdict;
  std::u32string cps = DecodeUtf8(text);
  if (static_cast<int>(cps.size()) > config_.max_sequence_chars) {
    cps.resize(config_.max_sequence_chars);
    verdict.truncated = true;
  }

  const SparseProfile profile = TrigramProfile(cps);
  for (size_t t = 0; t < schema.tasks().size(); ++t) {
    const ClassificationTask& task = schema.tasks()[t];
    std::vector<double> sims;
    for (const DenseProfile& label : labels.task_labels[t]) {
      sims.push_back(Cosine(profile, label));
    }
    verdict.classifications.push_back(
        MakeClassification(task, task.multi_label ? sims : Softmax(sims)));
  }

  if (schema.entity_types().empty()) return verdict;
  const std::vector<Token> tokens = Tokenize(cps);
  std::vector<Span> candidates;
  for (const CandidateSpan& c : EnumerateSpans(tokens, config_.max_span_width)) {
    const SparseProfile span_profile =
        TrigramProfile(std::u32string_view(cps).substr(c.start, c.end - c.start));
    for (size_t e = 0; e < labels.entities.size(); ++e) {
      const double s = Cosine(span_profile, labels.entities[e]);
      if (s > config_.score_threshold) {
        candidates.push_back(Span{c.start, c.end, schema.entity_types()[e].label,
                                  s, SpanSource::kModel});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Span& a, const Span& b) {
              return std::make_tuple(-a.score, a.start, -a.length(), a.label) <
                     std::make_tuple(-b.score, b.start, -b.length(), b.label);
            });
  for (Span& c : candidates) {
    const bool clash =
        std::any_of(verdict.entities.begin(), verdict.entities.end(),
                    [&](const Span& k) { return SpansOverlap(k, c); });
    if (!clash) verdict.entities.push_back(std::move(c));
  }
  std::sort(verdict.entities.begin(), verdict.entities.end(), SpanPositionLess);
  return verdict;
}

}  // namespace guardgate::scorer
