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

#include "guardgate/core/verdict.h"

#include <cmath>
#include <set>

#include "guardgate/core/error.h"

namespace guardgate {
namespace {

constexpr double kSumTolerance = 1e-6;

}  // namespace

std::optional<double> ClassificationResult::Probability(
    std::string_view label) const {
  for (const auto& [name, p] : distribution) {
    if (name == label) return p;
  }
  return std::nullopt;
}

ClassificationResult MakeClassification(const ClassificationTask& task,
                                        const std::vector<double>& probs) {
  if (probs.size() != task.labels.size()) {
    throw InvalidArgument("probability count does not match labels of task " +
                          task.name);
  }
  ClassificationResult result;
  result.task = task.name;
  size_t best = 0;
  for (size_t i = 0; i < probs.size(); ++i) {
    result.distribution.emplace_back(task.labels[i], probs[i]);
    if (probs[i] > probs[best]) best = i;
  }
  result.predicted = task.labels[best];
  result.confidence = probs[best];
  return result;
}

std::optional<std::string> CheckClassification(
    const ClassificationResult& result, const ClassificationTask& task) {
  if (result.task != task.name) {
    return "result task '" + result.task + "' does not match '" + task.name +
           "'";
  }
  if (result.distribution.size() != task.labels.size()) {
    return "task " + task.name + ": distribution has " +
           std::to_string(result.distribution.size()) + " labels, schema has " +
           std::to_string(task.labels.size());
  }
  double sum = 0.0;
  size_t best = 0;
  for (size_t i = 0; i < task.labels.size(); ++i) {
    const auto& [label, p] = result.distribution[i];
    if (label != task.labels[i]) {
      return "task " + task.name + ": unexpected label '" + label + "'";
    }
    if (!(p >= 0.0 && p <= 1.0)) {
      return "task " + task.name + ": probability out of [0,1] for " + label;
    }
    sum += p;
    if (p > result.distribution[best].second) best = i;
  }
  if (task.multi_label) return std::nullopt;
  if (std::fabs(sum - 1.0) > kSumTolerance) {
    return "task " + task.name + ": probabilities sum to " +
           std::to_string(sum);
  }
  if (result.predicted != task.labels[best]) {
    return "task " + task.name + ": predicted '" + result.predicted +
           "' is not the argmax";
  }
  if (result.confidence != result.distribution[best].second) {
    return "task " + task.name + ": confidence differs from argmax probability";
  }
  return std::nullopt;
}

const ClassificationResult* GuardVerdict::Find(std::string_view task) const {
  for (const auto& c : classifications) {
    if (c.task == task) return &c;
  }
  return nullptr;
}

bool SameContent(const GuardVerdict& a, const GuardVerdict& b) {
  return a.classifications == b.classifications && a.entities == b.entities &&
         a.truncated == b.truncated;
}

std::optional<std::string> CheckVerdict(const GuardVerdict& verdict,
                                        const GuardSchema& schema,
                                        int text_length) {
  const auto& tasks = schema.tasks();
  if (verdict.classifications.size() != tasks.size()) {
    return "expected " + std::to_string(tasks.size()) +
           " classification results, got " +
           std::to_string(verdict.classifications.size());
  }
  for (size_t i = 0; i < tasks.size(); ++i) {
    if (auto err = CheckClassification(verdict.classifications[i], tasks[i])) {
      return err;
    }
  }
  std::set<std::string> labels;
  for (const auto& e : schema.entity_types()) labels.insert(e.label);
  for (const auto& span : verdict.entities) {
    const int bound = text_length < 0 ? span.end : text_length;
    if (!IsWellFormed(span, bound)) {
      return "malformed entity span [" + std::to_string(span.start) + "," +
             std::to_string(span.end) + ")";
    }
    if (!labels.count(span.label)) {
      return "entity label '" + span.label + "' is not in the schema";
    }
  }
  return std::nullopt;
}

}  // namespace guardgate
