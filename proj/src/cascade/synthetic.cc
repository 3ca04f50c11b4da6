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

#include "guardgate/cascade/synthetic.h"

#include <random>

#include "guardgate/core/error.h"

namespace guardgate::cascade {
namespace {

// Uniform in [0, 1) from one 64-bit draw, identical across standard libraries.
double Unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string Flip(const std::string& label) {
  return label == "safe" ? "unsafe" : "safe";
}

}  // namespace

void ScriptedBackend::Set(const std::string& text, const std::string& label,
                          double confidence) {
  if (label != "safe" && label != "unsafe") {
    throw InvalidArgument("scripted label must be safe or unsafe");
  }
  if (!(confidence > 0.5 && confidence <= 1.0)) {
    throw InvalidArgument("scripted confidence must lie in (0.5, 1]");
  }
  table_[text] = {label, confidence};
}

std::vector<GuardVerdict> ScriptedBackend::ScoreBatch(
    std::span<const std::string> texts, const GuardSchema& schema) {
  std::vector<GuardVerdict> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    auto it = table_.find(text);
    if (it == table_.end()) throw BackendError("no scripted answer for text");
    const auto& [label, confidence] = it->second;
    GuardVerdict v;
    for (const auto& task : schema.tasks()) {
      std::vector<double> probs(task.labels.size(),
                                1.0 / static_cast<double>(task.labels.size()));
      if (task.labels.size() == 2 && !task.multi_label &&
          (task.labels[0] == label || task.labels[1] == label)) {
        bool first = task.labels[0] == label;
        probs[0] = first ? confidence : 1.0 - confidence;
        probs[1] = first ? 1.0 - confidence : confidence;
      }
      v.classifications.push_back(MakeClassification(task, probs));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<GuardVerdict> CountingBackend::ScoreBatch(
    std::span<const std::string> texts, const GuardSchema& schema) {
  ++calls_;
  texts_ += static_cast<int64_t>(texts.size());
  return inner_.ScoreBatch(texts, schema);
}

SyntheticSet MakeSyntheticSet(uint64_t seed, int size,
                              double stage2_accuracy) {
  if (size < 0) throw InvalidArgument("size must be >= 0");
  if (!(stage2_accuracy >= 0.0 && stage2_accuracy <= 1.0)) {
    throw InvalidArgument("stage2_accuracy must lie in [0, 1]");
  }
  SyntheticSet set;
  set.stage1 = std::make_shared<ScriptedBackend>();
  set.stage2 = std::make_shared<ScriptedBackend>();
  set.oracle = std::make_shared<ScriptedBackend>();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < size; ++i) {
    LabeledText t;
    t.id = "syn-" + std::to_string(i);
    t.text = "synthetic item " + std::to_string(seed) + "/" + std::to_string(i);
    t.gold = Unit(rng) < 0.3 ? "unsafe" : "safe";
    // Confidence in (0.5, 1]; stage 1 is right with that probability.
    double conf = 1.0 - 0.4999 * Unit(rng);
    double u1 = Unit(rng);
    double u2 = Unit(rng);
    double conf2 = 1.0 - 0.2 * Unit(rng);
    set.stage1->Set(t.text, u1 < conf ? t.gold : Flip(t.gold), conf);
    set.stage2->Set(t.text, u2 < stage2_accuracy ? t.gold : Flip(t.gold),
                    conf2);
    set.oracle->Set(t.text, t.gold, 1.0);
    set.examples.push_back(std::move(t));
  }
  return set;
}

}  // namespace guardgate::cascade
