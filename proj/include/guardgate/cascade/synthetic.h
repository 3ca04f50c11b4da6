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

#ifndef GUARDGATE_CASCADE_SYNTHETIC_H_
#define GUARDGATE_CASCADE_SYNTHETIC_H_

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "guardgate/cascade/cascade.h"
#include "guardgate/scorer/backend.h"

namespace guardgate::cascade {

// Answers the safety task from a fixed text -> (label, confidence) table;
// other tasks get uniform distributions. Unknown texts throw BackendError.
class ScriptedBackend : public scorer::ScorerBackend {
 public:
  // confidence must lie in (0.5, 1] so that `label` is the argmax.
  void Set(const std::string& text, const std::string& label, double confidence);

  std::vector<GuardVerdict> ScoreBatch(std::span<const std::string> texts,
                                       const GuardSchema& schema) override;

 private:
  std::map<std::string, std::pair<std::string, double>> table_;
};

// Counts ScoreBatch invocations and texts passed to the wrapped backend.
class CountingBackend : public scorer::ScorerBackend {
 public:
  explicit CountingBackend(scorer::ScorerBackend& inner) : inner_(inner) {}

  std::vector<GuardVerdict> ScoreBatch(std::span<const std::string> texts,
                                       const GuardSchema& schema) override;

  int64_t calls() const { return calls_.load(); }
  int64_t texts() const { return texts_.load(); }

 private:
  scorer::ScorerBackend& inner_;
  std::atomic<int64_t> calls_{0};
  std::atomic<int64_t> texts_{0};
};

// A labelled set with a calibrated-looking stage 1 (right with probability
// equal to its confidence), an imperfect stage 2 and a gold oracle.
struct SyntheticSet {
  std::vector<LabeledText> examples;
  std::shared_ptr<ScriptedBackend> stage1;
  std::shared_ptr<ScriptedBackend> stage2;
  std::shared_ptr<ScriptedBackend> oracle;
};

SyntheticSet MakeSyntheticSet(uint64_t seed, int size,
                              double stage2_accuracy = 0.9);

}  // namespace guardgate::cascade

#endif  // GUARDGATE_CASCADE_SYNTHETIC_H_
