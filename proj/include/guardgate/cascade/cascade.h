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

#ifndef GUARDGATE_CASCADE_CASCADE_H_
#define GUARDGATE_CASCADE_CASCADE_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "guardgate/core/schema.h"
#include "guardgate/core/verdict.h"
#include "guardgate/scorer/backend.h"

namespace guardgate::cascade {

// Sweep endpoint meaning "escalate everything": no confidence reaches it.
inline const double kEscalateAll = 1.0 + 1e-9;

struct LabeledText {
  std::string id;
  std::string text;
  std::string gold;  // "safe" or "unsafe"
};

// JSON lines of {"id", "text", "label"}. Throws LoadError.
std::vector<LabeledText> LoadLabeledTexts(const std::filesystem::path& path);

struct CascadePolicy {
  // Escalate iff the stage-1 confidence is strictly below tau. Values in
  // [0, 1], plus kEscalateAll.
  double tau = 0.9;
  std::string safety_task = "safety";
  // Bound on concurrent stage-2 requests.
  int max_in_flight = 8;

  void Validate() const;  // throws ConfigError
  static CascadePolicy FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

// {"safety": [safe, unsafe]}, the schema cascade stages are queried with.
GuardSchema SafetySchema(const std::string& task = "safety");

enum class Route { kAccept, kEscalate };

// Throws InvalidArgument when the verdict lacks the policy's safety task.
Route RouteVerdict(const GuardVerdict& verdict, const CascadePolicy& policy);

struct CascadeTracePoint {
  double tau = 0.0;
  double escalation_rate = 0.0;
  double combined_f1 = 0.0;
  int64_t stage2_calls = 0;
  // Escalations whose stage-2 call failed and fell back to stage 1.
  int64_t stage2_errors = 0;
};

CascadeTracePoint RunCascade(const std::vector<LabeledText>& examples,
                             scorer::ScorerBackend& stage1,
                             scorer::ScorerBackend& stage2,
                             const CascadePolicy& policy);

// 0.5, 0.7, 0.9, 0.95, 0.99.
std::vector<double> DefaultTaus();

// Stage 1 runs once for the whole sweep. Escalation sets are nested in tau,
// so each example reaches stage 2 at most once across the sweep; a point's
// stage2_calls is the count that point alone would have made. Throws
// InvalidArgument unless taus ascend.
std::vector<CascadeTracePoint> Sweep(const std::vector<LabeledText>& examples,
                                     scorer::ScorerBackend& stage1,
                                     scorer::ScorerBackend& stage2,
                                     const std::vector<double>& taus,
                                     const CascadePolicy& policy = {});

// "tau,escalation_rate,combined_f1,stage2_calls" plus one row per point.
std::string TraceToCsv(const std::vector<CascadeTracePoint>& trace);

}  // namespace guardgate::cascade

#endif  // GUARDGATE_CASCADE_CASCADE_H_
