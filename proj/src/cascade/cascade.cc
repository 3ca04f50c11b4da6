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

#include "guardgate/cascade/cascade.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "guardgate/core/error.h"
#include "guardgate/evalkit/metrics.h"

namespace guardgate::cascade {
namespace {

using nlohmann::json;

bool IsSafetyLabel(const std::string& s) { return s == "safe" || s == "unsafe"; }

struct Stage1 {
  std::vector<std::string> labels;
  std::vector<double> confidence;
};

Stage1 RunStage1(const std::vector<LabeledText>& examples,
                 scorer::ScorerBackend& stage1, const CascadePolicy& policy) {
  const GuardSchema schema = SafetySchema(policy.safety_task);
  std::vector<std::string> texts;
  texts.reserve(examples.size());
  for (const auto& e : examples) texts.push_back(e.text);
  constexpr size_t kBatch = 64;
  Stage1 out;
  for (size_t i = 0; i < texts.size(); i += kBatch) {
    size_t n = std::min(kBatch, texts.size() - i);
    auto verdicts = stage1.ScoreBatch(
        std::span<const std::string>(texts.data() + i, n), schema);
    if (verdicts.size() != n) {
      throw BackendError("stage 1 returned " + std::to_string(verdicts.size()) +
                         " verdicts for " + std::to_string(n) + " texts");
    }
    for (const auto& v : verdicts) {
      const ClassificationResult* r = v.Find(policy.safety_task);
      if (r == nullptr) {
        throw InvalidArgument("stage-1 verdict lacks task '" +
                              policy.safety_task + "'");
      }
      out.labels.push_back(r->predicted);
      out.confidence.push_back(r->confidence);
    }
  }
  return out;
}

// Fills answers[i] for every index in `todo`, at most `max_in_flight` calls
// at a time. A failed call leaves the slot empty.
void RunStage2(const std::vector<LabeledText>& examples,
               const std::vector<size_t>& todo, scorer::ScorerBackend& stage2,
               const CascadePolicy& policy,
               std::vector<std::optional<std::string>>& answers) {
  if (todo.empty()) return;
  const GuardSchema schema = SafetySchema(policy.safety_task);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < todo.size(); k = next++) {
      size_t i = todo[k];
      try {
        auto v = stage2.ScoreBatch(
            std::span<const std::string>(&examples[i].text, 1), schema);
        const ClassificationResult* r =
            v.size() == 1 ? v[0].Find(policy.safety_task) : nullptr;
        if (r != nullptr && IsSafetyLabel(r->predicted)) {
          answers[i] = r->predicted;
        }
      } catch (const std::exception&) {
        // Left empty: the caller falls back to stage 1.
      }
    }
  };
  size_t n = std::min<size_t>(policy.max_in_flight, todo.size());
  if (n <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

std::vector<std::string> Golds(const std::vector<LabeledText>& examples) {
  std::vector<std::string> g;
  g.reserve(examples.size());
  for (const auto& e : examples) g.push_back(e.gold);
  return g;
}

}  // namespace

std::vector<LabeledText> LoadLabeledTexts(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());
  std::vector<LabeledText> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string where = path.string() + ":" + std::to_string(lineno);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw LoadError(where + ": malformed JSON: " + e.what());
    }
    LabeledText t;
    try {
      t.id = j.at("id").get<std::string>();
      t.text = j.at("text").get<std::string>();
      t.gold = j.at("label").get<std::string>();
    } catch (const json::exception&) {
      throw LoadError(where + ": need string fields id, text, label");
    }
    if (!IsSafetyLabel(t.gold)) {
      throw LoadError(where + ": label must be safe or unsafe, got '" +
                      t.gold + "'");
    }
    out.push_back(std::move(t));
  }
  return out;
}

void CascadePolicy::Validate() const {
  if (!(tau >= 0.0 && (tau <= 1.0 || tau == kEscalateAll))) {
    throw ConfigError("tau must lie in [0, 1], got " + std::to_string(tau));
  }
  if (safety_task.empty()) throw ConfigError("safety_task must not be empty");
  if (max_in_flight < 1) throw ConfigError("max_in_flight must be >= 1");
}

CascadePolicy CascadePolicy::FromJson(const json& j) {
  if (!j.is_object()) throw ConfigError("cascade policy must be an object");
  CascadePolicy p;
  try {
    for (const auto& [k, v] : j.items()) {
      if (k == "tau") {
        p.tau = v.get<double>();
      } else if (k == "safety_task") {
        p.safety_task = v.get<std::string>();
      } else if (k == "max_in_flight") {
        p.max_in_flight = v.get<int>();
      } else {
        throw ConfigError("unknown cascade key '" + k + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad cascade policy: ") + e.what());
  }
  p.Validate();
  return p;
}

json CascadePolicy::ToJson() const {
  return {{"tau", tau},
          {"safety_task", safety_task},
          {"max_in_flight", max_in_flight}};
}

GuardSchema SafetySchema(const std::string& task) {
  return GuardSchema({{task, {"safe", "unsafe"}, false}}, {});
}

Route RouteVerdict(const GuardVerdict& verdict, const CascadePolicy& policy) {
  const ClassificationResult* r = verdict.Find(policy.safety_task);
  if (r == nullptr) {
    throw InvalidArgument("verdict lacks task '" + policy.safety_task + "'");
  }
  return r->confidence < policy.tau ? Route::kEscalate : Route::kAccept;
}

std::vector<double> DefaultTaus() { return {0.5, 0.7, 0.9, 0.95, 0.99}; }

std::vector<CascadeTracePoint> Sweep(const std::vector<LabeledText>& examples,
                                     scorer::ScorerBackend& stage1,
                                     scorer::ScorerBackend& stage2,
                                     const std::vector<double>& taus,
                                     const CascadePolicy& policy) {
  for (size_t i = 0; i < taus.size(); ++i) {
    CascadePolicy p = policy;
    p.tau = taus[i];
    p.Validate();
    if (i > 0 && !(taus[i - 1] < taus[i])) {
      throw InvalidArgument("taus must be strictly ascending");
    }
  }
  for (const auto& e : examples) {
    if (!IsSafetyLabel(e.gold)) {
      throw InvalidArgument("example " + e.id + ": bad gold label");
    }
  }
  policy.Validate();
  const Stage1 s1 = RunStage1(examples, stage1, policy);
  const std::vector<std::string> gold = Golds(examples);
  const size_t n = examples.size();

  std::vector<std::optional<std::string>> answers(n);
  std::vector<bool> asked(n, false);
  std::vector<CascadeTracePoint> trace;
  for (double tau : taus) {
    std::vector<size_t> todo;
    int64_t escalated = 0;
    for (size_t i = 0; i < n; ++i) {
      if (s1.confidence[i] >= tau) continue;
      ++escalated;
      if (!asked[i]) {
        asked[i] = true;
        todo.push_back(i);
      }
    }
    RunStage2(examples, todo, stage2, policy, answers);

    CascadeTracePoint pt;
    pt.tau = tau;
    pt.stage2_calls = escalated;
    std::vector<std::string> final_labels = s1.labels;
    for (size_t i = 0; i < n; ++i) {
      if (s1.confidence[i] >= tau) continue;
      if (answers[i]) {
        final_labels[i] = *answers[i];
      } else {
        ++pt.stage2_errors;
      }
    }
    pt.escalation_rate =
        n == 0 ? 0.0 : static_cast<double>(escalated) / static_cast<double>(n);
    pt.combined_f1 = evalkit::UnsafeF1(gold, final_labels);
    trace.push_back(pt);
  }
  return trace;
}

CascadeTracePoint RunCascade(const std::vector<LabeledText>& examples,
                             scorer::ScorerBackend& stage1,
                             scorer::ScorerBackend& stage2,
                             const CascadePolicy& policy) {
  return Sweep(examples, stage1, stage2, {policy.tau}, policy).front();
}

std::string TraceToCsv(const std::vector<CascadeTracePoint>& trace) {
  std::ostringstream out;
  out << "tau,escalation_rate,combined_f1,stage2_calls\n";
  char buf[128];
  for (const auto& p : trace) {
    if (p.tau == kEscalateAll) {
      out << "all";
    } else {
      std::snprintf(buf, sizeof(buf), "%.4g", p.tau);
      out << buf;
    }
    std::snprintf(buf, sizeof(buf), ",%.4f,%.4f,%lld\n", p.escalation_rate,
                  p.combined_f1, static_cast<long long>(p.stage2_calls));
    out << buf;
  }
  return out.str();
}

}  // namespace guardgate::cascade
