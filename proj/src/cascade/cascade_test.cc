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

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <gtest/gtest.h>

#include "guardgate/cascade/cascade.h"
#include "guardgate/cascade/synthetic.h"
#include "guardgate/core/error.h"
#include "guardgate/evalkit/metrics.h"

namespace guardgate::cascade {
namespace {

GuardVerdict SafetyVerdict(const std::string& label, double confidence) {
  ScriptedBackend b;
  b.Set("x", label, confidence);
  std::vector<std::string> texts = {"x"};
  return b.ScoreBatch(texts, SafetySchema()).front();
}

TEST(RouteTest, StrictThreshold) {
  CascadePolicy p;
  p.tau = 0.8;
  EXPECT_EQ(RouteVerdict(SafetyVerdict("safe", 0.79), p), Route::kEscalate);
  EXPECT_EQ(RouteVerdict(SafetyVerdict("safe", 0.8), p), Route::kAccept);
  EXPECT_EQ(RouteVerdict(SafetyVerdict("unsafe", 0.95), p), Route::kAccept);
  p.tau = 0.0;
  EXPECT_EQ(RouteVerdict(SafetyVerdict("safe", 0.51), p), Route::kAccept);
  p.tau = kEscalateAll;
  EXPECT_EQ(RouteVerdict(SafetyVerdict("safe", 1.0), p), Route::kEscalate);
}

TEST(RouteTest, MissingTaskIsError) {
  CascadePolicy p;
  p.safety_task = "toxicity";
  EXPECT_THROW(RouteVerdict(SafetyVerdict("safe", 0.9), p), InvalidArgument);
}

TEST(PolicyTest, Validation) {
  CascadePolicy p;
  p.tau = -0.1;
  EXPECT_THROW(p.Validate(), ConfigError);
  p.tau = 1.5;
  EXPECT_THROW(p.Validate(), ConfigError);
  p.tau = 1.0;
  EXPECT_NO_THROW(p.Validate());
  p.max_in_flight = 0;
  EXPECT_THROW(p.Validate(), ConfigError);
  EXPECT_THROW(CascadePolicy::FromJson({{"tau", 0.5}, {"bogus", 1}}),
               ConfigError);
  auto q = CascadePolicy::FromJson({{"tau", 0.7}, {"max_in_flight", 3}});
  EXPECT_EQ(q.tau, 0.7);
  EXPECT_EQ(q.max_in_flight, 3);
  EXPECT_EQ(CascadePolicy::FromJson(q.ToJson()).ToJson(), q.ToJson());
}

// Four items; stage 1 is wrong only on the one it is unsure about.
TEST(CascadeTest, OracleFixesLowConfidenceItem) {
  std::vector<LabeledText> ex = {{"a", "t1", "unsafe"},
                                 {"b", "t2", "safe"},
                                 {"c", "t3", "unsafe"},
                                 {"d", "t4", "safe"}};
  ScriptedBackend s1, oracle;
  s1.Set("t1", "unsafe", 0.95);
  s1.Set("t2", "safe", 0.9);
  s1.Set("t3", "safe", 0.6);  // wrong
  s1.Set("t4", "safe", 0.99);
  for (const auto& e : ex) oracle.Set(e.text, e.gold, 1.0);

  CascadePolicy p;
  p.tau = 0.0;
  auto none = RunCascade(ex, s1, oracle, p);
  EXPECT_DOUBLE_EQ(none.combined_f1, 2.0 / 3.0);
  EXPECT_EQ(none.stage2_calls, 0);

  p.tau = 0.7;
  auto pt = RunCascade(ex, s1, oracle, p);
  EXPECT_DOUBLE_EQ(pt.combined_f1, 1.0);
  EXPECT_DOUBLE_EQ(pt.escalation_rate, 0.25);
  EXPECT_EQ(pt.stage2_calls, 1);
  EXPECT_EQ(pt.stage2_errors, 0);
}

TEST(CascadeTest, CallAccounting) {
  auto set = MakeSyntheticSet(7, 400);
  for (double tau : {0.0, 0.6, 0.8, 0.95, 1.0, kEscalateAll}) {
    CountingBackend s2(*set.oracle);
    CountingBackend s1(*set.stage1);
    CascadePolicy p;
    p.tau = tau;
    auto pt = RunCascade(set.examples, s1, s2, p);
    int64_t expect = 0;
    std::vector<std::string> texts;
    for (const auto& e : set.examples) texts.push_back(e.text);
    auto v = set.stage1->ScoreBatch(texts, SafetySchema());
    for (const auto& x : v) expect += x.classifications[0].confidence < tau;
    EXPECT_EQ(pt.stage2_calls, expect) << tau;
    EXPECT_EQ(s2.calls(), expect) << tau;
    EXPECT_EQ(s2.texts(), expect) << tau;
    EXPECT_EQ(s1.texts(), 400);
  }
}

// Independent recomputation of a point with an oracle second stage.
double OracleCombinedF1(const SyntheticSet& set, double tau) {
  std::vector<std::string> gold, pred;
  for (const auto& e : set.examples) {
    std::vector<std::string> one = {e.text};
    auto c = set.stage1->ScoreBatch(one, SafetySchema())[0].classifications[0];
    gold.push_back(e.gold);
    pred.push_back(c.confidence < tau ? e.gold : c.predicted);
  }
  return evalkit::UnsafeF1(gold, pred);
}

TEST(SweepTest, MatchesIndependentRecomputation) {
  auto set = MakeSyntheticSet(11, 300);
  auto taus = DefaultTaus();
  auto trace = Sweep(set.examples, *set.stage1, *set.oracle, taus);
  ASSERT_EQ(trace.size(), taus.size());
  for (size_t i = 0; i < taus.size(); ++i) {
    EXPECT_EQ(trace[i].tau, taus[i]);
    EXPECT_DOUBLE_EQ(trace[i].combined_f1, OracleCombinedF1(set, taus[i]));
  }
}

TEST(SweepTest, MonotoneEscalationAndOracleF1) {
  std::vector<double> taus = {0.0, 0.5, 0.55, 0.6, 0.7, 0.8, 0.9,
                              0.95, 0.99, 1.0, kEscalateAll};
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    auto set = MakeSyntheticSet(seed, 40 + static_cast<int>(seed % 7) * 23);
    auto trace = Sweep(set.examples, *set.stage1, *set.oracle, taus);
    for (size_t i = 1; i < trace.size(); ++i) {
      EXPECT_GE(trace[i].escalation_rate, trace[i - 1].escalation_rate);
      EXPECT_GE(trace[i].stage2_calls, trace[i - 1].stage2_calls);
      EXPECT_GE(trace[i].combined_f1, trace[i - 1].combined_f1) << seed;
    }
    EXPECT_EQ(trace.back().escalation_rate, 1.0);
    EXPECT_EQ(trace.back().combined_f1, 1.0);
  }
}

TEST(SweepTest, EndpointsEqualSingleStages) {
  auto set = MakeSyntheticSet(3, 500);
  std::vector<std::string> texts, gold, p1, p2;
  for (const auto& e : set.examples) {
    texts.push_back(e.text);
    gold.push_back(e.gold);
  }
  for (const auto& v : set.stage1->ScoreBatch(texts, SafetySchema()))
    p1.push_back(v.classifications[0].predicted);
  for (const auto& v : set.stage2->ScoreBatch(texts, SafetySchema()))
    p2.push_back(v.classifications[0].predicted);
  auto trace = Sweep(set.examples, *set.stage1, *set.stage2,
                     {0.0, 0.9, kEscalateAll});
  EXPECT_EQ(trace.front().escalation_rate, 0.0);
  EXPECT_EQ(trace.front().combined_f1, evalkit::UnsafeF1(gold, p1));
  EXPECT_EQ(trace.back().escalation_rate, 1.0);
  EXPECT_EQ(trace.back().combined_f1, evalkit::UnsafeF1(gold, p2));
}

TEST(SweepTest, StageOneRunsOnceAndStageTwoAtMostOncePerItem) {
  auto set = MakeSyntheticSet(5, 200);
  CountingBackend s1(*set.stage1);
  CountingBackend s2(*set.stage2);
  auto trace = Sweep(set.examples, s1, s2, DefaultTaus());
  EXPECT_EQ(s1.texts(), 200);
  EXPECT_EQ(s2.texts(), trace.back().stage2_calls);
}

TEST(SweepTest, RejectsUnsortedTaus) {
  auto set = MakeSyntheticSet(5, 10);
  EXPECT_THROW(Sweep(set.examples, *set.stage1, *set.oracle, {0.9, 0.5}),
               InvalidArgument);
  EXPECT_THROW(Sweep(set.examples, *set.stage1, *set.oracle, {0.5, 0.5}),
               InvalidArgument);
  EXPECT_THROW(Sweep(set.examples, *set.stage1, *set.oracle, {2.0}),
               ConfigError);
}

class FlakyBackend : public scorer::ScorerBackend {
 public:
  explicit FlakyBackend(scorer::ScorerBackend& inner) : inner_(inner) {}
  std::vector<GuardVerdict> ScoreBatch(std::span<const std::string> texts,
                                       const GuardSchema& schema) override {
    if (texts.size() == 1 && texts[0].back() % 3 == 0) {
      throw RetriableError("connection reset");
    }
    return inner_.ScoreBatch(texts, schema);
  }

 private:
  scorer::ScorerBackend& inner_;
};

TEST(CascadeTest, StageTwoFailureFallsBack) {
  auto set = MakeSyntheticSet(9, 300);
  FlakyBackend flaky(*set.oracle);
  CascadePolicy p;
  p.tau = kEscalateAll;
  auto pt = RunCascade(set.examples, *set.stage1, flaky, p);
  int64_t failing = 0;
  std::vector<std::string> gold, pred;
  std::vector<std::string> texts;
  for (const auto& e : set.examples) texts.push_back(e.text);
  auto v1 = set.stage1->ScoreBatch(texts, SafetySchema());
  for (size_t i = 0; i < texts.size(); ++i) {
    bool fails = texts[i].back() % 3 == 0;
    failing += fails;
    gold.push_back(set.examples[i].gold);
    pred.push_back(fails ? v1[i].classifications[0].predicted
                         : set.examples[i].gold);
  }
  ASSERT_GT(failing, 0);
  EXPECT_EQ(pt.stage2_errors, failing);
  EXPECT_EQ(pt.stage2_calls, 300);
  EXPECT_DOUBLE_EQ(pt.combined_f1, evalkit::UnsafeF1(gold, pred));
}

// Records peak concurrency inside stage 2.
class GateBackend : public scorer::ScorerBackend {
 public:
  explicit GateBackend(scorer::ScorerBackend& inner) : inner_(inner) {}
  std::vector<GuardVerdict> ScoreBatch(std::span<const std::string> texts,
                                       const GuardSchema& schema) override {
    int now = ++active_;
    {
      std::lock_guard<std::mutex> lock(mu_);
      peak_ = std::max(peak_, now);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
    auto out = inner_.ScoreBatch(texts, schema);
    --active_;
    return out;
  }
  int peak() const { return peak_; }

 private:
  scorer::ScorerBackend& inner_;
  std::atomic<int> active_{0};
  std::mutex mu_;
  int peak_ = 0;
};

TEST(CascadeTest, BoundedFanOutAndDeterminism) {
  auto set = MakeSyntheticSet(13, 120);
  GateBackend gate(*set.stage2);
  CascadePolicy p;
  p.tau = kEscalateAll;
  p.max_in_flight = 3;
  auto a = RunCascade(set.examples, *set.stage1, gate, p);
  EXPECT_LE(gate.peak(), 3);
  p.max_in_flight = 1;
  auto b = RunCascade(set.examples, *set.stage1, *set.stage2, p);
  EXPECT_EQ(a.combined_f1, b.combined_f1);
  EXPECT_EQ(a.stage2_calls, b.stage2_calls);
}

TEST(CascadeTest, CsvFormat) {
  std::vector<CascadeTracePoint> t = {{0.5, 0.1, 0.75, 10, 0},
                                      {kEscalateAll, 1.0, 0.9, 100, 0}};
  EXPECT_EQ(TraceToCsv(t),
            "tau,escalation_rate,combined_f1,stage2_calls\n"
            "0.5,0.1000,0.7500,10\n"
            "all,1.0000,0.9000,100\n");
}

TEST(CascadeTest, LoadLabeledTexts) {
  auto path = std::filesystem::temp_directory_path() / "gg_cascade_set.jsonl";
  {
    std::ofstream out(path);
    out << R"({"id":"1","text":"hi","label":"safe"})" << "\n\n"
        << R"({"id":"2","text":"bad","label":"unsafe"})" << "\n";
  }
  auto v = LoadLabeledTexts(path);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[1].gold, "unsafe");
  {
    std::ofstream out(path);
    out << R"({"id":"1","text":"hi","label":"maybe"})" << "\n";
  }
  EXPECT_THROW(LoadLabeledTexts(path), LoadError);
  std::filesystem::remove(path);
  EXPECT_THROW(LoadLabeledTexts(path), LoadError);
}

TEST(SyntheticTest, Deterministic) {
  auto a = MakeSyntheticSet(21, 50);
  auto b = MakeSyntheticSet(21, 50);
  auto ta = Sweep(a.examples, *a.stage1, *a.stage2, DefaultTaus());
  auto tb = Sweep(b.examples, *b.stage1, *b.stage2, DefaultTaus());
  for (size_t i = 0; i < ta.size(); ++i) {
    EXPECT_EQ(ta[i].combined_f1, tb[i].combined_f1);
    EXPECT_EQ(ta[i].stage2_calls, tb[i].stage2_calls);
  }
}

}  // namespace
}  // namespace guardgate::cascade
