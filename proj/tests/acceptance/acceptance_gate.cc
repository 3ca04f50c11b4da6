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

// Runs every primary acceptance criterion and prints one PASS/FAIL/SKIP line
// for each. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "guardgate/cascade/cascade.h"
#include "guardgate/cascade/synthetic.h"
#include "guardgate/core/unicode.h"
#include "guardgate/evalkit/bench.h"
#include "guardgate/evalkit/fixture.h"
#include "guardgate/evalkit/metrics.h"
#include "guardgate/evalkit/strict_match.h"
#include "guardgate/rulepii/detector.h"
#include "guardgate/rulepii/validators.h"
#include "guardgate/servelab/batcher.h"
#include "guardgate/servelab/batching.h"
#include "guardgate/servelab/gateway.h"
#include "guardgate/servelab/loadgen.h"
#include "guardgate/servelab/metrics.h"
#include "guardgate/spanforge/label_map.h"
#include "guardgate/spanforge/pipeline.h"
#include "tests/oracles/checksum_oracles.h"
#include "tests/oracles/match_oracle.h"

namespace guardgate {
namespace {

// What a criterion reports back.
struct Outcome {
  enum Kind { kPass, kFail, kSkip } kind = kFail;
  std::string detail;
};

Outcome Pass(std::string d) { return {Outcome::kPass, std::move(d)}; }
Outcome Fail(std::string d) { return {Outcome::kFail, std::move(d)}; }
Outcome Check(bool ok, std::string d) { return ok ? Pass(d) : Fail(d); }

std::string Fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome NormalizedEfficiency() {
  struct Row {
    double avg;
    int64_t params;
    double expected;
  };
  const Row rows[] = {{80.9, 7'000'000'000, 2.47},
                      {75.3, 8'000'000'000, 2.29},
                      {76.9, 209'000'000, 2.78},
                      {74.3, 145'000'000, 2.74},
                      {73.8, 147'000'000, 2.72}};
  double worst = 0;
  for (const auto& r : rows) {
    const double got = evalkit::NormalizedEfficiency(r.avg, {"m", r.params});
    worst = std::max(worst, std::abs(got - r.expected));
  }
  return Check(worst <= 0.01, Fmt("max |err| %.4f, tol 0.01", worst));
}

std::vector<Span> Perturb(const std::vector<Span>& gold, int text_len,
                          std::mt19937_64& rng) {
  static const std::vector<std::string> kLabels = {"NAME", "EMAIL", "INN",
                                                   "ADDRESS", "SNILS"};
  std::vector<Span> out;
  for (const Span& g : gold) {
    const uint64_t op = rng() % 6;
    if (op == 0) continue;
    Span p = g;
    if (op == 1) p.end = std::min(text_len, p.end + 1);
    if (op == 2) p.start = std::max(0, p.start - 1);
    if (op == 3) p.label = kLabels[rng() % kLabels.size()];
    out.push_back(p);
    if (op == 4) out.push_back(p);
  }
  const int extra = static_cast<int>(rng() % 3);
  for (int i = 0; i < extra && text_len > 1; ++i) {
    const int a = static_cast<int>(rng() % (text_len - 1));
    const int len = 1 + static_cast<int>(rng() % 10);
    out.push_back({a, std::min(text_len, a + len),
                   kLabels[rng() % kLabels.size()], 1.0, SpanSource::kModel});
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

Outcome StrictMatchOracle() {
  std::mt19937_64 rng(424242);
  int mismatches = 0;
  int64_t spans = 0;
  for (int f = 0; f < 200; ++f) {
    evalkit::FixtureConfig cfg;
    cfg.per_entity_type = 2;
    for (auto& q : cfg.domains) q = {q.domain, 4, 3};
    cfg.seed = 5000 + f;
    const auto examples = evalkit::GenerateFixture(cfg).All();
    std::vector<evalkit::Prediction> pred;
    std::vector<std::vector<oracle::OracleSpan>> og, op;
    for (const auto& ex : examples) {
      pred.push_back({ex.id, Perturb(ex.gold, CodePointLength(ex.text), rng)});
      og.emplace_back();
      op.emplace_back();
      for (const auto& s : ex.gold) og.back().push_back({s.start, s.end, s.label});
      for (const auto& s : pred.back().spans) {
        op.back().push_back({s.start, s.end, s.label});
      }
      spans += static_cast<int64_t>(ex.gold.size() + pred.back().spans.size());
    }
    const auto report = evalkit::StrictMatchF1(examples, pred);
    const auto expected = oracle::BruteForceMatch(og, op);
    if (report.per_label.size() != expected.size()) ++mismatches;
    for (const auto& [label, c] : expected) {
      auto it = report.per_label.find(label);
      if (it == report.per_label.end() || it->second.counts.tp != c.tp ||
          it->second.counts.fp != c.fp || it->second.counts.fn != c.fn) {
        ++mismatches;
      }
    }
  }
  return Check(mismatches == 0,
               Fmt("200 fixtures, %lld spans, %d label mismatches",
                   static_cast<long long>(spans), mismatches));
}

std::string RandomDigits(std::mt19937_64& rng, size_t n) {
  std::string s;
  for (size_t i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + rng() % 10));
  return s;
}

// Half the candidates are completed to pass the oracle, so both verdicts
// get exercised.
std::string Candidate(std::mt19937_64& rng, size_t len, size_t check_len,
                      bool (*oracle_fn)(const std::string&)) {
  std::string s = RandomDigits(rng, len);
  if (rng() % 2 == 0) return s;
  const std::string body = s.substr(0, len - check_len);
  const int limit = check_len == 1 ? 10 : 100;
  const int start = static_cast<int>(rng() % limit);
  for (int k = 0; k < limit; ++k) {
    std::string tail = std::to_string((start + k) % limit);
    while (tail.size() < check_len) tail = "0" + tail;
    if (oracle_fn(body + tail)) return body + tail;
  }
  return s;
}

Outcome ChecksumOracles() {
  std::mt19937_64 rng(31337);
  struct V {
    const char* name;
    bool (*prod)(std::string_view);
    bool (*orc)(const std::string&);
    std::vector<size_t> lengths;
    size_t check_len;
  };
  const V validators[] = {
      {"luhn", rulepii::ValidateCardLuhn, oracle::LuhnOracle,
       {13, 14, 15, 16, 17, 18, 19}, 1},
      {"inn", rulepii::ValidateInn, oracle::InnOracle, {10, 12}, 1},
      {"snils", rulepii::ValidateSnils, oracle::SnilsOracle, {11}, 2},
      {"ogrn", rulepii::ValidateOgrn, oracle::OgrnOracle, {13}, 1},
      {"ogrnip", rulepii::ValidateOgrnip, oracle::OgrnipOracle, {15}, 1},
  };
  std::ostringstream detail;
  int disagreements = 0;
  for (const auto& v : validators) {
    int valid = 0;
    for (int i = 0; i < 10000; ++i) {
      const size_t len = v.lengths[rng() % v.lengths.size()];
      // A 12-digit INN carries two check digits, searched jointly.
      const size_t check = std::string(v.name) == "inn" && len == 12 ? 2 : v.check_len;
      const std::string c = Candidate(rng, len, check, v.orc);
      const bool expect = v.orc(c);
      valid += expect;
      if (v.prod(c) != expect) ++disagreements;
    }
    detail << v.name << " " << valid << "/10000 valid; ";
  }
  int missed = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string body = RandomDigits(rng, 15);
    const std::string card = body + std::to_string(rulepii::LuhnCheckDigit(body));
    if (!oracle::LuhnOracle(card)) ++missed;
    for (size_t pos = 0; pos < card.size(); ++pos) {
      for (char d = '0'; d <= '9'; ++d) {
        if (d == card[pos]) continue;
        std::string m = card;
        m[pos] = d;
        if (rulepii::ValidateCardLuhn(m)) ++missed;
      }
    }
  }
  detail << disagreements << " disagreements, " << missed
         << " undetected substitutions of 1000 cards";
  return Check(disagreements == 0 && missed == 0, detail.str());
}

Outcome FixtureStructure() {
  const auto fixture = evalkit::GenerateFixture({});
  const auto registry = rulepii::DetectorRegistry::Defaults();
  int64_t planted = 0;
  int64_t missed = 0;
  int64_t extra = 0;
  for (const auto& ex : fixture.All()) {
    const auto found = rulepii::DetectStructured(ex.text, registry);
    int64_t here = 0;
    for (const auto& g : ex.gold) {
      if (!rulepii::IsStructuredLabel(g.label)) continue;
      ++here;
      const bool hit = std::any_of(found.begin(), found.end(), [&](const Span& f) {
        return f.start == g.start && f.end == g.end && f.label == g.label;
      });
      missed += !hit;
    }
    planted += here;
    extra += std::max<int64_t>(0, static_cast<int64_t>(found.size()) - here);
  }
  const size_t ne = fixture.entity_split.size();
  const size_t nd = fixture.domain_split.size();
  return Check(ne == 910 && nd == 900 && missed == 0,
               Fmt("entity %zu, domain %zu; %lld structured entities, "
                   "%lld missed, %lld unplanted detections",
                   ne, nd, static_cast<long long>(planted),
                   static_cast<long long>(missed), static_cast<long long>(extra)));
}

Outcome Consolidation() {
  const auto suite = evalkit::GenerateAddressFragmentSuite(2026, 200);
  std::vector<evalkit::BenchExample> gold;
  std::vector<evalkit::Prediction> raw, merged;
  spanforge::PipelineConfig config;
  size_t min_parts = SIZE_MAX;
  for (const auto& c : suite) {
    min_parts = std::min(min_parts, c.model_spans.size());
    gold.push_back(c.example);
    raw.push_back({c.example.id, spanforge::MapLabels(c.model_spans, config.label_map)});
    merged.push_back(
        {c.example.id, spanforge::RunPipeline(c.example.text, c.model_spans, config)});
  }
  auto f1 = [&](const std::vector<evalkit::Prediction>& p) {
    const auto r = evalkit::StrictMatchF1(gold, p);
    auto it = r.per_label.find("ADDRESS");
    return it == r.per_label.end() ? 0.0 : it->second.prf.f1;
  };
  const double raw_f1 = f1(raw);
  const double pipe_f1 = f1(merged);
  return Check(min_parts >= 2 && pipe_f1 >= raw_f1 && raw_f1 < 0.1 && pipe_f1 > 0.9,
               Fmt("%zu cases, >=%zu fragments each; ADDRESS F1 raw %.3f, "
                   "pipeline %.3f",
                   suite.size(), min_parts, raw_f1, pipe_f1));
}

Outcome CascadeProperties() {
  const std::vector<double> taus = {0.0, 0.5, 0.7, 0.9, 0.95, 0.99,
                                    cascade::kEscalateAll};
  int violations = 0;
  int endpoint_mismatch = 0;
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    auto set = cascade::MakeSyntheticSet(seed * 7919, 200 + static_cast<int>(seed) * 10);
    const auto oracle_trace = cascade::Sweep(set.examples, *set.stage1, *set.oracle, taus);
    for (size_t i = 1; i < oracle_trace.size(); ++i) {
      if (oracle_trace[i].escalation_rate < oracle_trace[i - 1].escalation_rate) ++violations;
      if (oracle_trace[i].combined_f1 < oracle_trace[i - 1].combined_f1) ++violations;
    }
    // Endpoints against each stage alone, with an imperfect stage 2.
    const auto trace = cascade::Sweep(set.examples, *set.stage1, *set.stage2, taus);
    for (size_t i = 1; i < trace.size(); ++i) {
      if (trace[i].escalation_rate < trace[i - 1].escalation_rate) ++violations;
    }
    std::vector<std::string> texts, gold, p1, p2;
    for (const auto& e : set.examples) {
      texts.push_back(e.text);
      gold.push_back(e.gold);
    }
    const auto schema = cascade::SafetySchema();
    for (const auto& v : set.stage1->ScoreBatch(texts, schema)) {
      p1.push_back(v.Find("safety")->predicted);
    }
    for (const auto& v : set.stage2->ScoreBatch(texts, schema)) {
      p2.push_back(v.Find("safety")->predicted);
    }
    if (trace.front().escalation_rate != 0.0 ||
        trace.front().combined_f1 != evalkit::UnsafeF1(gold, p1)) {
      ++endpoint_mismatch;
    }
    if (trace.back().escalation_rate != 1.0 ||
        trace.back().combined_f1 != evalkit::UnsafeF1(gold, p2)) {
      ++endpoint_mismatch;
    }
  }
  return Check(violations == 0 && endpoint_mismatch == 0,
               Fmt("50 synthetic sets; %d monotonicity violations, %d endpoint "
                   "mismatches",
                   violations, endpoint_mismatch));
}

Outcome BatchingInvariants() {
  const servelab::BatchingConfig cfg;  // 64 / 50 ms / 4096
  const auto arrivals = servelab::BurstyArrivals(77, 10000);

  // Replay on a recorded virtual clock, 10 ms per batch.
  const auto replay = servelab::ReplayBatching(arrivals, cfg, 10.0);
  size_t replay_max = 0;
  double replay_wait = 0;
  for (const auto& b : replay.batches) replay_max = std::max(replay_max, b.ids.size());
  for (const auto& w : replay.idle_wait_ms) replay_wait = std::max(replay_wait, w.value_or(1e9));
  const bool replay_ok = replay_max <= 64 && replay_wait <= cfg.flush_timeout_ms &&
                         replay.served + replay.rejected == replay.submitted;

  // The same schedule through the live batcher and the healthy stub.
  std::mutex mu;
  size_t live_max = 0;
  double live_wait = 0;
  auto metrics = std::make_shared<servelab::MetricsRecorder>();
  auto stub = std::make_shared<servelab::SleepStub>(10.0);
  servelab::DynamicBatcher batcher(
      stub, cfg, metrics,
      [&](const servelab::BatchRecord& r, const std::vector<double>& a, double) {
        std::lock_guard lock(mu);
        live_max = std::max(live_max, r.ids.size());
        for (double t : a) live_wait = std::max(live_wait, r.dispatch_ms - std::max(t, r.worker_free_ms));
      });
  const GuardSchema schema = DefaultGuardSchema();
  std::vector<std::future<servelab::Completion>> futures;
  futures.reserve(arrivals.size());
  int64_t submitted = 0, rejected = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (double a : arrivals) {
    std::this_thread::sleep_until(
        t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(Millis(a)));
    ++submitted;
    try {
      futures.push_back(batcher.Submit("request", schema));
    } catch (const servelab::QueueFullError&) {
      ++rejected;
    }
  }
  int64_t ok = 0, failed = 0;
  for (auto& f : futures) {
    try {
      f.get();
      ++ok;
    } catch (const std::exception&) {
      ++failed;
    }
  }
  batcher.Stop();
  const auto m = metrics->Snapshot();
  const bool live_ok = live_max <= 64 && ok + failed + rejected == submitted &&
                       m.total_requests == submitted && m.error_rate == 0.0;
  return Check(replay_ok && live_ok,
               Fmt("replay: %zu batches, max size %zu, max idle wait %.3f ms "
                   "(limit 50), %lld/%lld served; live: max size %zu, "
                   "%lld ok + %lld failed + %lld rejected = %lld, error_rate %.3f, "
                   "max idle wait %.2f ms incl. wakeup jitter",
                   replay.batches.size(), replay_max, replay_wait,
                   static_cast<long long>(replay.served),
                   static_cast<long long>(replay.submitted), live_max,
                   static_cast<long long>(ok), static_cast<long long>(failed),
                   static_cast<long long>(rejected),
                   static_cast<long long>(submitted), m.error_rate, live_wait));
}

Outcome BatchingBenefit() {
  auto run = [](int max_batch, int concurrency) {
    servelab::GatewayOptions o;
    o.batching.max_batch = max_batch;
    servelab::GatewayServer gw(std::make_shared<servelab::SleepStub>(10.0), o);
    gw.Start();
    servelab::LoadConfig lc;
    lc.endpoint = gw.endpoint();
    lc.mode = servelab::LoadMode::kClosed;
    lc.concurrency = concurrency;
    lc.warmup_s = 2.0;
    lc.duration_s = 5.0;
    auto m = servelab::LoadGenerate(lc);
    gw.Stop();
    return m;
  };
  // Unbatched baseline: with max_batch 1 a lone request is dispatched at
  // once instead of waiting out the flush timeout.
  const auto c1 = run(1, 1);
  const auto c64 = run(64, 64);
  auto ordered = [](const servelab::ServingMetrics& m) {
    return m.p50_ms && *m.p50_ms <= *m.p95_ms && *m.p95_ms <= *m.p99_ms;
  };
  std::mt19937_64 rng(2718);
  int pct_mismatch = 0;
  for (int t = 0; t < 1000; ++t) {
    const size_t n = 1 + rng() % 400;
    std::vector<double> v(n);
    for (auto& x : v) x = static_cast<double>(rng() % 1000000) / 100.0;
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    const uint64_t qs[] = {500, 950, 990, 1 + rng() % 1000};
    for (uint64_t q : qs) {
      const uint64_t rank = (q * n + 999) / 1000;
      if (servelab::Percentile(v, static_cast<double>(q) / 1000.0) != sorted[rank - 1]) {
        ++pct_mismatch;
      }
    }
  }
  const double ratio = c64.rps / std::max(c1.rps, 1e-9);
  return Check(ratio >= 5.0 && ordered(c1) && ordered(c64) && pct_mismatch == 0 &&
                   c1.error_rate == 0 && c64.error_rate == 0,
               Fmt("c1 %.1f rps (p50/p95/p99 %.1f/%.1f/%.1f ms), c64 %.1f rps "
                   "(%.1f/%.1f/%.1f ms), ratio %.2f (need >= 5); percentile "
                   "oracle mismatches %d; error rates %.4f/%.4f",
                   c1.rps, c1.p50_ms.value_or(-1), c1.p95_ms.value_or(-1),
                   c1.p99_ms.value_or(-1), c64.rps, c64.p50_ms.value_or(-1),
                   c64.p95_ms.value_or(-1), c64.p99_ms.value_or(-1), ratio,
                   pct_mismatch, c1.error_rate, c64.error_rate));
}

Outcome CharStats() {
  std::filesystem::path path;
  if (const char* p = std::getenv("GUARDGATE_RELEASED_BENCH"); p != nullptr && *p) {
    path = p;
  } else {
    path = std::filesystem::path(GUARDGATE_SOURCE_DIR) / "data" / "released_bench.jsonl";
  }
  if (!std::filesystem::exists(path)) {
    return {Outcome::kSkip, "released benchmark not found at " + path.string() +
                                " (set GUARDGATE_RELEASED_BENCH)"};
  }
  const auto stats = evalkit::ComputeCharStats(evalkit::LoadBench(path));
  const double k = static_cast<double>(stats.total_chars) / 1000.0;
  const double pct = 100.0 * stats.pii_fraction;
  return Check(std::abs(k - 156.8) <= 0.1 && std::abs(pct - 19.6) <= 0.3,
               Fmt("total %.1fK chars (want 156.8K +- 0.1K), PII %.2f%% "
                   "(want 19.6 +- 0.3)",
                   k, pct));
}

}  // namespace
}  // namespace guardgate

int main() {
  using guardgate::Outcome;
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"normalized-efficiency", 1, guardgate::NormalizedEfficiency},
      {"strict-f1-oracle-equivalence", 10, guardgate::StrictMatchOracle},
      {"checksum-oracle-equivalence", 30, guardgate::ChecksumOracles},
      {"fixture-structure", 30, guardgate::FixtureStructure},
      {"address-consolidation", 10, guardgate::Consolidation},
      {"cascade-properties", 20, guardgate::CascadeProperties},
      {"batching-invariants", 60, guardgate::BatchingInvariants},
      {"batching-benefit", 120, guardgate::BatchingBenefit},
      {"char-stat-cross-check", 30, guardgate::CharStats},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Outcome::kFail, std::string("threw: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.kind == Outcome::kPass && secs >= c.limit_s) {
      o.kind = Outcome::kFail;
      o.detail += "; over time budget";
    }
    const char* tag = o.kind == Outcome::kPass   ? "PASS"
                      : o.kind == Outcome::kSkip ? "SKIP"
                                                 : "FAIL";
    std::printf("%s %s: %s [%.2f s, limit %.0f s]\n", tag, c.name, o.detail.c_str(),
                secs, c.limit_s);
    std::fflush(stdout);
    failed += o.kind == Outcome::kFail;
  }
  return failed == 0 ? 0 : 1;
}
