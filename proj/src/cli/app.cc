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

#include "guardgate/cli/app.h"

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "guardgate/cascade/synthetic.h"
#include "guardgate/core/error.h"
#include "guardgate/core/log.h"
#include "guardgate/evalkit/bench.h"
#include "guardgate/evalkit/fixture.h"
#include "guardgate/evalkit/report.h"
#include "guardgate/evalkit/runner.h"
#include "guardgate/rulepii/detector.h"
#include "guardgate/scorer/golden.h"
#include "guardgate/scorer/reference_scorer.h"
#include "guardgate/scorer/remote_scorer.h"
#include "guardgate/scorer/score_server.h"
#include "guardgate/scorer/wire.h"
#include "guardgate/servelab/gateway.h"
#include "guardgate/servelab/loadgen.h"
#include "guardgate/spanforge/label_map.h"
#include "guardgate/spanforge/redact.h"

namespace guardgate::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::atomic<bool> g_interrupted{false};

extern "C" void OnSignal(int) { g_interrupted = true; }

fs::path ExistingFile(const json& v, const fs::path& base, const char* key) {
  if (!v.is_string()) throw ConfigError(std::string(key) + " must be a path");
  fs::path p = v.get<std::string>();
  if (p.is_relative() && !base.empty()) p = base / p;
  if (!fs::is_regular_file(p)) {
    throw ConfigError(std::string(key) + ": no such file " + p.string());
  }
  return p;
}

json ReadJsonFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": malformed JSON: " + e.what());
  }
}

std::string ReadInput(const std::string& source, std::istream& in) {
  std::ostringstream buf;
  if (source == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(source, std::ios::binary);
    if (!f) throw IoError("cannot open " + source);
    buf << f.rdbuf();
  }
  std::string s = buf.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

void WriteOutput(const std::string& content, const std::string& path,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << content;
  if (!f) throw IoError("write failed: " + path);
}

json SpanJson(const Span& s) {
  return {{"start", s.start},
          {"end", s.end},
          {"label", s.label},
          {"score", s.score},
          {"source", std::string(SourceName(s.source))}};
}

std::vector<double> ParseTaus(const std::string& list) {
  std::vector<double> taus;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      taus.push_back(cascade::kEscalateAll);
      continue;
    }
    try {
      size_t used = 0;
      taus.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--taus", "not a number: '" + item + "'");
    }
  }
  if (taus.empty()) throw CLI::ValidationError("--taus", "empty list");
  return taus;
}

// Waits for the given number of seconds, or for SIGINT/SIGTERM when zero.
void WaitFor(double seconds) {
  if (seconds > 0) {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    return;
  }
  g_interrupted = false;
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);
  while (!g_interrupted) {
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
  }
}

}  // namespace

AppConfig AppConfig::FromJson(const json& j, const fs::path& base) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  AppConfig c;
  try {
    for (const auto& [k, v] : j.items()) {
      if (k == "detectors") {
        c.detectors = ExistingFile(v, base, "detectors");
      } else if (k == "label_map") {
        c.label_map = ExistingFile(v, base, "label_map");
      } else if (k == "merge_policy") {
        c.merge_policy = spanforge::MergePolicy::FromJson(v);
      } else if (k == "scorer") {
        c.scorer = v.get<std::string>();
      } else if (k == "scorer_timeout_ms") {
        c.scorer_timeout_ms = v.get<int>();
      } else if (k == "cascade") {
        c.cascade = cascade::CascadePolicy::FromJson(v);
      } else if (k == "batching") {
        c.batching = servelab::BatchingConfig::FromJson(v);
      } else if (k == "address") {
        c.address = v.get<std::string>();
        servelab::ParseAddress(c.address);
      } else if (k == "bench") {
        c.bench = ExistingFile(v, base, "bench");
      } else if (k == "fixture") {
        c.fixture = ExistingFile(v, base, "fixture");
      } else {
        throw ConfigError("unknown config key '" + k + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  if (c.scorer != "reference" && c.scorer.rfind("http://", 0) != 0) {
    throw ConfigError("scorer must be 'reference' or an http:// endpoint");
  }
  if (c.scorer_timeout_ms < 1) throw ConfigError("scorer_timeout_ms must be >= 1");
  // Parse referenced files now so mistakes surface at load time.
  c.Pipeline();
  return c;
}

AppConfig AppConfig::FromFile(const fs::path& path) {
  return FromJson(ReadJsonFile(path), path.parent_path());
}

void AppConfig::ApplyEnv() {
  if (const char* a = std::getenv("GUARD_ADDR"); a != nullptr && *a) {
    servelab::ParseAddress(a);
    address = a;
  }
  if (const char* s = std::getenv("GUARD_SCORER"); s != nullptr && *s) {
    scorer = s;
  }
  batching = batching.WithEnv();
}

spanforge::PipelineConfig AppConfig::Pipeline() const {
  spanforge::PipelineConfig p;
  if (detectors) p.registry = rulepii::DetectorRegistry::FromFile(*detectors);
  if (label_map) p.label_map = spanforge::LabelMap::FromJson(ReadJsonFile(*label_map));
  p.merge_policy = merge_policy;
  p.merge_policy.Validate();
  return p;
}

std::shared_ptr<scorer::ScorerBackend> AppConfig::MakeScorer() const {
  if (scorer == "reference") {
    return std::make_shared<scorer::ReferenceScorer>(
        scorer::ScorerConfig{}, std::make_shared<scorer::LabelCache>());
  }
  scorer::RemoteOptions o;
  o.timeout = std::chrono::milliseconds(scorer_timeout_ms);
  o.use_schema_id = true;
  return std::make_shared<scorer::RemoteScorer>(scorer, o);
}

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"guardgate: PII detection and safety guardrail gateway"};
  app.name("guardgate");
  app.require_subcommand(1);

  std::string config_path;
  std::string scorer_flag;
  std::string log_level = "warn";
  app.add_option("--config", config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_option("--scorer", scorer_flag,
                 "'reference' or http:// endpoint of a /v1/score server");
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off");

  // detect
  auto* detect = app.add_subcommand("detect", "Pipeline PII spans as JSON");
  std::string detect_input = "-";
  std::string redact_style;
  detect->add_option("input", detect_input, "Text file, or - for stdin");
  detect->add_option("--redact", redact_style, "Also emit redacted text")
      ->check(CLI::IsMember({"placeholder", "mask"}));

  // classify
  auto* classify = app.add_subcommand("classify", "Scorer verdict as JSON");
  std::string classify_input = "-";
  std::string schema_path;
  classify->add_option("input", classify_input, "Text file, or - for stdin");
  classify->add_option("--schema", schema_path, "Schema JSON (default: safety + PII)")
      ->check(CLI::ExistingFile);

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Strict-match evaluation");
  std::string bench_path;
  std::string eval_mode = "pipeline";
  std::string eval_format = "json";
  std::string eval_out;
  evaluate->add_option("--bench", bench_path, "Benchmark JSONL")
      ->check(CLI::ExistingFile);
  evaluate->add_option("--mode", eval_mode, "model|pipeline")
      ->check(CLI::IsMember({"model", "pipeline"}));
  evaluate->add_option("--format", eval_format, "json|md|csv")
      ->check(CLI::IsMember({"json", "md", "markdown", "csv"}));
  evaluate->add_option("--out", eval_out, "Output path (default stdout)");

  // gen-bench
  auto* gen = app.add_subcommand("gen-bench", "Generate a synthetic benchmark");
  std::string gen_config;
  std::optional<uint64_t> gen_seed;
  std::string gen_split = "all";
  std::string gen_out;
  gen->add_option("--config", gen_config, "Fixture config JSON")
      ->check(CLI::ExistingFile);
  gen->add_option("--seed", gen_seed, "Overrides the config seed");
  gen->add_option("--split", gen_split, "entity|domain|all")
      ->check(CLI::IsMember({"entity", "domain", "all"}));
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the batching gateway");
  std::string serve_addr;
  std::optional<int> max_batch;
  std::optional<double> flush_ms;
  double serve_duration = 0;
  double serve_stub_ms = -1;
  int http_threads = 160;
  serve->add_option("--addr", serve_addr, "host:port (env GUARD_ADDR)");
  serve->add_option("--max-batch", max_batch, "env GUARD_MAX_BATCH");
  serve->add_option("--flush-timeout-ms", flush_ms, "env GUARD_FLUSH_TIMEOUT_MS");
  serve->add_option("--http-threads", http_threads)->check(CLI::PositiveNumber);
  serve->add_option("--duration-s", serve_duration,
                    "Stop after this long; 0 runs until interrupted")
      ->check(CLI::NonNegativeNumber);
  serve->add_option("--stub-ms", serve_stub_ms,
                    "Serve a fixed-latency stub instead of the scorer");

  // serve-scorer
  auto* serve_scorer = app.add_subcommand(
      "serve-scorer", "Serve the reference scorer over /v1/score");
  std::string scorer_addr = "127.0.0.1:8081";
  double scorer_duration = 0;
  serve_scorer->add_option("--addr", scorer_addr, "host:port");
  serve_scorer->add_option("--duration-s", scorer_duration)
      ->check(CLI::NonNegativeNumber);

  // loadtest
  auto* load = app.add_subcommand("loadtest", "Drive a gateway, print metrics");
  std::string load_mode = "closed";
  std::string load_endpoint;
  servelab::LoadConfig lc;
  double self_host_stub_ms = -1;
  load->add_option("--mode", load_mode, "open|closed")
      ->check(CLI::IsMember({"open", "closed"}));
  load->add_option("--endpoint", load_endpoint, "http://host:port of a gateway");
  load->add_option("--concurrency", lc.concurrency, "closed loop in-flight requests")
      ->check(CLI::PositiveNumber);
  load->add_option("--rps", lc.target_rps, "open loop send rate");
  load->add_option("--duration-s", lc.duration_s, "measured seconds");
  load->add_option("--warmup-s", lc.warmup_s, "unmeasured lead-in");
  load->add_option("--text", lc.text, "request text");
  load->add_option("--self-host-stub-ms", self_host_stub_ms,
                   "Start an in-process gateway over a stub of this latency");
  load->add_option("--max-batch", max_batch, "for --self-host-stub-ms");
  load->add_option("--flush-timeout-ms", flush_ms, "for --self-host-stub-ms");

  // cascade
  auto* casc = app.add_subcommand("cascade", "Sweep the escalation threshold");
  std::string taus_arg = "0.5,0.7,0.9,0.95,0.99";
  std::string casc_data;
  std::string stage2 = "oracle";
  uint64_t casc_seed = 1;
  int casc_size = 1000;
  casc->add_option("--taus", taus_arg, "Comma list, ascending; 'all' = escalate all");
  casc->add_option("--data", casc_data, "JSONL of {id,text,label}")
      ->check(CLI::ExistingFile);
  casc->add_option("--stage2", stage2, "'oracle' or http:// endpoint");
  casc->add_option("--seed", casc_seed, "Synthetic set seed (without --data)");
  casc->add_option("--size", casc_size, "Synthetic set size (without --data)")
      ->check(CLI::PositiveNumber);

  // report
  auto* report = app.add_subcommand("report", "Re-render a JSON report");
  std::string report_in;
  std::string report_format = "md";
  std::string report_out;
  report->add_option("input", report_in, "Report JSON")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("--format", report_format, "md|csv|json")
      ->check(CLI::IsMember({"json", "md", "markdown", "csv"}));
  report->add_option("--out", report_out, "Output path (default stdout)");

  // contract
  auto* contract = app.add_subcommand("contract", "Wire-protocol golden corpus");
  contract->require_subcommand(1);
  auto* emit = contract->add_subcommand("emit", "Write the 20 golden requests");
  std::string emit_out;
  emit->add_option("--out", emit_out, "Output path (default stdout)");
  auto* check = contract->add_subcommand("check", "Check a /v1/score server");
  std::string check_endpoint;
  bool check_self = false;
  check->add_option("--endpoint", check_endpoint, "http://host:port");
  check->add_flag("--self", check_self, "Check an in-process reference server");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    Log()->set_level(spdlog::level::from_str(log_level));
    AppConfig cfg = config_path.empty() ? AppConfig{} : AppConfig::FromFile(config_path);
    cfg.ApplyEnv();
    if (!scorer_flag.empty()) {
      json j = {{"scorer", scorer_flag}};
      cfg.scorer = AppConfig::FromJson(j).scorer;
    }
    if (max_batch) cfg.batching.max_batch = *max_batch;
    if (flush_ms) cfg.batching.flush_timeout_ms = *flush_ms;
    cfg.batching.Validate();

    if (detect->parsed()) {
      const std::string text = ReadInput(detect_input, in);
      const GuardSchema schema({}, DefaultGuardSchema().entity_types());
      auto scorer = cfg.MakeScorer();
      std::vector<std::string> texts = {text};
      const auto verdict = scorer->ScoreBatch(texts, schema).front();
      const auto spans = spanforge::RunPipeline(text, verdict.entities, cfg.Pipeline());
      json o = {{"spans", json::array()}};
      for (const auto& s : spans) o["spans"].push_back(SpanJson(s));
      if (!redact_style.empty()) {
        o["redacted"] = spanforge::Redact(
            text, spans,
            redact_style == "mask" ? spanforge::RedactStyle::kMask
                                   : spanforge::RedactStyle::kPlaceholder);
      }
      out << o.dump() << "\n";
      return 0;
    }
    if (classify->parsed()) {
      const std::string text = ReadInput(classify_input, in);
      const GuardSchema schema =
          schema_path.empty()
              ? DefaultGuardSchema()
              : scorer::wire::SchemaFromJson(ReadJsonFile(schema_path));
      std::vector<std::string> texts = {text};
      const auto verdict = cfg.MakeScorer()->ScoreBatch(texts, schema).front();
      out << scorer::wire::VerdictToJson(verdict).dump() << "\n";
      return 0;
    }
    if (evaluate->parsed()) {
      fs::path path = bench_path;
      if (path.empty()) {
        if (!cfg.bench) throw CLI::RequiredError("--bench");
        path = *cfg.bench;
      }
      const auto examples = evalkit::LoadBench(path);
      evalkit::RunnerOptions opts;
      opts.mode = evalkit::ParseEvalMode(eval_mode);
      opts.pipeline = cfg.Pipeline();
      auto scorer = cfg.MakeScorer();
      const auto rep = evalkit::Evaluate(examples, *scorer, opts);
      WriteOutput(evalkit::RenderReport(rep, evalkit::ParseReportFormat(eval_format)),
                  eval_out, out);
      return 0;
    }
    if (gen->parsed()) {
      evalkit::FixtureConfig fc;
      if (!gen_config.empty()) {
        fc = evalkit::FixtureConfig::FromFile(gen_config);
      } else if (cfg.fixture) {
        fc = evalkit::FixtureConfig::FromFile(*cfg.fixture);
      }
      if (gen_seed) fc.seed = *gen_seed;
      const auto fixture = evalkit::GenerateFixture(fc);
      const auto& examples = gen_split == "entity"   ? fixture.entity_split
                             : gen_split == "domain" ? fixture.domain_split
                                                     : fixture.All();
      WriteOutput(evalkit::SerializeBench(examples), gen_out, out);
      return 0;
    }
    if (serve->parsed()) {
      if (!serve_addr.empty()) cfg.address = serve_addr;
      auto [host, port] = servelab::ParseAddress(cfg.address);
      std::shared_ptr<scorer::ScorerBackend> backend =
          serve_stub_ms >= 0
              ? std::make_shared<servelab::SleepStub>(serve_stub_ms)
              : cfg.MakeScorer();
      servelab::GatewayOptions go;
      go.batching = cfg.batching;
      go.http_threads = http_threads;
      servelab::GatewayServer gw(backend, go);
      gw.Start(host, port);
      err << "listening on " << gw.endpoint() << std::endl;
      WaitFor(serve_duration);
      gw.Stop();
      out << gw.metrics().Snapshot().ToJson().dump() << "\n";
      return 0;
    }
    if (serve_scorer->parsed()) {
      auto [host, port] = servelab::ParseAddress(scorer_addr);
      scorer::ScoreServer server(cfg.MakeScorer());
      server.Start(host, port);
      err << "listening on " << server.endpoint() << std::endl;
      WaitFor(scorer_duration);
      server.Stop();
      return 0;
    }
    if (load->parsed()) {
      lc.mode = servelab::ParseLoadMode(load_mode);
      std::unique_ptr<servelab::GatewayServer> local;
      if (self_host_stub_ms >= 0) {
        servelab::GatewayOptions go;
        go.batching = cfg.batching;
        local = std::make_unique<servelab::GatewayServer>(
            std::make_shared<servelab::SleepStub>(self_host_stub_ms), go);
        local->Start();
        lc.endpoint = local->endpoint();
      } else if (!load_endpoint.empty()) {
        lc.endpoint = load_endpoint;
      } else {
        throw CLI::RequiredError("--endpoint or --self-host-stub-ms");
      }
      const auto m = servelab::LoadGenerate(lc);
      if (local) local->Stop();
      out << m.ToJson().dump() << "\n";
      return 0;
    }
    if (casc->parsed()) {
      const auto taus = ParseTaus(taus_arg);
      std::vector<cascade::LabeledText> examples;
      std::shared_ptr<scorer::ScorerBackend> s1;
      std::shared_ptr<scorer::ScorerBackend> s2;
      if (casc_data.empty()) {
        auto set = cascade::MakeSyntheticSet(casc_seed, casc_size);
        examples = set.examples;
        s1 = set.stage1;
        s2 = stage2 == "oracle" ? set.oracle : nullptr;
      } else {
        examples = cascade::LoadLabeledTexts(casc_data);
        s1 = cfg.MakeScorer();
        if (stage2 == "oracle") {
          auto oracle = std::make_shared<cascade::ScriptedBackend>();
          for (const auto& e : examples) oracle->Set(e.text, e.gold, 1.0);
          s2 = oracle;
        }
      }
      if (!s2) {
        if (stage2.rfind("http://", 0) != 0) {
          throw CLI::ValidationError("--stage2", "'oracle' or http:// endpoint");
        }
        scorer::RemoteOptions o;
        o.timeout = std::chrono::milliseconds(cfg.scorer_timeout_ms);
        s2 = std::make_shared<scorer::RemoteScorer>(stage2, o);
      }
      const auto trace = cascade::Sweep(examples, *s1, *s2, taus, cfg.cascade);
      out << cascade::TraceToCsv(trace);
      return 0;
    }
    if (report->parsed()) {
      const auto rep = evalkit::LoadReport(report_in);
      WriteOutput(evalkit::RenderReport(rep, evalkit::ParseReportFormat(report_format)),
                  report_out, out);
      return 0;
    }
    if (emit->parsed()) {
      WriteOutput(scorer::GoldenRequestsJsonl(), emit_out, out);
      return 0;
    }
    if (check->parsed()) {
      std::unique_ptr<scorer::ScoreServer> local;
      if (check_self) {
        local = std::make_unique<scorer::ScoreServer>(
            std::make_shared<scorer::ReferenceScorer>());
        local->Start();
        check_endpoint = local->endpoint();
      } else if (check_endpoint.empty()) {
        throw CLI::RequiredError("--endpoint or --self");
      }
      const auto results = scorer::CheckConformance(check_endpoint);
      int failed = 0;
      for (const auto& r : results) {
        out << (r.ok ? "PASS " : "FAIL ") << r.name;
        if (!r.ok) {
          out << ": " << r.message;
          ++failed;
        }
        out << "\n";
      }
      out << results.size() - failed << "/" << results.size() << " passed\n";
      if (local) local->Stop();
      return failed == 0 ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace guardgate::cli
