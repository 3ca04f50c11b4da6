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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <json.hpp>

#include "guardgate/cli/app.h"
#include "guardgate/core/error.h"
#include "guardgate/evalkit/bench.h"
#include "guardgate/evalkit/report.h"

namespace guardgate::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gg_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                           ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  std::string Slurp(const std::string& path) const {
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

  void Write(const std::string& path, const std::string& content) const {
    std::ofstream(path) << content;
  }

  // A small benchmark keeps evaluation quick.
  std::string SmallBench() const {
    Write(P("fixture.json"),
          R"({"per_entity_type": 3, "domains": [{"domain": "S-BANK", "count": 6, "with_pii": 4}]})");
    auto r = Cli({"gen-bench", "--config", P("fixture.json"), "--seed", "3",
                  "--out", P("bench.jsonl")});
    EXPECT_EQ(r.code, 0) << r.err;
    return P("bench.jsonl");
  }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  auto none = Cli({});
  EXPECT_EQ(none.code, 2);
  auto unknown = Cli({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos) << unknown.err;
  EXPECT_NE(unknown.err.find("gen-bench"), std::string::npos);
  EXPECT_EQ(Cli({"evaluate", "--mode", "fancy"}).code, 2);
  EXPECT_EQ(Cli({"cascade", "--taus", "0.5,abc"}).code, 2);
  auto help = Cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("loadtest"), std::string::npos);
}

TEST_F(CliTest, GenBenchIsDeterministic) {
  ASSERT_EQ(Cli({"gen-bench", "--seed", "7", "--out", P("a.jsonl")}).code, 0);
  ASSERT_EQ(Cli({"gen-bench", "--seed", "7", "--out", P("b.jsonl")}).code, 0);
  const std::string a = Slurp(P("a.jsonl"));
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, Slurp(P("b.jsonl")));
  EXPECT_EQ(evalkit::LoadBench(P("a.jsonl")).size(), 910u + 900u);
  ASSERT_EQ(Cli({"gen-bench", "--seed", "8", "--out", P("c.jsonl")}).code, 0);
  EXPECT_NE(a, Slurp(P("c.jsonl")));
  auto entity = Cli({"gen-bench", "--seed", "7", "--split", "entity"});
  EXPECT_EQ(evalkit::ParseBench(entity.out, "stdout").size(), 910u);
}

TEST_F(CliTest, EvaluateAndReport) {
  const std::string bench = SmallBench();
  auto r = Cli({"evaluate", "--bench", bench, "--mode", "pipeline", "--out",
                P("report.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rep = evalkit::LoadReport(P("report.json"));
  EXPECT_FALSE(rep.per_label.empty());
  EXPECT_GT(rep.micro_f1, 0.0);

  auto model = Cli({"evaluate", "--bench", bench, "--mode", "model"});
  ASSERT_EQ(model.code, 0) << model.err;
  EXPECT_LT(json::parse(model.out)["micro_f1"].get<double>(), rep.micro_f1);

  auto md = Cli({"report", P("report.json"), "--format", "md"});
  ASSERT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("| NAME"), std::string::npos) << md.out;
  auto csv = Cli({"report", P("report.json"), "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("scope,name,tp,fp,fn,precision,recall,f1", 0), 0u);
  EXPECT_EQ(Cli({"report", P("missing.json")}).code, 2);

  Write(P("broken.jsonl"), "{\"id\": 1}\n");
  EXPECT_EQ(Cli({"evaluate", "--bench", P("broken.jsonl")}).code, 1);
}

TEST_F(CliTest, DetectAndClassify) {
  auto r = Cli({"detect", "-", "--redact", "placeholder"},
               "Карта 4276 3800 1234 5671, почта ivan@mail.ru\n");
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  bool email = false;
  for (const auto& s : j["spans"]) email |= s["label"] == "EMAIL";
  EXPECT_TRUE(email) << r.out;
  EXPECT_NE(j["redacted"].get<std::string>().find("[EMAIL]"), std::string::npos);

  Write(P("in.txt"), "hello there");
  auto c = Cli({"classify", P("in.txt")});
  ASSERT_EQ(c.code, 0) << c.err;
  json v = json::parse(c.out);
  EXPECT_EQ(v["classifications"][0]["task"], "safety");

  Write(P("schema.json"),
        R"({"tasks": [{"name": "topic", "labels": ["billing", "weather"]}], "entities": []})");
  auto t = Cli({"classify", "-", "--schema", P("schema.json")}, "weather today");
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(json::parse(t.out)["classifications"][0]["task"], "topic");
  EXPECT_EQ(Cli({"classify", P("nope.txt")}).code, 1);
}

TEST_F(CliTest, CascadeCsv) {
  auto r = Cli({"cascade", "--taus", "0.5,0.7,0.9,0.95,0.99", "--seed", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "tau,escalation_rate,combined_f1,stage2_calls");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 5);
  EXPECT_EQ(Cli({"cascade", "--taus", "0.9,0.5"}).code, 1);

  Write(P("set.jsonl"),
        "{\"id\":\"1\",\"text\":\"have a nice day\",\"label\":\"safe\"}\n"
        "{\"id\":\"2\",\"text\":\"unsafe unsafe\",\"label\":\"unsafe\"}\n");
  auto d = Cli({"cascade", "--data", P("set.jsonl"), "--taus", "0,all"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("all,1.0000,1.0000,2"), std::string::npos) << d.out;
}

TEST_F(CliTest, ContractEmitAndCheck) {
  auto e = Cli({"contract", "emit"});
  ASSERT_EQ(e.code, 0);
  std::istringstream lines(e.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    json j = json::parse(line);
    EXPECT_TRUE(j.contains("name"));
    EXPECT_TRUE(j["request"].contains("texts"));
    ++n;
  }
  EXPECT_EQ(n, 20);
  auto c = Cli({"contract", "check", "--self"});
  EXPECT_EQ(c.code, 0) << c.out;
  EXPECT_NE(c.out.find("21/21 passed"), std::string::npos) << c.out;
  EXPECT_EQ(Cli({"contract"}).code, 2);
  EXPECT_EQ(Cli({"contract", "check"}).code, 2);
  EXPECT_EQ(Cli({"contract", "check", "--endpoint", "http://127.0.0.1:9"}).code, 1);
}

TEST_F(CliTest, ServeAndLoadtest) {
  auto s = Cli({"serve", "--addr", "127.0.0.1:0", "--duration-s", "0.3",
                "--stub-ms", "1"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(json::parse(s.out)["total_requests"], 0);
  auto sc = Cli({"serve-scorer", "--addr", "127.0.0.1:0", "--duration-s", "0.2"});
  EXPECT_EQ(sc.code, 0) << sc.err;

  auto l = Cli({"loadtest", "--self-host-stub-ms", "5", "--concurrency", "4",
                "--duration-s", "0.6", "--warmup-s", "0.1",
                "--flush-timeout-ms", "5"});
  ASSERT_EQ(l.code, 0) << l.err;
  json m = json::parse(l.out);
  EXPECT_GT(m["total_requests"].get<int>(), 0);
  EXPECT_EQ(m["error_rate"], 0.0);
  auto open = Cli({"loadtest", "--self-host-stub-ms", "1", "--mode", "open",
                   "--rps", "50", "--duration-s", "0.5", "--warmup-s", "0"});
  ASSERT_EQ(open.code, 0) << open.err;
  EXPECT_EQ(Cli({"loadtest", "--self-host-stub-ms", "1", "--duration-s", "0"}).code, 1);
  EXPECT_EQ(Cli({"loadtest"}).code, 2);
}

TEST_F(CliTest, ConfigLoading) {
  Write(P("cfg.json"), R"({"address": "127.0.0.1:9100", "batching": {"max_batch": 8}})");
  auto c = AppConfig::FromFile(P("cfg.json"));
  EXPECT_EQ(c.address, "127.0.0.1:9100");
  EXPECT_EQ(c.batching.max_batch, 8);

  Write(P("bad.json"), R"({"adress": "x:1"})");
  EXPECT_THROW(AppConfig::FromFile(P("bad.json")), ConfigError);
  EXPECT_EQ(Cli({"--config", P("bad.json"), "gen-bench", "--split", "entity"}).code, 1);
  Write(P("missing.json"), R"({"detectors": "no_such_registry.json"})");
  EXPECT_THROW(AppConfig::FromFile(P("missing.json")), ConfigError);

  Write(P("labels.json"), R"({"person": "NAME", "city": "DROP"})");
  Write(P("rel.json"), R"({"label_map": "labels.json"})");
  auto rel = AppConfig::FromFile(P("rel.json"));
  EXPECT_EQ(rel.Pipeline().label_map.Lookup("person"), "NAME");
  EXPECT_THROW(AppConfig::FromJson({{"scorer", "ftp://x"}}), ConfigError);
}

TEST_F(CliTest, FlagBeatsEnvBeatsConfig) {
  Write(P("cfg.json"), R"({"address": "127.0.0.1:9100", "batching": {"max_batch": 8}})");
  auto c = AppConfig::FromFile(P("cfg.json"));
  setenv("GUARD_ADDR", "127.0.0.1:9200", 1);
  setenv("GUARD_MAX_BATCH", "16", 1);
  c.ApplyEnv();
  EXPECT_EQ(c.address, "127.0.0.1:9200");
  EXPECT_EQ(c.batching.max_batch, 16);

  // The flag wins over both: serve binds where --addr says.
  auto s = Cli({"--config", P("cfg.json"), "serve", "--addr", "127.0.0.1:0",
                "--duration-s", "0.1", "--stub-ms", "0", "--max-batch", "4"});
  EXPECT_EQ(s.code, 0) << s.err;
  // Without the flag the env address is the one tried.
  setenv("GUARD_ADDR", "256.0.0.1:1", 1);
  auto bad = Cli({"--config", P("cfg.json"), "serve", "--duration-s", "0.1",
                  "--stub-ms", "0"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("256.0.0.1"), std::string::npos) << bad.err;
  unsetenv("GUARD_ADDR");
  unsetenv("GUARD_MAX_BATCH");
}

}  // namespace
}  // namespace guardgate::cli
