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

#ifndef GUARDGATE_SERVELAB_GATEWAY_H_
#define GUARDGATE_SERVELAB_GATEWAY_H_

#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "guardgate/scorer/backend.h"
#include "guardgate/scorer/score_server.h"
#include "guardgate/servelab/batcher.h"
#include "guardgate/servelab/metrics.h"

namespace httplib {
class Server;
}

namespace guardgate::servelab {

struct GatewayOptions {
  BatchingConfig batching;
  // HTTP worker threads; must exceed the expected client concurrency or
  // the batcher never sees full batches.
  int http_threads = 160;
};

// HTTP front end over a DynamicBatcher:
//   POST /v1/guard        one text, scorer wire request format
//   POST /v1/guard:batch  several texts, each batched independently
//   POST /v1/schemas      register a schema, returns {"schema_id"}
//   GET  /healthz, GET /metrics
// Responses are scorer wire responses plus "latency_ms". Status codes: 400
// bad input, 429 queue full, 500 scorer failure.
class GatewayServer {
 public:
  GatewayServer(std::shared_ptr<scorer::ScorerBackend> backend,
                const GatewayOptions& options);
  ~GatewayServer();
  GatewayServer(const GatewayServer&) = delete;
  GatewayServer& operator=(const GatewayServer&) = delete;

  // Port 0 picks a free port. Throws IoError when the bind fails.
  void Start(const std::string& host = "127.0.0.1", int port = 0);
  void Stop();
  void Wait();

  int port() const { return port_; }
  std::string endpoint() const;
  MetricsRecorder& metrics() { return *metrics_; }
  scorer::SchemaRegistry& schemas() { return schemas_; }

 private:
  void InstallRoutes();

  GatewayOptions options_;
  std::shared_ptr<MetricsRecorder> metrics_;
  std::unique_ptr<DynamicBatcher> batcher_;
  std::unique_ptr<httplib::Server> server_;
  scorer::SchemaRegistry schemas_;
  std::thread thread_;
  std::mutex join_mu_;
  std::string host_;
  int port_ = 0;
};

// Splits "host:port" (as in GUARD_ADDR). Throws ConfigError.
std::pair<std::string, int> ParseAddress(const std::string& address);

}  // namespace guardgate::servelab

#endif  // GUARDGATE_SERVELAB_GATEWAY_H_
