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

#include "guardgate/servelab/gateway.h"

#include <httplib.h>

#include <json.hpp>

#include "guardgate/core/error.h"
#include "guardgate/core/log.h"
#include "guardgate/scorer/wire.h"

namespace guardgate::servelab {
namespace {

using nlohmann::json;

void Fail(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(json{{"error", message}}.dump(), "application/json");
}

}  // namespace

std::pair<std::string, int> ParseAddress(const std::string& address) {
  const size_t colon = address.rfind(':');
  if (colon == std::string::npos || colon == 0) {
    throw ConfigError("address must be host:port, got '" + address + "'");
  }
  const std::string host = address.substr(0, colon);
  const std::string port_s = address.substr(colon + 1);
  char* end = nullptr;
  long port = std::strtol(port_s.c_str(), &end, 10);
  if (port_s.empty() || *end != '\0' || port < 0 || port > 65535) {
    throw ConfigError("bad port in '" + address + "'");
  }
  return {host, static_cast<int>(port)};
}

GatewayServer::GatewayServer(std::shared_ptr<scorer::ScorerBackend> backend,
                             const GatewayOptions& options)
    : options_(options),
      metrics_(std::make_shared<MetricsRecorder>()),
      server_(std::make_unique<httplib::Server>()) {
  options_.batching.Validate();
  if (options_.http_threads < 1) throw ConfigError("http_threads must be >= 1");
  batcher_ = std::make_unique<DynamicBatcher>(std::move(backend),
                                              options_.batching, metrics_);
  const size_t threads = static_cast<size_t>(options_.http_threads);
  server_->new_task_queue = [threads] { return new httplib::ThreadPool(threads); };
  // Load clients hold one connection each; the default recycles it every
  // five requests.
  server_->set_keep_alive_max_count(1 << 20);
  InstallRoutes();
}

GatewayServer::~GatewayServer() {
  Stop();
  batcher_->Stop();
}

void GatewayServer::InstallRoutes() {
  server_->Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });

  server_->Get("/metrics", [this](const httplib::Request&,
                                  httplib::Response& res) {
    res.set_content(metrics_->Snapshot().ToJson().dump(), "application/json");
  });

  server_->Post("/v1/schemas", [this](const httplib::Request& req,
                                      httplib::Response& res) {
    try {
      json body = json::parse(req.body);
      if (body.is_object() && body.contains("schema")) body = body["schema"];
      const std::string id =
          schemas_.Register(scorer::wire::SchemaFromJson(body));
      res.set_content(json{{"schema_id", id}}.dump(), "application/json");
    } catch (const json::exception& e) {
      Fail(res, 400, std::string("malformed JSON: ") + e.what());
    } catch (const ProtocolError& e) {
      Fail(res, 400, e.what());
    }
  });

  auto guard = [this](const httplib::Request& req, httplib::Response& res,
                      bool batch) {
    const auto start = std::chrono::steady_clock::now();
    scorer::wire::ScoreRequest request;
    auto client_error = [&](const std::string& message) {
      metrics_->RecordClientError();
      Fail(res, 400, message);
    };
    try {
      request = scorer::wire::RequestFromJson(json::parse(req.body));
    } catch (const json::exception& e) {
      return client_error(std::string("malformed JSON: ") + e.what());
    } catch (const ProtocolError& e) {
      return client_error(e.what());
    }
    if (!batch && request.texts.size() != 1) {
      return client_error("/v1/guard takes exactly one text");
    }
    if (request.texts.empty()) return client_error("no texts");
    std::optional<GuardSchema> schema = request.schema;
    if (!schema) {
      schema = schemas_.Find(*request.schema_id);
      if (!schema) return client_error("unknown schema_id " + *request.schema_id);
    }
    if (schema->empty()) return client_error("schema is empty");

    std::vector<std::future<Completion>> futures;
    bool rejected = false;
    for (auto& text : request.texts) {
      try {
        futures.push_back(batcher_->Submit(std::move(text), *schema));
      } catch (const QueueFullError&) {
        rejected = true;
        break;
      } catch (const std::exception& e) {
        return Fail(res, 500, e.what());
      }
    }
    std::vector<GuardVerdict> verdicts;
    std::string failure;
    Millis model{0};
    for (auto& f : futures) {
      try {
        Completion c = f.get();
        model = std::max(model, c.verdict.scorer_latency);
        verdicts.push_back(std::move(c.verdict));
      } catch (const std::exception& e) {
        failure = e.what();
      }
    }
    if (rejected) return Fail(res, 429, "queue full");
    if (!failure.empty()) return Fail(res, 500, failure);
    auto body = scorer::wire::ResponseToJson(verdicts, model.count());
    body["latency_ms"] = Millis(std::chrono::steady_clock::now() - start).count();
    res.set_content(body.dump(), "application/json");
  };
  server_->Post("/v1/guard", [guard](const httplib::Request& req,
                                     httplib::Response& res) {
    guard(req, res, false);
  });
  server_->Post("/v1/guard:batch", [guard](const httplib::Request& req,
                                           httplib::Response& res) {
    guard(req, res, true);
  });
}

void GatewayServer::Start(const std::string& host, int port) {
  host_ = host;
  if (port == 0) {
    port_ = server_->bind_to_any_port(host);
    if (port_ < 0) throw IoError("cannot bind " + host);
  } else {
    if (!server_->bind_to_port(host, port)) {
      throw IoError("cannot bind " + host + ":" + std::to_string(port));
    }
    port_ = port;
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  Log()->info("gateway listening on {}", endpoint());
}

void GatewayServer::Stop() {
  if (server_) server_->stop();
  std::lock_guard lock(join_mu_);
  if (thread_.joinable()) thread_.join();
}

void GatewayServer::Wait() {
  std::lock_guard lock(join_mu_);
  if (thread_.joinable()) thread_.join();
}

std::string GatewayServer::endpoint() const {
  return "http://" + host_ + ":" + std::to_string(port_);
}

}  // namespace guardgate::servelab
