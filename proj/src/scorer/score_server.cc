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

#include "guardgate/scorer/score_server.h"

#include <httplib.h>

#include <chrono>
#include <json.hpp>

#include "guardgate/core/error.h"
#include "guardgate/core/log.h"
#include "guardgate/scorer/wire.h"

namespace guardgate::scorer {
namespace {

using nlohmann::json;

void Fail(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(json{{"error", message}}.dump(), "application/json");
}

}  // namespace

std::string SchemaRegistry::Register(const GuardSchema& schema) {
  std::lock_guard lock(mu_);
  const std::string id = schema.id();
  schemas_.insert_or_assign(id, schema);
  return id;
}

std::optional<GuardSchema> SchemaRegistry::Find(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = schemas_.find(id);
  if (it == schemas_.end()) return std::nullopt;
  return it->second;
}

ScoreServer::ScoreServer(std::shared_ptr<ScorerBackend> backend)
    : backend_(std::move(backend)), server_(std::make_unique<httplib::Server>()) {
  server_->set_keep_alive_max_count(1 << 20);
  InstallRoutes();
}

ScoreServer::~ScoreServer() { Stop(); }

void ScoreServer::InstallRoutes() {
  server_->Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });

  server_->Post("/v1/schemas", [this](const httplib::Request& req,
                                      httplib::Response& res) {
    try {
      json body = json::parse(req.body);
      if (body.is_object() && body.contains("schema")) body = body["schema"];
      const std::string id = schemas_.Register(wire::SchemaFromJson(body));
      res.set_content(json{{"schema_id", id}}.dump(), "application/json");
    } catch (const json::exception& e) {
      Fail(res, 400, std::string("malformed JSON: ") + e.what());
    } catch (const ProtocolError& e) {
      Fail(res, 400, e.what());
    }
  });

  server_->Post("/v1/score", [this](const httplib::Request& req,
                                    httplib::Response& res) {
    wire::ScoreRequest request;
    try {
      request = wire::RequestFromJson(json::parse(req.body));
    } catch (const json::exception& e) {
      return Fail(res, 400, std::string("malformed JSON: ") + e.what());
    } catch (const ProtocolError& e) {
      return Fail(res, 400, e.what());
    }
    std::optional<GuardSchema> schema = request.schema;
    if (!schema) {
      schema = schemas_.Find(*request.schema_id);
      if (!schema) {
        return Fail(res, 400, "unknown schema_id " + *request.schema_id);
      }
    }
    if (schema->empty()) return Fail(res, 400, "schema is empty");
    try {
      const auto start = std::chrono::steady_clock::now();
      const auto verdicts = backend_->ScoreBatch(request.texts, *schema);
      const Millis elapsed = std::chrono::steady_clock::now() - start;
      res.set_content(wire::ResponseToJson(verdicts, elapsed.count()).dump(),
                      "application/json");
    } catch (const InvalidArgument& e) {
      Fail(res, 400, e.what());
    } catch (const std::exception& e) {
      Log()->error("scorer backend failed: {}", e.what());
      Fail(res, 500, e.what());
    }
  });
}

void ScoreServer::Start(const std::string& host, int port) {
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
}

void ScoreServer::Stop() {
  if (server_) server_->stop();
  std::lock_guard lock(join_mu_);
  if (thread_.joinable()) thread_.join();
}

void ScoreServer::Wait() {
  std::lock_guard lock(join_mu_);
  if (thread_.joinable()) thread_.join();
}

std::string ScoreServer::endpoint() const {
  return "http://" + host_ + ":" + std::to_string(port_);
}

}  // namespace guardgate::scorer
