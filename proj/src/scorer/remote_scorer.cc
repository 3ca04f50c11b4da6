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

#include "guardgate/scorer/remote_scorer.h"

#include <httplib.h>

#include <json.hpp>

#include "guardgate/core/error.h"
#include "guardgate/scorer/wire.h"

namespace guardgate::scorer {
namespace {

using nlohmann::json;

httplib::Client MakeClient(const std::string& endpoint,
                           std::chrono::milliseconds timeout) {
  httplib::Client client(endpoint);
  if (!client.is_valid()) throw InvalidArgument("bad endpoint: " + endpoint);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  client.set_keep_alive(false);
  return client;
}

// Returns the parsed body of a 200 response; maps every failure mode to
// the error type callers retry on or give up on.
json Post(const std::string& endpoint, const std::string& path,
          const std::string& body, std::chrono::milliseconds timeout,
          int* status_out = nullptr) {
  httplib::Client client = MakeClient(endpoint, timeout);
  auto res = client.Post(path, body, "application/json");
  if (!res) {
    throw RetriableError(endpoint + path + ": " + httplib::to_string(res.error()));
  }
  if (status_out) *status_out = res->status;
  if (res->status >= 500) {
    throw BackendError(endpoint + path + ": HTTP " +
                       std::to_string(res->status) + ": " + res->body);
  }
  if (res->status != 200) {
    throw ProtocolError(endpoint + path + ": HTTP " +
                        std::to_string(res->status) + ": " + res->body);
  }
  try {
    return json::parse(res->body);
  } catch (const json::exception& e) {
    throw ProtocolError(endpoint + path + ": malformed JSON: " + e.what());
  }
}

}  // namespace

RemoteScorer::RemoteScorer(std::string endpoint, RemoteOptions options)
    : endpoint_(std::move(endpoint)), options_(options) {
  MakeClient(endpoint_, options_.timeout);
}

std::string RemoteScorer::RegisterSchema(const GuardSchema& schema) {
  const json body = Post(endpoint_, "/v1/schemas",
                         wire::SchemaToJson(schema).dump(), options_.timeout);
  auto it = body.find("schema_id");
  if (it == body.end() || !it->is_string()) {
    throw ProtocolError("/v1/schemas: response lacks schema_id");
  }
  std::lock_guard lock(mu_);
  registered_.insert(it->get<std::string>());
  return *it;
}

std::vector<GuardVerdict> RemoteScorer::ScoreBatch(
    std::span<const std::string> texts, const GuardSchema& schema) {
  wire::ScoreRequest request;
  request.texts.assign(texts.begin(), texts.end());
  if (options_.use_schema_id) {
    bool known;
    {
      std::lock_guard lock(mu_);
      known = registered_.count(schema.id()) > 0;
    }
    if (!known && RegisterSchema(schema) != schema.id()) {
      throw ProtocolError("server assigned an unexpected schema_id");
    }
    request.schema_id = schema.id();
  } else {
    request.schema = schema;
  }
  int status = 0;
  json body;
  try {
    body = Post(endpoint_, "/v1/score", wire::RequestToJson(request).dump(),
                options_.timeout, &status);
  } catch (const ProtocolError&) {
    // The server may have restarted and lost its schema table.
    if (!options_.use_schema_id || status != 400) throw;
    RegisterSchema(schema);
    body = Post(endpoint_, "/v1/score", wire::RequestToJson(request).dump(),
                options_.timeout);
  }
  return wire::ResponseFromJson(body, schema, request.texts);
}

std::vector<GuardVerdict> RemoteScore(const std::string& endpoint,
                                      const std::vector<std::string>& texts,
                                      const GuardSchema& schema,
                                      RemoteOptions options) {
  RemoteScorer scorer(endpoint, options);
  return scorer.ScoreBatch(texts, schema);
}

}  // namespace guardgate::scorer
