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

#ifndef GUARDGATE_SCORER_SCORE_SERVER_H_
#define GUARDGATE_SCORER_SCORE_SERVER_H_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "guardgate/core/schema.h"
#include "guardgate/scorer/backend.h"

namespace httplib {
class Server;
}

namespace guardgate::scorer {

// Shared schema_id -> schema table used by HTTP front ends.
class SchemaRegistry {
 public:
  std::string Register(const GuardSchema& schema);
  std::optional<GuardSchema> Find(const std::string& id) const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, GuardSchema> schemas_;
};

// Serves a backend over HTTP:
//   POST /v1/score, POST /v1/schemas, GET /healthz.
class ScoreServer {
 public:
  explicit ScoreServer(std::shared_ptr<ScorerBackend> backend);
  ~ScoreServer();

  ScoreServer(const ScoreServer&) = delete;
  ScoreServer& operator=(const ScoreServer&) = delete;

  // Binds and starts serving on a background thread. Port 0 picks a free
  // port. Throws IoError if the bind fails.
  void Start(const std::string& host = "127.0.0.1", int port = 0);
  void Stop();
  // Blocks until Stop() is called from another thread.
  void Wait();

  int port() const { return port_; }
  std::string endpoint() const;
  SchemaRegistry& schemas() { return schemas_; }

 private:
  void InstallRoutes();

  std::shared_ptr<ScorerBackend> backend_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  std::mutex join_mu_;
  std::string host_;
  int port_ = 0;
  SchemaRegistry schemas_;
};

}  // namespace guardgate::scorer

#endif  // GUARDGATE_SCORER_SCORE_SERVER_H_
