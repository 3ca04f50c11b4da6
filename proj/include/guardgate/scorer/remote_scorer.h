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

#ifndef GUARDGATE_SCORER_REMOTE_SCORER_H_
#define GUARDGATE_SCORER_REMOTE_SCORER_H_

#include <chrono>
#include <mutex>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "guardgate/scorer/backend.h"

namespace guardgate::scorer {

struct RemoteOptions {
  std::chrono::milliseconds timeout{2000};
  // Register schemas once via /v1/schemas and send only their id.
  bool use_schema_id = false;
};

// Client for a scorer served over the /v1/score protocol.
//
// Errors: transport failure or timeout -> RetriableError; HTTP >= 500 ->
// BackendError; any other non-200 status, malformed JSON, or a response
// that breaks verdict invariants -> ProtocolError.
class RemoteScorer : public ScorerBackend {
 public:
  // `endpoint` is "http://host:port".
  explicit RemoteScorer(std::string endpoint, RemoteOptions options = {});

  std::vector<GuardVerdict> ScoreBatch(std::span<const std::string> texts,
                                       const GuardSchema& schema) override;

  // Returns the server-assigned schema id.
  std::string RegisterSchema(const GuardSchema& schema);

  const std::string& endpoint() const { return endpoint_; }

 private:
  std::string endpoint_;
  RemoteOptions options_;
  std::mutex mu_;
  std::set<std::string> registered_;
};

std::vector<GuardVerdict> RemoteScore(const std::string& endpoint,
                                      const std::vector<std::string>& texts,
                                      const GuardSchema& schema,
                                      RemoteOptions options = {});

}  // namespace guardgate::scorer

#endif  // GUARDGATE_SCORER_REMOTE_SCORER_H_
