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

#ifndef GUARDGATE_CLI_APP_H_
#define GUARDGATE_CLI_APP_H_

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "guardgate/cascade/cascade.h"
#include "guardgate/scorer/backend.h"
#include "guardgate/servelab/batching.h"
#include "guardgate/spanforge/merge.h"
#include "guardgate/spanforge/pipeline.h"

namespace guardgate::cli {

// Everything the commands share, read from one JSON file. Relative paths
// resolve against the file's directory.
struct AppConfig {
  std::optional<std::filesystem::path> detectors;  // detector registry
  std::optional<std::filesystem::path> label_map;
  spanforge::MergePolicy merge_policy;
  // "reference" or the http:// endpoint of a /v1/score server.
  std::string scorer = "reference";
  int scorer_timeout_ms = 2000;
  cascade::CascadePolicy cascade;
  servelab::BatchingConfig batching;
  std::string address = "127.0.0.1:8080";
  std::optional<std::filesystem::path> bench;
  std::optional<std::filesystem::path> fixture;  // gen-bench config

  // Unknown keys, bad values and missing files throw ConfigError.
  static AppConfig FromJson(const nlohmann::json& j,
                            const std::filesystem::path& base_dir = {});
  static AppConfig FromFile(const std::filesystem::path& path);

  // GUARD_ADDR, GUARD_SCORER, GUARD_MAX_BATCH, GUARD_FLUSH_TIMEOUT_MS.
  void ApplyEnv();

  spanforge::PipelineConfig Pipeline() const;
  std::shared_ptr<scorer::ScorerBackend> MakeScorer() const;
};

// Entry point behind the guardgate binary. `args` excludes the program
// name. Returns 0 on success, 1 on a runtime error, 2 on a usage error.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace guardgate::cli

#endif  // GUARDGATE_CLI_APP_H_
