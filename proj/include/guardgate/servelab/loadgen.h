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

#ifndef GUARDGATE_SERVELAB_LOADGEN_H_
#define GUARDGATE_SERVELAB_LOADGEN_H_

#include <string>

#include "guardgate/core/schema.h"
#include "guardgate/servelab/metrics.h"

namespace guardgate::servelab {

enum class LoadMode { kOpen, kClosed };

// Throws InvalidArgument.
LoadMode ParseLoadMode(const std::string& s);

struct LoadConfig {
  LoadMode mode = LoadMode::kClosed;
  // Closed loop: requests kept in flight.
  int concurrency = 1;
  // Open loop: fixed send schedule, independent of completions.
  double target_rps = 100.0;
  double duration_s = 10.0;
  // Requests sent before warmup ends are not measured.
  double warmup_s = 2.0;
  std::string endpoint;  // http://host:port of a gateway
  std::string text = "Please check my order status.";
  GuardSchema schema = DefaultGuardSchema();
  double request_timeout_s = 10.0;
};

// Drives POST /v1/guard. Counts non-200 answers and transport failures as
// failures. Open-loop latency is measured from the scheduled send time.
// Throws InvalidArgument on zero duration or a bad parameter, and
// RetriableError when the endpoint is not healthy.
ServingMetrics LoadGenerate(const LoadConfig& config);

}  // namespace guardgate::servelab

#endif  // GUARDGATE_SERVELAB_LOADGEN_H_
