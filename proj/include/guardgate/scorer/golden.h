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

#ifndef GUARDGATE_SCORER_GOLDEN_H_
#define GUARDGATE_SCORER_GOLDEN_H_

#include <string>
#include <vector>

#include "guardgate/scorer/wire.h"

namespace guardgate::scorer {

struct GoldenRequest {
  std::string name;
  wire::ScoreRequest request;
};

// The fixed 20-request contract corpus that any /v1/score implementation
// must answer with schema-valid responses. Schemas are sent inline.
std::vector<GoldenRequest> GoldenRequests();

// One JSON object per line: {"name":..., "request":{...}}.
std::string GoldenRequestsJsonl();

struct ConformanceResult {
  std::string name;
  bool ok = false;
  std::string message;
};

// GET /healthz, then every golden request against `endpoint`.
std::vector<ConformanceResult> CheckConformance(const std::string& endpoint);

}  // namespace guardgate::scorer

#endif  // GUARDGATE_SCORER_GOLDEN_H_
