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

#ifndef GUARDGATE_SCORER_WIRE_H_
#define GUARDGATE_SCORER_WIRE_H_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "guardgate/core/schema.h"
#include "guardgate/core/verdict.h"

namespace guardgate::scorer::wire {

// JSON codec for the /v1/score protocol.
//
//   request:  {"texts":[str], "schema":{...}} | {"texts":[str], "schema_id":hex}
//   response: {"verdicts":[{"classifications":[{"task","distribution":{label:p},
//              "predicted","confidence"}], "entities":[{"start","end","label",
//              "score"}]}], "model_ms":num}
//
// A verdict carries "truncated": true only when the input was cut.

nlohmann::ordered_json SchemaToJson(const GuardSchema& schema);
// Throws ProtocolError on malformed input.
GuardSchema SchemaFromJson(const nlohmann::json& j);

nlohmann::ordered_json VerdictToJson(const GuardVerdict& verdict);
// Validates against the schema and, when given, the text length in code
// points. Throws ProtocolError.
GuardVerdict VerdictFromJson(const nlohmann::json& j, const GuardSchema& schema,
                             int text_length = -1);

struct ScoreRequest {
  std::vector<std::string> texts;
  std::optional<GuardSchema> schema;
  std::optional<std::string> schema_id;
};

nlohmann::ordered_json RequestToJson(const ScoreRequest& request);
// Throws ProtocolError.
ScoreRequest RequestFromJson(const nlohmann::json& j);

nlohmann::ordered_json ResponseToJson(const std::vector<GuardVerdict>& verdicts,
                                      double model_ms);
// Validates one verdict per text; scorer_latency is taken from model_ms.
std::vector<GuardVerdict> ResponseFromJson(const nlohmann::json& j,
                                           const GuardSchema& schema,
                                           const std::vector<std::string>& texts);

}  // namespace guardgate::scorer::wire

#endif  // GUARDGATE_SCORER_WIRE_H_
