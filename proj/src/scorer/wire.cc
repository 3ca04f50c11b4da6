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

#include "guardgate/scorer/wire.h"

#include <chrono>

#include "guardgate/core/error.h"
#include "guardgate/core/unicode.h"

namespace guardgate::scorer::wire {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& Field(const json& j, const char* key, json::value_t type,
                  const char* where) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ProtocolError(std::string(where) + ": missing \"" + key + "\"");
  }
  const bool number_ok = type == json::value_t::number_float && it->is_number();
  const bool int_ok = type == json::value_t::number_integer &&
                      it->is_number_integer();
  if (it->type() != type && !number_ok && !int_ok) {
    throw ProtocolError(std::string(where) + ": \"" + key +
                        "\" has the wrong type");
  }
  return *it;
}

void RequireObject(const json& j, const char* where) {
  if (!j.is_object()) throw ProtocolError(std::string(where) + " is not an object");
}

ClassificationResult ClassificationFromJson(const json& j,
                                            const ClassificationTask& task) {
  RequireObject(j, "classification");
  ClassificationResult r;
  r.task = Field(j, "task", json::value_t::string, "classification");
  const json& dist = Field(j, "distribution", json::value_t::object,
                           "classification");
  if (dist.size() != task.labels.size()) {
    throw ProtocolError("task " + task.name + ": distribution has " +
                        std::to_string(dist.size()) + " labels, schema has " +
                        std::to_string(task.labels.size()));
  }
  for (const std::string& label : task.labels) {
    auto it = dist.find(label);
    if (it == dist.end() || !it->is_number()) {
      throw ProtocolError("task " + task.name + ": no probability for '" +
                          label + "'");
    }
    r.distribution.emplace_back(label, it->get<double>());
  }
  r.predicted = Field(j, "predicted", json::value_t::string, "classification");
  r.confidence =
      Field(j, "confidence", json::value_t::number_float, "classification");
  return r;
}

}  // namespace

ordered_json SchemaToJson(const GuardSchema& schema) {
  ordered_json tasks = ordered_json::array();
  for (const auto& t : schema.tasks()) {
    tasks.push_back({{"name", t.name},
                     {"labels", t.labels},
                     {"multi_label", t.multi_label}});
  }
  ordered_json entities = ordered_json::array();
  for (const auto& e : schema.entity_types()) {
    entities.push_back({{"label", e.label}, {"description", e.description}});
  }
  return {{"tasks", std::move(tasks)}, {"entities", std::move(entities)}};
}

GuardSchema SchemaFromJson(const json& j) {
  RequireObject(j, "schema");
  for (const auto& [key, _] : j.items()) {
    if (key != "tasks" && key != "entities") {
      throw ProtocolError("schema: unknown key \"" + key + "\"");
    }
  }
  std::vector<ClassificationTask> tasks;
  std::vector<EntityType> entities;
  try {
    if (j.contains("tasks")) {
      for (const json& t : Field(j, "tasks", json::value_t::array, "schema")) {
        RequireObject(t, "task");
        ClassificationTask task;
        task.name = Field(t, "name", json::value_t::string, "task");
        const json& labels = Field(t, "labels", json::value_t::array, "task");
        for (const json& l : labels) {
          if (!l.is_string()) throw ProtocolError("task: label is not a string");
          task.labels.push_back(l);
        }
        if (t.contains("multi_label")) {
          task.multi_label =
              Field(t, "multi_label", json::value_t::boolean, "task");
        }
        tasks.push_back(std::move(task));
      }
    }
    if (j.contains("entities")) {
      for (const json& e :
           Field(j, "entities", json::value_t::array, "schema")) {
        RequireObject(e, "entity");
        EntityType type;
        type.label = Field(e, "label", json::value_t::string, "entity");
        if (e.contains("description")) {
          type.description =
              Field(e, "description", json::value_t::string, "entity");
        }
        entities.push_back(std::move(type));
      }
    }
    return GuardSchema(std::move(tasks), std::move(entities));
  } catch (const InvalidArgument& e) {
    throw ProtocolError(std::string("schema: ") + e.what());
  }
}

ordered_json VerdictToJson(const GuardVerdict& verdict) {
  ordered_json classifications = ordered_json::array();
  for (const auto& c : verdict.classifications) {
    ordered_json dist = ordered_json::object();
    for (const auto& [label, p] : c.distribution) dist[label] = p;
    classifications.push_back({{"task", c.task},
                               {"distribution", std::move(dist)},
                               {"predicted", c.predicted},
                               {"confidence", c.confidence}});
  }
  ordered_json entities = ordered_json::array();
  for (const auto& s : verdict.entities) {
    entities.push_back({{"start", s.start},
                        {"end", s.end},
                        {"label", s.label},
                        {"score", s.score}});
  }
  ordered_json out = {{"classifications", std::move(classifications)},
                      {"entities", std::move(entities)}};
  if (verdict.truncated) out["truncated"] = true;
  return out;
}

GuardVerdict VerdictFromJson(const json& j, const GuardSchema& schema,
                             int text_length) {
  RequireObject(j, "verdict");
  GuardVerdict v;
  const json& cls =
      Field(j, "classifications", json::value_t::array, "verdict");
  if (cls.size() != schema.tasks().size()) {
    throw ProtocolError("verdict: expected " +
                        std::to_string(schema.tasks().size()) +
                        " classifications, got " + std::to_string(cls.size()));
  }
  for (size_t i = 0; i < cls.size(); ++i) {
    v.classifications.push_back(
        ClassificationFromJson(cls[i], schema.tasks()[i]));
  }
  for (const json& e : Field(j, "entities", json::value_t::array, "verdict")) {
    RequireObject(e, "entity");
    Span s;
    s.start = Field(e, "start", json::value_t::number_integer, "entity");
    s.end = Field(e, "end", json::value_t::number_integer, "entity");
    s.label = Field(e, "label", json::value_t::string, "entity");
    s.score = Field(e, "score", json::value_t::number_float, "entity");
    if (!(s.score >= 0.0 && s.score <= 1.0)) {
      throw ProtocolError("entity: score out of [0,1]");
    }
    s.source = SpanSource::kModel;
    v.entities.push_back(std::move(s));
  }
  if (j.contains("truncated")) {
    v.truncated = Field(j, "truncated", json::value_t::boolean, "verdict");
  }
  if (auto err = CheckVerdict(v, schema, text_length)) {
    throw ProtocolError("verdict: " + *err);
  }
  return v;
}

ordered_json RequestToJson(const ScoreRequest& request) {
  ordered_json j = {{"texts", request.texts}};
  if (request.schema) j["schema"] = SchemaToJson(*request.schema);
  if (request.schema_id) j["schema_id"] = *request.schema_id;
  return j;
}

ScoreRequest RequestFromJson(const json& j) {
  RequireObject(j, "request");
  ScoreRequest r;
  for (const auto& [key, _] : j.items()) {
    if (key != "texts" && key != "schema" && key != "schema_id") {
      throw ProtocolError("request: unknown key \"" + key + "\"");
    }
  }
  for (const json& t : Field(j, "texts", json::value_t::array, "request")) {
    if (!t.is_string()) throw ProtocolError("request: text is not a string");
    r.texts.push_back(t);
  }
  if (j.contains("schema")) r.schema = SchemaFromJson(j["schema"]);
  if (j.contains("schema_id")) {
    r.schema_id = Field(j, "schema_id", json::value_t::string, "request")
                      .get<std::string>();
  }
  if (r.schema.has_value() == r.schema_id.has_value()) {
    throw ProtocolError("request: exactly one of schema or schema_id required");
  }
  return r;
}

ordered_json ResponseToJson(const std::vector<GuardVerdict>& verdicts,
                            double model_ms) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : verdicts) arr.push_back(VerdictToJson(v));
  return {{"verdicts", std::move(arr)}, {"model_ms", model_ms}};
}

std::vector<GuardVerdict> ResponseFromJson(
    const json& j, const GuardSchema& schema,
    const std::vector<std::string>& texts) {
  RequireObject(j, "response");
  const json& arr = Field(j, "verdicts", json::value_t::array, "response");
  const double model_ms =
      Field(j, "model_ms", json::value_t::number_float, "response");
  if (arr.size() != texts.size()) {
    throw ProtocolError("response: " + std::to_string(arr.size()) +
                        " verdicts for " + std::to_string(texts.size()) +
                        " texts");
  }
  std::vector<GuardVerdict> out;
  out.reserve(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) {
    GuardVerdict v = VerdictFromJson(
        arr[i], schema, static_cast<int>(CodePointLength(texts[i])));
    v.scorer_latency = Millis(model_ms);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace guardgate::scorer::wire
