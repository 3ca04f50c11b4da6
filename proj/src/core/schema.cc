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

#include "guardgate/core/schema.h"

#include <cstdio>
#include <set>
#include <utility>

#include <json.hpp>

#include "guardgate/core/error.h"

namespace guardgate {

uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t hash = 14695981039346656037ULL;
  for (char c : bytes) {
    hash ^= static_cast<uint8_t>(c);
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string HashToHex(uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

std::string CanonicalSchemaBytes(const std::vector<ClassificationTask>& tasks,
                                 const std::vector<EntityType>& entities) {
  nlohmann::ordered_json root = nlohmann::ordered_json::object();
  auto& jtasks = root["tasks"] = nlohmann::ordered_json::array();
  for (const auto& task : tasks) {
    nlohmann::ordered_json t;
    t["name"] = task.name;
    t["labels"] = task.labels;
    t["multi_label"] = task.multi_label;
    jtasks.push_back(std::move(t));
  }
  auto& jents = root["entities"] = nlohmann::ordered_json::array();
  for (const auto& ent : entities) {
    nlohmann::ordered_json e;
    e["label"] = ent.label;
    e["description"] = ent.description;
    jents.push_back(std::move(e));
  }
  return root.dump();
}

std::string CanonicalSchemaBytes(const GuardSchema& schema) {
  return CanonicalSchemaBytes(schema.tasks(), schema.entity_types());
}

GuardSchema::GuardSchema(std::vector<ClassificationTask> tasks,
                         std::vector<EntityType> entity_types)
    : tasks_(std::move(tasks)), entities_(std::move(entity_types)) {
  std::set<std::string> task_names;
  for (const auto& task : tasks_) {
    if (task.name.empty()) throw InvalidArgument("task name is empty");
    if (!task_names.insert(task.name).second) {
      throw InvalidArgument("duplicate task: " + task.name);
    }
    if (task.labels.empty()) {
      throw InvalidArgument("task has no labels: " + task.name);
    }
    std::set<std::string> labels;
    for (const auto& label : task.labels) {
      if (!labels.insert(label).second) {
        throw InvalidArgument("duplicate label '" + label + "' in task " +
                              task.name);
      }
    }
  }
  std::set<std::string> entity_labels;
  for (const auto& ent : entities_) {
    if (ent.label.empty()) throw InvalidArgument("entity label is empty");
    if (!entity_labels.insert(ent.label).second) {
      throw InvalidArgument("duplicate entity label: " + ent.label);
    }
  }
  hash_ = Fnv1a64(CanonicalSchemaBytes(tasks_, entities_));
}

std::string GuardSchema::id() const { return HashToHex(hash_); }

int GuardSchema::label_count() const {
  int k = static_cast<int>(entities_.size());
  for (const auto& task : tasks_) k += static_cast<int>(task.labels.size());
  return k;
}

const ClassificationTask* GuardSchema::FindTask(std::string_view name) const {
  for (const auto& task : tasks_) {
    if (task.name == name) return &task;
  }
  return nullptr;
}

GuardSchema DefaultGuardSchema() {
  std::vector<ClassificationTask> tasks = {
      {"safety", {"safe", "unsafe"}, false},
  };
  std::vector<EntityType> entities = {
      {"NAME", "full names of people in any grammatical case"},
      {"PHONE_NUMBER", "phone numbers"},
      {"EMAIL", "email addresses"},
      {"ADDRESS", "physical addresses: city, street, building, apartment"},
      {"BANK_CARD_NUMBER", "bank card numbers"},
      {"CVC", "card verification codes, CVC or CVV"},
      {"INN", "taxpayer identification number"},
      {"KPP", "tax registration reason code"},
      {"OGRN", "state registration number of a company"},
      {"OGRNIP", "state registration number of an individual entrepreneur"},
      {"SNILS", "social insurance number"},
      {"PASSPORT_NUMBER", "passport series and number"},
      {"TOKEN", "API tokens, secret keys, recovery keys"},
  };
  return GuardSchema(std::move(tasks), std::move(entities));
}

}  // namespace guardgate
