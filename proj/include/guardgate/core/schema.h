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

#ifndef GUARDGATE_CORE_SCHEMA_H_
#define GUARDGATE_CORE_SCHEMA_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace guardgate {

struct ClassificationTask {
  std::string name;
  std::vector<std::string> labels;
  bool multi_label = false;

  friend bool operator==(const ClassificationTask&,
                         const ClassificationTask&) = default;
};

struct EntityType {
  std::string label;
  std::string description;

  friend bool operator==(const EntityType&, const EntityType&) = default;
};

// 64-bit FNV-1a over raw bytes.
uint64_t Fnv1a64(std::string_view bytes);

// The label space that conditions every scorer call: classification tasks
// plus entity types with natural-language descriptions. Immutable once
// built; the content hash is computed at construction.
class GuardSchema {
 public:
  GuardSchema() : GuardSchema(std::vector<ClassificationTask>{},
                              std::vector<EntityType>{}) {}
  // Throws InvalidArgument on duplicate task names, empty or duplicate
  // labels within a task, or duplicate entity labels.
  GuardSchema(std::vector<ClassificationTask> tasks,
              std::vector<EntityType> entity_types);

  const std::vector<ClassificationTask>& tasks() const { return tasks_; }
  const std::vector<EntityType>& entity_types() const { return entities_; }
  uint64_t hash() const { return hash_; }
  // Lowercase 16-digit hex of hash(); used as the wire schema_id.
  std::string id() const;

  // Total number of labels across tasks and entity types.
  int label_count() const;
  bool empty() const { return tasks_.empty() && entities_.empty(); }

  const ClassificationTask* FindTask(std::string_view name) const;

  friend bool operator==(const GuardSchema& a, const GuardSchema& b) {
    return a.tasks_ == b.tasks_ && a.entities_ == b.entities_;
  }

 private:
  std::vector<ClassificationTask> tasks_;
  std::vector<EntityType> entities_;
  uint64_t hash_ = 0;
};

// Deterministic JSON encoding with a fixed field order:
//   {"tasks":[{"name":..,"labels":[..],"multi_label":..}],
//    "entities":[{"label":..,"description":..}]}
// Task and entity order is preserved as given. schema.hash() is the FNV-1a
// digest of these bytes.
std::string CanonicalSchemaBytes(const std::vector<ClassificationTask>& tasks,
                                 const std::vector<EntityType>& entities);
std::string CanonicalSchemaBytes(const GuardSchema& schema);

std::string HashToHex(uint64_t hash);

// Safety task ("safety": safe/unsafe) plus the 13 PII entity types.
GuardSchema DefaultGuardSchema();

}  // namespace guardgate

#endif  // GUARDGATE_CORE_SCHEMA_H_
