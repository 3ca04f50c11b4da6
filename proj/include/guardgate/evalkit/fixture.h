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

#ifndef GUARDGATE_EVALKIT_FIXTURE_H_
#define GUARDGATE_EVALKIT_FIXTURE_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "guardgate/core/span.h"
#include "guardgate/evalkit/bench.h"

namespace guardgate::evalkit {

struct DomainQuota {
  std::string domain;
  int count = 0;
  int with_pii = 0;

  friend bool operator==(const DomainQuota&, const DomainQuota&) = default;
};

struct FixtureConfig {
  // Examples per entity type in the entity split; each holds one type only.
  int per_entity_type = 70;
  std::vector<std::string> entity_types;  // empty = all 13 canonical types
  std::vector<DomainQuota> domains = DefaultDomainQuotas();
  uint64_t seed = 20260101;

  static std::vector<DomainQuota> DefaultDomainQuotas();
  // Keys: per_entity_type, entity_types, domains [{domain,count,with_pii}],
  // seed. Unknown keys and negative counts throw ConfigError.
  static FixtureConfig FromJson(const nlohmann::json& j);
  static FixtureConfig FromFile(const std::filesystem::path& path);
  void Validate() const;
};

struct Fixture {
  std::vector<BenchExample> entity_split;
  std::vector<BenchExample> domain_split;

  std::vector<BenchExample> All() const;
};

// Deterministic in the config. Structured identifiers carry valid check
// digits; gold offsets are exact by construction.
Fixture GenerateFixture(const FixtureConfig& config);

// An address whose model output arrives as fragments (city, street,
// building, ...) separated by short separator runs.
struct FragmentCase {
  BenchExample example;
  // Raw spans in the model's own label vocabulary.
  std::vector<Span> model_spans;
};

// Every case fragments into at least two components.
std::vector<FragmentCase> GenerateAddressFragmentSuite(uint64_t seed,
                                                       int count);

}  // namespace guardgate::evalkit

#endif  // GUARDGATE_EVALKIT_FIXTURE_H_
