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

#include "guardgate/spanforge/label_map.h"

#include <algorithm>
#include <mutex>
#include <set>

#include "guardgate/core/error.h"
#include "guardgate/core/log.h"

namespace guardgate::spanforge {
namespace {

constexpr char kDrop[] = "DROP";

}  // namespace

const std::vector<std::string>& CanonicalLabels() {
  static const std::vector<std::string> labels = {
      "NAME",  "PHONE_NUMBER", "EMAIL", "ADDRESS", "BANK_CARD_NUMBER",
      "CVC",   "INN",          "KPP",   "OGRN",    "OGRNIP",
      "SNILS", "PASSPORT_NUMBER", "TOKEN"};
  return labels;
}

LabelMap LabelMap::Defaults() {
  std::map<std::string, std::optional<std::string>> m;
  for (const char* l : {"person", "first_name", "last_name", "alias", "title"}) {
    m[l] = "NAME";
  }
  for (const char* l : {"address", "street", "city", "region", "country",
                        "postal_code", "unit", "district", "building",
                        "landmark"}) {
    m[l] = "ADDRESS";
  }
  m["email"] = "EMAIL";
  m["phone"] = "PHONE_NUMBER";
  m["messenger"] = "PHONE_NUMBER";
  m["national_id"] = "INN";
  m["document_id"] = "PASSPORT_NUMBER";
  m["passport"] = "PASSPORT_NUMBER";
  m["card_number"] = "BANK_CARD_NUMBER";
  for (const char* l : {"bank_account", "crypto_wallet", "social_account",
                        "company", "product", "government", "education",
                        "media", "event_date", "date_of_birth"}) {
    m[l] = std::nullopt;
  }
  for (const auto& canonical : CanonicalLabels()) m[canonical] = canonical;
  return LabelMap(std::move(m));
}

LabelMap::LabelMap(std::map<std::string, std::optional<std::string>> entries)
    : entries_(std::move(entries)) {}

LabelMap LabelMap::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("label_map must be an object");
  std::map<std::string, std::optional<std::string>> m;
  const auto& canonical = CanonicalLabels();
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) {
      throw ConfigError("label_map value for '" + key + "' must be a string");
    }
    const std::string target = value.get<std::string>();
    if (target == kDrop) {
      m[key] = std::nullopt;
    } else if (std::find(canonical.begin(), canonical.end(), target) !=
               canonical.end()) {
      m[key] = target;
    } else {
      throw ConfigError("label_map target '" + target +
                        "' is not a canonical label or DROP");
    }
  }
  return LabelMap(std::move(m));
}

std::optional<std::string> LabelMap::Lookup(const std::string& label) const {
  auto it = entries_.find(label);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool LabelMap::Contains(const std::string& label) const {
  return entries_.count(label) > 0;
}

nlohmann::json LabelMap::ToJson() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : entries_) j[k] = v.value_or(kDrop);
  return j;
}

std::vector<Span> MapLabels(const std::vector<Span>& spans,
                            const LabelMap& map) {
  static std::mutex warned_mu;
  static std::set<std::string> warned;
  std::vector<Span> out;
  out.reserve(spans.size());
  for (const Span& span : spans) {
    if (!map.Contains(span.label)) {
      std::lock_guard<std::mutex> lock(warned_mu);
      if (warned.insert(span.label).second) {
        Log()->warn("unmapped model label '{}' dropped", span.label);
      }
      continue;
    }
    auto target = map.Lookup(span.label);
    if (!target) continue;
    Span mapped = span;
    mapped.label = *target;
    out.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace guardgate::spanforge
