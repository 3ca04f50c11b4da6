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

#include "guardgate/scorer/golden.h"

#include <httplib.h>

#include <json.hpp>

#include "guardgate/core/error.h"

namespace guardgate::scorer {
namespace {

using nlohmann::json;

GuardSchema SafetyOnly() {
  return GuardSchema({{"safety", {"safe", "unsafe"}, false}}, {});
}

GuardSchema PiiOnly() {
  return GuardSchema({}, {{"NAME", "person name"},
                          {"ADDRESS", "postal address street city"},
                          {"EMAIL", "email address"}});
}

GuardSchema MultiTask() {
  return GuardSchema(
      {{"safety", {"safe", "unsafe"}, false},
       {"harm", {"violence", "fraud", "self-harm", "hate"}, true},
       {"language", {"english", "russian", "other"}, false}},
      {{"NAME", "person name"}, {"PHONE", "phone number"}});
}

GoldenRequest Make(std::string name, std::vector<std::string> texts,
                   GuardSchema schema) {
  return {std::move(name), {std::move(texts), std::move(schema), std::nullopt}};
}

}  // namespace

std::vector<GoldenRequest> GoldenRequests() {
  std::vector<GoldenRequest> out;
  out.push_back(Make("safety_single", {"How do I bake bread?"}, SafetyOnly()));
  out.push_back(Make("safety_unsafe_word", {"unsafe"}, SafetyOnly()));
  out.push_back(Make("empty_text", {""}, SafetyOnly()));
  out.push_back(Make("whitespace_text", {"   \t\n "}, MultiTask()));
  out.push_back(Make("pii_entities",
                     {"My name is Ivan Petrov, I live on Lenina street 5."},
                     PiiOnly()));
  out.push_back(Make("cyrillic",
                     {"Меня зовут Иван Петров, адрес: г. Москва, ул. Ленина, "
                      "д. 5"},
                     DefaultGuardSchema()));
  out.push_back(Make("astral_code_points",
                     {"\xF0\x9F\x98\x80 smile \xF0\x9D\x94\xB8 at person name"},
                     PiiOnly()));
  out.push_back(Make("multi_task", {"Send the money to this account now"},
                     MultiTask()));
  out.push_back(Make("batch_of_three",
                     {"first text", "second text about email address",
                      "third"},
                     MultiTask()));
  out.push_back(Make("default_schema",
                     {"Contact: ivan@example.com, +7 912 345-67-89"},
                     DefaultGuardSchema()));
  out.push_back(Make("single_label_many",
                     {"this is a question about cooking"},
                     GuardSchema({{"topic",
                                   {"cooking", "sports", "finance", "travel",
                                    "health", "music", "politics", "science"},
                                   false}},
                                 {})));
  out.push_back(Make("multi_label_only", {"violent fraud"},
                     GuardSchema({{"harm", {"violence", "fraud"}, true}}, {})));
  out.push_back(Make("one_label_task", {"anything"},
                     GuardSchema({{"trivial", {"only"}, false}}, {})));
  out.push_back(Make("entity_no_description", {"ticket ABC-123 opened"},
                     GuardSchema({}, {{"TICKET", ""}})));
  out.push_back(Make("long_text", {std::string(3000, 'a') + " person name"},
                     PiiOnly()));
  out.push_back(Make("punctuation_only", {"!!! ??? ... ,,,"}, MultiTask()));
  out.push_back(Make("newlines", {"person name\nperson name\r\nemail address"},
                     PiiOnly()));
  out.push_back(Make("mixed_scripts",
                     {"Ivan Иванов email address почта"}, MultiTask()));
  out.push_back(Make("label_text_echo",
                     {"person name", "postal address street city"},
                     PiiOnly()));
  out.push_back(Make("batch_of_eight",
                     {"a", "b c", "d e f", "safe", "unsafe", "email address",
                      "phone number", "person name"},
                     MultiTask()));
  return out;
}

std::string GoldenRequestsJsonl() {
  std::string out;
  for (const auto& g : GoldenRequests()) {
    nlohmann::ordered_json line = {{"name", g.name},
                                   {"request", wire::RequestToJson(g.request)}};
    out += line.dump() + "\n";
  }
  return out;
}

std::vector<ConformanceResult> CheckConformance(const std::string& endpoint) {
  std::vector<ConformanceResult> out;
  httplib::Client client(endpoint);
  client.set_connection_timeout(std::chrono::seconds(5));
  client.set_read_timeout(std::chrono::seconds(30));

  ConformanceResult health{"healthz", false, ""};
  if (auto res = client.Get("/healthz"); !res) {
    health.message = httplib::to_string(res.error());
  } else if (res->status != 200 || res->body != "ok") {
    health.message = "HTTP " + std::to_string(res->status) + " body '" +
                     res->body + "'";
  } else {
    health.ok = true;
  }
  out.push_back(health);

  for (const auto& g : GoldenRequests()) {
    ConformanceResult r{g.name, false, ""};
    auto res = client.Post("/v1/score", wire::RequestToJson(g.request).dump(),
                           "application/json");
    if (!res) {
      r.message = httplib::to_string(res.error());
    } else if (res->status != 200) {
      r.message = "HTTP " + std::to_string(res->status) + ": " + res->body;
    } else {
      try {
        wire::ResponseFromJson(json::parse(res->body), *g.request.schema,
                               g.request.texts);
        r.ok = true;
      } catch (const std::exception& e) {
        r.message = e.what();
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace guardgate::scorer
