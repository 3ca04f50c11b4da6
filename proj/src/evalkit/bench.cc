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

#include "guardgate/evalkit/bench.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "guardgate/core/error.h"
#include "guardgate/core/unicode.h"
#include "guardgate/spanforge/label_map.h"

namespace guardgate::evalkit {
namespace {

using nlohmann::json;

// Records examined when deciding the offset convention.
constexpr size_t kConventionProbe = 50;

struct RawEntity {
  int64_t start = 0;
  int64_t end = 0;
  std::string type;
};

struct RawRecord {
  std::string id;
  std::string text;
  std::string domain;
  std::vector<RawEntity> entities;
};

std::string Where(const std::string& origin, size_t index) {
  return origin + " record " + std::to_string(index + 1);
}

RawRecord ParseRecord(const json& j, const std::string& where) {
  if (!j.is_object()) throw LoadError(where + ": not a JSON object");
  RawRecord r;
  auto str = [&](const char* key) -> std::string {
    auto it = j.find(key);
    if (it == j.end()) throw LoadError(where + ": missing \"" + key + "\"");
    if (it->is_string()) return it->get<std::string>();
    if (std::string_view(key) == "id" && it->is_number_integer()) {
      return it->dump();
    }
    throw LoadError(where + ": \"" + key + "\" must be a string");
  };
  r.id = str("id");
  r.text = str("text");
  r.domain = str("domain");
  auto ents = j.find("entities");
  if (ents == j.end() || !ents->is_array()) {
    throw LoadError("example " + r.id + ": \"entities\" must be an array");
  }
  for (const json& e : *ents) {
    if (!e.is_object() || !e.contains("start") || !e.contains("end") ||
        !e.contains("type") || !e["start"].is_number_integer() ||
        !e["end"].is_number_integer() || !e["type"].is_string()) {
      throw LoadError("example " + r.id +
                      ": entity needs integer start/end and string type");
    }
    r.entities.push_back({e["start"].get<int64_t>(), e["end"].get<int64_t>(),
                          e["type"].get<std::string>()});
  }
  return r;
}

std::vector<RawRecord> ParseRecords(std::string_view content,
                                    const std::string& origin) {
  std::vector<RawRecord> out;
  const size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return out;
  try {
    if (content[first] == '[') {
      const json arr = json::parse(content);
      for (size_t i = 0; i < arr.size(); ++i) {
        out.push_back(ParseRecord(arr[i], Where(origin, i)));
      }
      return out;
    }
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= content.size()) {
      size_t nl = content.find('\n', pos);
      if (nl == std::string_view::npos) nl = content.size();
      const std::string_view line = content.substr(pos, nl - pos);
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
        out.push_back(ParseRecord(json::parse(line),
                                  origin + " line " + std::to_string(line_no)));
      }
      pos = nl + 1;
    }
  } catch (const json::exception& e) {
    throw LoadError(origin + ": malformed JSON: " + e.what());
  }
  return out;
}

bool FitsCodePoints(const RawRecord& r) {
  const int64_t n = static_cast<int64_t>(DecodeUtf8(r.text).size());
  return std::all_of(r.entities.begin(), r.entities.end(), [&](const RawEntity& e) {
    return e.start >= 0 && e.start < e.end && e.end <= n;
  });
}

// Maps UTF-16 offsets to code points; nullopt where an offset is out of
// range or splits a surrogate pair.
std::vector<std::optional<int>> Utf16ToCodePoint(std::u32string_view text) {
  std::vector<std::optional<int>> map;
  for (size_t i = 0; i < text.size(); ++i) {
    map.push_back(static_cast<int>(i));
    if (text[i] > 0xFFFF) map.push_back(std::nullopt);
  }
  map.push_back(static_cast<int>(text.size()));
  return map;
}

bool FitsUtf16(const RawRecord& r) {
  const auto map = Utf16ToCodePoint(DecodeUtf8(r.text));
  const int64_t n = static_cast<int64_t>(map.size()) - 1;
  return std::all_of(r.entities.begin(), r.entities.end(), [&](const RawEntity& e) {
    return e.start >= 0 && e.start < e.end && e.end <= n && map[e.start] &&
           map[e.end];
  });
}

OffsetConvention DecideConvention(const std::vector<RawRecord>& records,
                                  const std::string& origin) {
  const size_t probe = std::min(records.size(), kConventionProbe);
  bool cp = true;
  bool u16 = true;
  for (size_t i = 0; i < probe; ++i) {
    cp = cp && FitsCodePoints(records[i]);
    u16 = u16 && FitsUtf16(records[i]);
  }
  if (cp) return OffsetConvention::kCodePoints;
  if (u16) return OffsetConvention::kUtf16;
  for (size_t i = 0; i < probe; ++i) {
    if (!FitsCodePoints(records[i])) {
      throw LoadError("example " + records[i].id + " (" + origin +
                      "): span out of bounds; offsets fit neither code "
                      "points nor UTF-16 units");
    }
  }
  throw LoadError(origin + ": inconsistent offset convention");
}

BenchExample ToExample(const RawRecord& r, OffsetConvention convention) {
  BenchExample ex{r.id, r.text, r.domain, {}};
  std::vector<std::optional<int>> map;
  if (convention == OffsetConvention::kUtf16) {
    map = Utf16ToCodePoint(DecodeUtf8(r.text));
  }
  for (const RawEntity& e : r.entities) {
    const auto oob = [&] {
      return LoadError("example " + r.id + ": span [" + std::to_string(e.start) +
                       "," + std::to_string(e.end) + ") out of bounds");
    };
    int64_t start = e.start;
    int64_t end = e.end;
    if (convention == OffsetConvention::kUtf16) {
      if (start < 0 || end < 0 || end >= static_cast<int64_t>(map.size()) ||
          start >= static_cast<int64_t>(map.size()) || !map[start] ||
          !map[end]) {
        throw oob();
      }
      start = *map[start];
      end = *map[end];
    }
    if (start < 0 || end > INT32_MAX) throw oob();
    ex.gold.push_back(Span{static_cast<int>(start), static_cast<int>(end),
                           e.type, 1.0, SpanSource::kModel});
  }
  std::sort(ex.gold.begin(), ex.gold.end(), SpanPositionLess);
  return ex;
}

}  // namespace

const std::vector<std::string>& BenchDomains() {
  static const std::vector<std::string> domains = {
      "S-BANK", "S-TELECOM", "S-DELIVERY", "S-AUTO",  "S-HR",
      "S-RE",   "S-SUPPORT", "L-CHAT",     "L-DIALOG"};
  return domains;
}

bool IsBenchDomain(std::string_view domain) {
  const auto& d = BenchDomains();
  return std::find(d.begin(), d.end(), domain) != d.end();
}

void ValidateExample(const BenchExample& example) {
  const std::string who = "example " + example.id;
  if (!IsBenchDomain(example.domain)) {
    throw LoadError(who + ": unknown domain '" + example.domain + "'");
  }
  const int n = CodePointLength(example.text);
  const auto& labels = spanforge::CanonicalLabels();
  for (const Span& s : example.gold) {
    if (!IsWellFormed(s, n)) {
      throw LoadError(who + ": span [" + std::to_string(s.start) + "," +
                      std::to_string(s.end) + ") out of bounds for length " +
                      std::to_string(n));
    }
    if (std::find(labels.begin(), labels.end(), s.label) == labels.end()) {
      throw LoadError(who + ": unknown entity type '" + s.label + "'");
    }
  }
  std::vector<Span> sorted = example.gold;
  std::sort(sorted.begin(), sorted.end(), SpanPositionLess);
  if (!PairwiseDisjoint(sorted)) {
    throw LoadError(who + ": overlapping gold spans");
  }
}

OffsetConvention DetectOffsetConvention(std::string_view content) {
  return DecideConvention(ParseRecords(content, "<input>"), "<input>");
}

std::vector<BenchExample> ParseBench(std::string_view content,
                                     const std::string& origin) {
  const std::vector<RawRecord> records = ParseRecords(content, origin);
  const OffsetConvention convention = DecideConvention(records, origin);
  std::vector<BenchExample> out;
  out.reserve(records.size());
  for (const RawRecord& r : records) {
    out.push_back(ToExample(r, convention));
    ValidateExample(out.back());
  }
  return out;
}

std::vector<BenchExample> LoadBench(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseBench(buf.str(), path.string());
}

nlohmann::ordered_json ExampleToJson(const BenchExample& example) {
  nlohmann::ordered_json ents = nlohmann::ordered_json::array();
  for (const Span& s : example.gold) {
    ents.push_back({{"start", s.start}, {"end", s.end}, {"type", s.label}});
  }
  return {{"id", example.id},
          {"text", example.text},
          {"domain", example.domain},
          {"entities", std::move(ents)}};
}

std::string SerializeBench(const std::vector<BenchExample>& examples) {
  std::string out;
  for (const auto& ex : examples) {
    out += ExampleToJson(ex).dump(-1, ' ', false,
                                  nlohmann::json::error_handler_t::strict);
    out += '\n';
  }
  return out;
}

void WriteBench(const std::filesystem::path& path,
                const std::vector<BenchExample>& examples) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << SerializeBench(examples);
  if (!out.flush()) throw IoError("write failed: " + path.string());
}

}  // namespace guardgate::evalkit
