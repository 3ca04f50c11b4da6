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

#ifndef GUARDGATE_EVALKIT_BENCH_H_
#define GUARDGATE_EVALKIT_BENCH_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "guardgate/core/span.h"

namespace guardgate::evalkit {

// The nine benchmark domains, S-* (sensitive) first.
const std::vector<std::string>& BenchDomains();
bool IsBenchDomain(std::string_view domain);

struct BenchExample {
  std::string id;
  std::string text;
  std::string domain;
  // Code-point offsets, sorted by position, pairwise disjoint.
  std::vector<Span> gold;

  friend bool operator==(const BenchExample&, const BenchExample&) = default;
};

// How a source file counts offsets. Everything in memory uses code points.
enum class OffsetConvention { kCodePoints, kUtf16 };

// Throws LoadError naming the example on bad bounds, overlaps, or unknown
// labels or domains.
void ValidateExample(const BenchExample& example);

// Accepts JSON lines or one top-level array. The first 50 records decide
// the offset convention: code points when they are consistent, otherwise
// UTF-16 (converted on load), otherwise LoadError.
std::vector<BenchExample> ParseBench(std::string_view content,
                                     const std::string& origin = "<input>");
std::vector<BenchExample> LoadBench(const std::filesystem::path& path);
// Convention detected for `content`; exposed for diagnostics and tests.
OffsetConvention DetectOffsetConvention(std::string_view content);

// {"id","text","domain","entities":[{"start","end","type"}]}
nlohmann::ordered_json ExampleToJson(const BenchExample& example);
// One record per line, trailing newline.
std::string SerializeBench(const std::vector<BenchExample>& examples);
// Throws IoError.
void WriteBench(const std::filesystem::path& path,
                const std::vector<BenchExample>& examples);

}  // namespace guardgate::evalkit

#endif  // GUARDGATE_EVALKIT_BENCH_H_
