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

#ifndef GUARDGATE_EVALKIT_REPORT_H_
#define GUARDGATE_EVALKIT_REPORT_H_

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "guardgate/evalkit/strict_match.h"

namespace guardgate::evalkit {

enum class ReportFormat { kJson, kCsv, kMarkdown };

// "json", "csv", "md" or "markdown"; throws InvalidArgument otherwise.
ReportFormat ParseReportFormat(std::string_view name);

nlohmann::ordered_json ReportToJson(const EvalReport& report);
// Throws LoadError on malformed input.
EvalReport ReportFromJson(const nlohmann::json& j);

// Markdown tables print F1 as a percentage with one decimal.
std::string RenderReport(const EvalReport& report, ReportFormat format);
// Throws IoError when the path cannot be written.
void EmitReport(const EvalReport& report, ReportFormat format,
                const std::filesystem::path& path);
EvalReport LoadReport(const std::filesystem::path& path);

}  // namespace guardgate::evalkit

#endif  // GUARDGATE_EVALKIT_REPORT_H_
