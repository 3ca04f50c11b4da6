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

#include "guardgate/evalkit/report.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "guardgate/core/error.h"
#include "guardgate/spanforge/label_map.h"

namespace guardgate::evalkit {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string Fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string Pct(double v) { return Fixed(100.0 * v, 1); }

// Canonical labels in table order, then anything else alphabetically.
std::vector<std::string> LabelOrder(const EvalReport& report) {
  std::vector<std::string> out;
  for (const auto& l : spanforge::CanonicalLabels()) {
    if (report.per_label.count(l)) out.push_back(l);
  }
  for (const auto& [l, _] : report.per_label) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return out;
}

double DomainAverage(const EvalReport& report) {
  std::vector<double> v;
  for (const auto& [_, f1] : report.per_domain) v.push_back(f1);
  return UnweightedMean(v);
}

std::string Markdown(const EvalReport& r) {
  std::ostringstream out;
  out << "## Per-entity F1 (%)\n\n"
      << "| Entity | Precision | Recall | F1 |\n"
      << "|---|---:|---:|---:|\n";
  for (const auto& label : LabelOrder(r)) {
    const LabelScore& s = r.per_label.at(label);
    out << "| " << label << " | " << Pct(s.prf.precision) << " | "
        << Pct(s.prf.recall) << " | " << Pct(s.prf.f1) << " |\n";
  }
  out << "| **Avg** | | | " << Pct(r.macro_f1) << " |\n\n";

  out << "## Per-domain F1 (%)\n\n"
      << "| Domain | F1 |\n"
      << "|---|---:|\n";
  for (const auto& [domain, f1] : r.per_domain) {
    out << "| " << domain << " | " << Pct(f1) << " |\n";
  }
  out << "| **Avg** | " << Pct(DomainAverage(r)) << " |\n\n";

  out << "## Summary\n\n"
      << "| Metric | Value |\n"
      << "|---|---:|\n"
      << "| Examples | " << r.examples << " |\n"
      << "| Macro F1 (%) | " << Pct(r.macro_f1) << " |\n"
      << "| Micro F1 (%) | " << Pct(r.micro_f1) << " |\n"
      << "| Total chars | " << r.char_stats.total_chars << " |\n"
      << "| PII chars | " << r.char_stats.pii_chars << " |\n"
      << "| PII fraction (%) | " << Pct(r.char_stats.pii_fraction) << " |\n";
  return out.str();
}

std::string Csv(const EvalReport& r) {
  std::ostringstream out;
  out << "scope,name,tp,fp,fn,precision,recall,f1\n";
  for (const auto& label : LabelOrder(r)) {
    const LabelScore& s = r.per_label.at(label);
    out << "label," << label << "," << s.counts.tp << "," << s.counts.fp << ","
        << s.counts.fn << "," << Fixed(s.prf.precision, 6) << ","
        << Fixed(s.prf.recall, 6) << "," << Fixed(s.prf.f1, 6) << "\n";
  }
  for (const auto& [domain, f1] : r.per_domain) {
    out << "domain," << domain << ",,,,,," << Fixed(f1, 6) << "\n";
  }
  out << "summary,macro_f1,,,,,," << Fixed(r.macro_f1, 6) << "\n"
      << "summary,micro_f1,,,,,," << Fixed(r.micro_f1, 6) << "\n"
      << "summary,examples,,,,,," << r.examples << "\n"
      << "summary,total_chars,,,,,," << r.char_stats.total_chars << "\n"
      << "summary,pii_chars,,,,,," << r.char_stats.pii_chars << "\n"
      << "summary,pii_fraction,,,,,," << Fixed(r.char_stats.pii_fraction, 6)
      << "\n";
  return out.str();
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "md" || name == "markdown") return ReportFormat::kMarkdown;
  throw InvalidArgument("unknown report format '" + std::string(name) +
                        "' (want json, csv or md)");
}

ordered_json ReportToJson(const EvalReport& r) {
  ordered_json labels = ordered_json::object();
  for (const auto& label : LabelOrder(r)) {
    const LabelScore& s = r.per_label.at(label);
    labels[label] = {{"tp", s.counts.tp},           {"fp", s.counts.fp},
                     {"fn", s.counts.fn},           {"precision", s.prf.precision},
                     {"recall", s.prf.recall},      {"f1", s.prf.f1}};
  }
  ordered_json domains = ordered_json::object();
  for (const auto& [d, f1] : r.per_domain) domains[d] = f1;
  return {{"examples", r.examples},
          {"macro_f1", r.macro_f1},
          {"micro_f1", r.micro_f1},
          {"char_stats",
           {{"total_chars", r.char_stats.total_chars},
            {"pii_chars", r.char_stats.pii_chars},
            {"pii_fraction", r.char_stats.pii_fraction}}},
          {"per_label", std::move(labels)},
          {"per_domain", std::move(domains)}};
}

EvalReport ReportFromJson(const json& j) {
  EvalReport r;
  try {
    r.examples = j.at("examples").get<int64_t>();
    r.macro_f1 = j.at("macro_f1").get<double>();
    r.micro_f1 = j.at("micro_f1").get<double>();
    const json& cs = j.at("char_stats");
    r.char_stats = {cs.at("total_chars").get<int64_t>(),
                    cs.at("pii_chars").get<int64_t>(),
                    cs.at("pii_fraction").get<double>()};
    for (const auto& [label, s] : j.at("per_label").items()) {
      r.per_label[label] = {{s.at("tp").get<int64_t>(), s.at("fp").get<int64_t>(),
                             s.at("fn").get<int64_t>()},
                            {s.at("precision").get<double>(),
                             s.at("recall").get<double>(), s.at("f1").get<double>()}};
    }
    for (const auto& [domain, f1] : j.at("per_domain").items()) {
      r.per_domain[domain] = f1.get<double>();
    }
  } catch (const json::exception& e) {
    throw LoadError(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string RenderReport(const EvalReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return ReportToJson(report).dump(2) + "\n";
    case ReportFormat::kCsv: return Csv(report);
    case ReportFormat::kMarkdown: return Markdown(report);
  }
  return {};
}

void EmitReport(const EvalReport& report, ReportFormat format,
                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write report to " + path.string());
  out << RenderReport(report, format);
  if (!out.flush()) throw IoError("write failed: " + path.string());
}

EvalReport LoadReport(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open report " + path.string());
  try {
    return ReportFromJson(json::parse(in));
  } catch (const json::exception& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

}  // namespace guardgate::evalkit
