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

#include "guardgate/rulepii/detector.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "guardgate/core/error.h"
#include "guardgate/core/unicode.h"
#include "guardgate/rulepii/validators.h"

namespace guardgate::rulepii {
namespace {

constexpr double kTokenMinEntropy = 3.0;
constexpr size_t kTokenMinLength = 20;

std::wstring ToWide(std::u32string_view text) {
  return std::wstring(text.begin(), text.end());
}

bool HasChecksum(std::string_view label) {
  return label == "BANK_CARD_NUMBER" || label == "INN" || label == "SNILS" ||
         label == "OGRN" || label == "OGRNIP";
}

struct Candidate {
  Span span;
  size_t detector = 0;
  bool checksummed = false;
};

// True if the folded keyword occurs entirely inside [lo, hi) of `folded`.
bool KeywordNear(const std::u32string& folded, int lo, int hi,
                 const std::u32string& keyword) {
  if (keyword.empty()) return false;
  const std::u32string_view window =
      std::u32string_view(folded).substr(lo, hi - lo);
  return window.find(keyword) != std::u32string_view::npos;
}

}  // namespace

const std::vector<std::string>& StructuredLabels() {
  static const std::vector<std::string> labels = {
      "EMAIL", "PHONE_NUMBER", "BANK_CARD_NUMBER", "CVC",
      "INN",   "KPP",          "OGRN",             "OGRNIP",
      "SNILS", "PASSPORT_NUMBER", "TOKEN"};
  return labels;
}

bool IsStructuredLabel(std::string_view label) {
  const auto& labels = StructuredLabels();
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

ValidatorOutcome ValidateCandidate(std::string_view label,
                                   std::string_view matched_text) {
  ValidatorOutcome out;
  out.matched_text = std::string(matched_text);
  const std::string digits = DigitsOnly(matched_text);
  if (label == "BANK_CARD_NUMBER") {
    out.format_valid = digits.size() >= 13 && digits.size() <= 19;
    out.checksum_valid = out.format_valid && ValidateCardLuhn(digits);
  } else if (label == "INN") {
    out.format_valid = digits.size() == 10 || digits.size() == 12;
    out.checksum_valid = out.format_valid && ValidateInn(digits);
  } else if (label == "SNILS") {
    out.format_valid = digits.size() == 11;
    out.checksum_valid = out.format_valid && ValidateSnils(digits);
  } else if (label == "OGRN") {
    out.format_valid = digits.size() == 13;
    out.checksum_valid = out.format_valid && ValidateOgrn(digits);
  } else if (label == "OGRNIP") {
    out.format_valid = digits.size() == 15;
    out.checksum_valid = out.format_valid && ValidateOgrnip(digits);
  } else if (label == "KPP") {
    out.format_valid = ValidateKppFormat(matched_text);
  } else if (label == "PHONE_NUMBER") {
    out.format_valid = NormalizePhone(matched_text).has_value();
  } else if (label == "CVC") {
    out.format_valid = (digits.size() == 3 || digits.size() == 4) &&
                       digits.size() == matched_text.size();
  } else if (label == "PASSPORT_NUMBER") {
    out.format_valid = digits.size() == 10;
  } else if (label == "TOKEN") {
    const std::u32string cps = DecodeUtf8(matched_text);
    const bool has_digit = std::any_of(cps.begin(), cps.end(), IsAsciiDigit);
    const bool has_letter = std::any_of(cps.begin(), cps.end(), [](char32_t c) {
      return IsAsciiAlnum(c) && !IsAsciiDigit(c);
    });
    out.format_valid = cps.size() >= kTokenMinLength && has_digit &&
                       has_letter && ShannonEntropy(cps) >= kTokenMinEntropy;
  } else if (label == "EMAIL") {
    const auto at = matched_text.find('@');
    out.format_valid = at != std::string_view::npos && at > 0 &&
                       matched_text.find('.', at) != std::string_view::npos;
  }
  if (out.checksum_valid.has_value() && !out.format_valid) {
    out.checksum_valid = false;
  }
  return out;
}

DetectorRegistry DetectorRegistry::Defaults() {
  std::vector<DetectorSpec> specs = {
      {"EMAIL",
       R"([A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)*\.[A-Za-z]{2,})",
       false, false, {}, 0},
      {"PHONE_NUMBER",
       R"((?:\+7|8)[ -]?\(?\d{3}\)?[ -]?\d{3}[ .-]?\d{2}[ .-]?\d{2})", false,
       false, {}, 0},
      {"BANK_CARD_NUMBER", R"(\d{17,19}|\d{4}(?:[ -]?\d{4}){3})", true, false,
       {}, 0},
      {"CVC", R"(\d{3,4})", false, true, {"cvc", "cvv", "код"}, 16},
      {"INN", R"(\d{12}|\d{10})", true, false, {}, 0},
      {"KPP", R"(\d{4}[0-9A-Z]{2}\d{3})", false, false, {}, 0},
      {"OGRN", R"(\d{13})", true, false, {}, 0},
      {"OGRNIP", R"(\d{15})", true, false, {}, 0},
      {"SNILS", R"(\d{3}-\d{3}-\d{3}[ -]\d{2}|\d{3} \d{3} \d{3} \d{2}|\d{11})",
       true, false, {}, 0},
      {"PASSPORT_NUMBER", R"(\d{2} ?\d{2} ?(?:№ ?)?\d{6})", false, true,
       {"паспорт", "серия"}, 32},
      {"TOKEN", R"([A-Za-z0-9_+/=.-]{20,})", false, false, {}, 0},
  };
  return DetectorRegistry(std::move(specs));
}

DetectorRegistry::DetectorRegistry(std::vector<DetectorSpec> specs)
    : specs_(std::move(specs)) {
  std::set<std::string> seen;
  for (const auto& spec : specs_) {
    if (!IsStructuredLabel(spec.label)) {
      throw ConfigError("detector for unknown label: " + spec.label);
    }
    if (!seen.insert(spec.label).second) {
      throw ConfigError("duplicate detector for label: " + spec.label);
    }
    if (spec.requires_checksum && !HasChecksum(spec.label)) {
      throw ConfigError("label " + spec.label + " has no checksum");
    }
    if (spec.requires_context && spec.context_keywords.empty()) {
      throw ConfigError("detector " + spec.label +
                        " requires context but lists no keywords");
    }
    if (spec.context_window < 0) {
      throw ConfigError("negative context_window for " + spec.label);
    }
    try {
      compiled_.push_back(std::make_shared<const std::wregex>(
          ToWide(DecodeUtf8(spec.pattern)), std::regex::ECMAScript));
    } catch (const std::regex_error& e) {
      throw ConfigError("bad pattern for " + spec.label + ": " + e.what());
    }
    std::vector<std::u32string> keywords;
    for (const auto& kw : spec.context_keywords) {
      keywords.push_back(FoldCase(DecodeUtf8(kw)));
    }
    folded_keywords_.push_back(std::move(keywords));
  }
}

DetectorRegistry DetectorRegistry::FromJson(const nlohmann::json& specs) {
  if (!specs.is_array()) throw ConfigError("detector registry must be an array");
  static const std::set<std::string> kKeys = {
      "label",           "pattern",          "requires_checksum",
      "requires_context", "context_keywords", "context_window"};
  std::vector<DetectorSpec> out;
  for (const auto& item : specs) {
    if (!item.is_object()) throw ConfigError("detector entry must be an object");
    for (const auto& [key, value] : item.items()) {
      if (!kKeys.count(key)) throw ConfigError("unknown detector key: " + key);
    }
    try {
      DetectorSpec spec;
      spec.label = item.at("label").get<std::string>();
      spec.pattern = item.at("pattern").get<std::string>();
      spec.requires_checksum = item.value("requires_checksum", false);
      spec.requires_context = item.value("requires_context", false);
      spec.context_keywords =
          item.value("context_keywords", std::vector<std::string>{});
      spec.context_window = item.value("context_window", 16);
      out.push_back(std::move(spec));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("bad detector entry: ") + e.what());
    }
  }
  return DetectorRegistry(std::move(out));
}

DetectorRegistry DetectorRegistry::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open detector registry " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("detector registry " + path.string() + ": " + e.what());
  }
  return FromJson(j);
}

nlohmann::json DetectorRegistry::ToJson() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& spec : specs_) {
    out.push_back({{"label", spec.label},
                   {"pattern", spec.pattern},
                   {"requires_checksum", spec.requires_checksum},
                   {"requires_context", spec.requires_context},
                   {"context_keywords", spec.context_keywords},
                   {"context_window", spec.context_window}});
  }
  return out;
}

std::vector<Span> DetectStructured(std::string_view text,
                                   const DetectorRegistry& registry) {
  const std::u32string cps = DecodeUtf8(text);
  const std::wstring wide = ToWide(cps);
  const int n = static_cast<int>(cps.size());
  std::u32string folded;
  bool folded_ready = false;

  std::vector<Candidate> candidates;
  for (size_t d = 0; d < registry.specs_.size(); ++d) {
    const DetectorSpec& spec = registry.specs_[d];
    const std::wregex& re = *registry.compiled_[d];
    int pos = 0;
    while (pos < n) {
      std::wsmatch m;
      const auto flags = pos > 0 ? std::regex_constants::match_prev_avail
                                 : std::regex_constants::match_default;
      if (!std::regex_search(wide.cbegin() + pos, wide.cend(), m, re, flags)) {
        break;
      }
      const int start = pos + static_cast<int>(m.position(0));
      int end = start + static_cast<int>(m.length(0));
      if (spec.label == "TOKEN") {
        while (end > start && cps[end - 1] == U'.') --end;
      }
      if (end <= start) {
        pos = start + 1;
        continue;
      }
      const bool left_ok =
          start == 0 || !(IsAsciiAlnum(cps[start - 1]) && IsAsciiAlnum(cps[start]));
      const bool right_ok =
          end == n || !(IsAsciiAlnum(cps[end]) && IsAsciiAlnum(cps[end - 1]));
      bool accept = left_ok && right_ok;
      if (accept) {
        const std::string matched = EncodeUtf8(
            std::u32string_view(cps).substr(start, end - start));
        const ValidatorOutcome outcome = ValidateCandidate(spec.label, matched);
        accept = outcome.format_valid &&
                 (!spec.requires_checksum || outcome.checksum_valid.value_or(false));
      }
      if (accept && spec.requires_context) {
        if (!folded_ready) {
          folded = FoldCase(cps);
          folded_ready = true;
        }
        const int lo = std::max(0, start - spec.context_window);
        const int hi = std::min(n, end + spec.context_window);
        accept = std::any_of(
            registry.folded_keywords_[d].begin(),
            registry.folded_keywords_[d].end(),
            [&](const std::u32string& kw) { return KeywordNear(folded, lo, hi, kw); });
      }
      if (!accept) {
        pos = start + 1;
        continue;
      }
      Candidate c;
      c.span = Span{start, end, spec.label, 1.0, SpanSource::kRule};
      c.detector = d;
      c.checksummed = spec.requires_checksum;
      candidates.push_back(std::move(c));
      pos = end;
    }
  }

  // Cross-detector conflicts: longer first, then checksum-backed detectors,
  // then earlier start, then registry order.
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return std::make_tuple(-a.span.length(), !a.checksummed,
                                     a.span.start, a.detector) <
                     std::make_tuple(-b.span.length(), !b.checksummed,
                                     b.span.start, b.detector);
            });
  std::vector<Span> out;
  for (auto& c : candidates) {
    const bool clash = std::any_of(out.begin(), out.end(), [&](const Span& s) {
      return SpansOverlap(s, c.span);
    });
    if (!clash) out.push_back(std::move(c.span));
  }
  std::sort(out.begin(), out.end(), SpanPositionLess);
  return out;
}

}  // namespace guardgate::rulepii
