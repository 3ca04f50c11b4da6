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

#include "guardgate/evalkit/fixture.h"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "guardgate/core/error.h"
#include "guardgate/core/unicode.h"
#include "guardgate/rulepii/validators.h"
#include "guardgate/spanforge/label_map.h"
#include "lexicon.h"

namespace guardgate::evalkit {
namespace {

namespace lx = lexicon;

// Bounded draws use plain modulo on mt19937_64 output: the standard fixes
// the engine's sequence but not the distributions', and fixtures must be
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  int Pick(int n) { return static_cast<int>(engine_() % static_cast<uint64_t>(n)); }
  bool Chance(int percent) { return Pick(100) < percent; }
  int Range(int lo, int hi) { return lo + Pick(hi - lo + 1); }

  template <typename T>
  const T& Choice(const std::vector<T>& items) {
    return items[Pick(static_cast<int>(items.size()))];
  }

  std::string Digits(int n) {
    std::string out;
    for (int i = 0; i < n; ++i) out.push_back(static_cast<char>('0' + Pick(10)));
    return out;
  }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Pick(static_cast<int>(i))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::string Lower(const std::string& s) { return EncodeUtf8(FoldCase(DecodeUtf8(s))); }

std::string MakeName(Rng& rng, lx::Case c) {
  const auto& names = lx::Names();
  const bool female = rng.Chance(45);
  const std::string& stem = rng.Choice(names.male_surnames);
  static const char* kMaleSuffix[] = {"", "а", "у"};
  static const char* kFemaleSuffix[] = {"а", "ой", "ой"};
  const std::string surname = stem + (female ? kFemaleSuffix[c] : kMaleSuffix[c]);
  const std::string first =
      rng.Choice(female ? names.female_first : names.male_first).forms[c];
  static const char* kMalePatronymic[] = {"ич", "ича", "ичу"};
  static const char* kFemalePatronymic[] = {"на", "ны", "не"};
  const std::string patronymic =
      rng.Choice(names.patronymic_stems) +
      (female ? kFemalePatronymic[c] : kMalePatronymic[c]);
  std::string out;
  switch (rng.Pick(5)) {
    case 0: out = surname + " " + first; break;
    case 1: out = first + " " + surname; break;
    case 2: out = surname + " " + first + " " + patronymic; break;
    case 3: out = first + " " + patronymic; break;
    default: out = first + " " + patronymic + " " + surname; break;
  }
  // Chat users rarely capitalise.
  if (rng.Chance(10)) out = Lower(out);
  return out;
}

// (model label, text) fragments joined by ", ".
using AddressParts = std::vector<std::pair<std::string, std::string>>;

AddressParts MakeAddress(Rng& rng) {
  const auto& a = lx::Addresses();
  const std::string city = rng.Choice(a.cities);
  std::string street = rng.Choice(a.street_types);
  street += " " + rng.Choice(a.streets);
  const std::string building = "д. " + std::to_string(rng.Range(1, 150));
  const std::string unit = "кв. " + std::to_string(rng.Range(1, 300));
  switch (rng.Pick(5)) {
    case 0:
      return {{"city", "г. " + city}, {"street", street}, {"building", building},
              {"unit", unit}};
    case 1:
      return {{"postal_code", std::to_string(rng.Range(101000, 692999))},
              {"city", "г. " + city}, {"street", street}, {"building", building}};
    case 2:
      return {{"region", rng.Choice(a.regions)}, {"city", "г. " + city},
              {"street", street}, {"building", building}};
    case 3:
      return {{"street", street}, {"building", building}};
    default:
      return {{"city", city}, {"street", street}, {"building", building},
              {"building", "корп. " + std::to_string(rng.Range(1, 5))},
              {"unit", unit}};
  }
}

std::string JoinAddress(const AddressParts& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i].second;
  }
  return out;
}

std::string MakePhone(Rng& rng) {
  const std::string d = "9" + rng.Digits(9);
  const std::string a = d.substr(0, 3), b = d.substr(3, 3), c = d.substr(6, 2),
                    e = d.substr(8, 2);
  switch (rng.Pick(6)) {
    case 0: return "+7 " + a + " " + b + "-" + c + "-" + e;
    case 1: return "+7 (" + a + ") " + b + "-" + c + "-" + e;
    case 2: return "8 (" + a + ") " + b + "-" + c + "-" + e;
    case 3: return "8-" + a + "-" + b + "-" + c + "-" + e;
    case 4: return "+7" + d;
    default: return "8 " + a + " " + b + " " + c + " " + e;
  }
}

std::string MakeEmail(Rng& rng) {
  std::string login = rng.Choice(lx::Logins());
  if (rng.Chance(30)) login += std::to_string(rng.Range(1, 99));
  return login + "@" + rng.Choice(lx::MailDomains());
}

std::string MakeCard(Rng& rng) {
  static const std::vector<std::string> kPrefixes = {"4276", "5469", "2202",
                                                     "4279", "5536", "2200"};
  std::string body = rng.Choice(kPrefixes);
  body += rng.Digits(11);
  const std::string digits = body + std::to_string(rulepii::LuhnCheckDigit(body));
  switch (rng.Pick(3)) {
    case 0:
      return digits;
    default: {
      const std::string sep = rng.Chance(70) ? " " : "-";
      return digits.substr(0, 4) + sep + digits.substr(4, 4) + sep +
             digits.substr(8, 4) + sep + digits.substr(12, 4);
    }
  }
}

std::string RegionPrefix(Rng& rng) {
  static const std::vector<std::string> kRegions = {"77", "78", "50", "66",
                                                    "54", "16", "63", "23"};
  return rng.Choice(kRegions);
}

std::string MakeInn(Rng& rng) {
  if (rng.Chance(50)) {
    std::string body = RegionPrefix(rng);
    body += rng.Digits(7);
    return body + std::to_string(rulepii::Inn10CheckDigit(body));
  }
  std::string body = RegionPrefix(rng);
  body += rng.Digits(8);
  const int check = rulepii::Inn12CheckDigits(body);
  return body + std::to_string(check / 10) + std::to_string(check % 10);
}

std::string MakeKpp(Rng& rng) {
  static const std::vector<std::string> kReasons = {"01", "01", "43", "45",
                                                    "AB", "50"};
  std::string kpp = RegionPrefix(rng);
  kpp += rng.Digits(2);
  kpp += rng.Choice(kReasons);
  return kpp + "001";
}

std::string MakeOgrn(Rng& rng) {
  std::string body = rng.Chance(70) ? "1" : "5";
  body += rng.Digits(2);
  body += RegionPrefix(rng);
  body += rng.Digits(7);
  return body + std::to_string(rulepii::OgrnCheckDigit(body));
}

std::string MakeOgrnip(Rng& rng) {
  std::string body = "3" + rng.Digits(2);
  body += RegionPrefix(rng);
  body += rng.Digits(9);
  return body + std::to_string(rulepii::OgrnipCheckDigit(body));
}

std::string MakeSnils(Rng& rng) {
  // Check digits are defined only above 001-001-998.
  std::string body;
  do {
    body = rng.Digits(9);
  } while (body <= "001001998");
  const int s = rulepii::SnilsChecksum(body);
  const std::string check = std::to_string(s / 10) + std::to_string(s % 10);
  switch (rng.Pick(4)) {
    case 0:
      return body + check;
    case 1:
      return body.substr(0, 3) + " " + body.substr(3, 3) + " " +
             body.substr(6, 3) + " " + check;
    default:
      return body.substr(0, 3) + "-" + body.substr(3, 3) + "-" +
             body.substr(6, 3) + " " + check;
  }
}

std::string MakePassport(Rng& rng) {
  std::string series = RegionPrefix(rng);
  series += rng.Digits(2);
  const std::string number = rng.Digits(6);
  switch (rng.Pick(3)) {
    case 0: return series.substr(0, 2) + " " + series.substr(2) + " " + number;
    case 1: return series + " " + number;
    default: return series.substr(0, 2) + " " + series.substr(2) + " № " + number;
  }
}

std::string RandomChars(Rng& rng, int n, std::string_view alphabet) {
  std::string out;
  for (int i = 0; i < n; ++i) out.push_back(alphabet[rng.Pick(static_cast<int>(alphabet.size()))]);
  return out;
}

std::string MakeToken(Rng& rng) {
  constexpr std::string_view kAlnum =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
  constexpr std::string_view kHex = "0123456789abcdef";
  constexpr std::string_view kUpper = "ABCDEFGHJKLMNPQRSTUVWXYZ23456789";
  std::string token;
  switch (rng.Pick(4)) {
    case 0: token = "sk-" + RandomChars(rng, 40, kAlnum); break;
    case 1: token = "ghp_" + RandomChars(rng, 36, kAlnum); break;
    case 2:
      for (int len : {8, 4, 4, 4, 12}) {
        if (!token.empty()) token += "-";
        token += RandomChars(rng, len, kHex);
      }
      break;
    default:
      for (int g = 0; g < 6; ++g) {
        if (g) token += "-";
        token += RandomChars(rng, 4, kUpper);
      }
  }
  // Validators demand both letters and digits; force one of each.
  if (token.find_first_of("0123456789") == std::string::npos) token.back() = '7';
  if (token.find_first_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ") ==
      std::string::npos) {
    token.front() = 'k';
  }
  return token;
}

std::string MakeCvc(Rng& rng) { return rng.Digits(3); }

struct Built {
  std::string text;
  std::vector<Span> gold;
  std::vector<Span> fragments;  // model-vocabulary address parts
};

void Append(Built& b, const std::string& piece) { b.text += piece; }

void AppendEntity(Built& b, const std::string& label, lx::Case c, Rng& rng) {
  const int start = CodePointLength(b.text);
  std::string value;
  if (label == "NAME") {
    value = MakeName(rng, c);
  } else if (label == "ADDRESS") {
    const AddressParts parts = MakeAddress(rng);
    int pos = start;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) pos += 2;
      const int len = CodePointLength(parts[i].second);
      b.fragments.push_back(Span{pos, pos + len, parts[i].first, 0.9, SpanSource::kModel});
      pos += len;
    }
    value = JoinAddress(parts);
  } else if (label == "PHONE_NUMBER") {
    value = MakePhone(rng);
  } else if (label == "EMAIL") {
    value = MakeEmail(rng);
  } else if (label == "BANK_CARD_NUMBER") {
    value = MakeCard(rng);
  } else if (label == "CVC") {
    value = MakeCvc(rng);
  } else if (label == "INN") {
    value = MakeInn(rng);
  } else if (label == "KPP") {
    value = MakeKpp(rng);
  } else if (label == "OGRN") {
    value = MakeOgrn(rng);
  } else if (label == "OGRNIP") {
    value = MakeOgrnip(rng);
  } else if (label == "SNILS") {
    value = MakeSnils(rng);
  } else if (label == "PASSPORT_NUMBER") {
    value = MakePassport(rng);
  } else if (label == "TOKEN") {
    value = MakeToken(rng);
  } else {
    throw ConfigError("no generator for entity type " + label);
  }
  b.text += value;
  b.gold.push_back(Span{start, start + CodePointLength(value), label, 1.0,
                        SpanSource::kModel});
}

// Expands "{LABEL}" and "{LABEL:gen|dat}" slots.
void Fill(Built& b, std::string_view tmpl, Rng& rng) {
  size_t pos = 0;
  while (pos < tmpl.size()) {
    const size_t open = tmpl.find('{', pos);
    if (open == std::string_view::npos) {
      Append(b, std::string(tmpl.substr(pos)));
      break;
    }
    Append(b, std::string(tmpl.substr(pos, open - pos)));
    const size_t close = tmpl.find('}', open);
    std::string_view slot = tmpl.substr(open + 1, close - open - 1);
    lx::Case c = lx::kNominative;
    if (const size_t colon = slot.find(':'); colon != std::string_view::npos) {
      const std::string_view form = slot.substr(colon + 1);
      c = form == "gen" ? lx::kGenitive : form == "dat" ? lx::kDative : lx::kNominative;
      slot = slot.substr(0, colon);
    }
    AppendEntity(b, std::string(slot), c, rng);
    pos = close + 1;
  }
}

std::string Separator(const std::string& domain) {
  return domain == "L-DIALOG" ? "\n" : " ";
}

// Pads with a slot-free sentence from the same domain now and then.
void MaybePad(Built& b, const std::string& domain, Rng& rng, int percent) {
  const auto& clean = lx::DomainCleanTemplates(domain);
  if (clean.empty() || !rng.Chance(percent)) return;
  size_t pick = rng.Pick(static_cast<int>(clean.size()));
  if (b.text.find(clean[pick]) != std::string::npos) pick = (pick + 1) % clean.size();
  const std::string& sentence = clean[pick];
  if (rng.Chance(50)) {
    b.text = sentence + Separator(domain) + b.text;
    const int shift = CodePointLength(sentence + Separator(domain));
    for (auto* list : {&b.gold, &b.fragments}) {
      for (Span& s : *list) {
        s.start += shift;
        s.end += shift;
      }
    }
  } else {
    b.text += Separator(domain) + sentence;
  }
}

BenchExample ToExample(std::string id, const std::string& domain, Built b) {
  std::sort(b.gold.begin(), b.gold.end(), SpanPositionLess);
  return BenchExample{std::move(id), std::move(b.text), domain, std::move(b.gold)};
}

std::string Numbered(const std::string& prefix, int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d", i + 1);
  return prefix + "-" + buf;
}

}  // namespace

std::vector<DomainQuota> FixtureConfig::DefaultDomainQuotas() {
  return {{"S-BANK", 100, 65},    {"S-TELECOM", 100, 62}, {"S-DELIVERY", 100, 51},
          {"S-AUTO", 100, 58},    {"S-HR", 100, 65},      {"S-RE", 100, 66},
          {"S-SUPPORT", 100, 55}, {"L-CHAT", 100, 50},    {"L-DIALOG", 100, 50}};
}

void FixtureConfig::Validate() const {
  if (per_entity_type < 0) throw ConfigError("per_entity_type must be >= 0");
  for (const auto& label : entity_types) {
    if (lx::EntityTemplates(label).empty()) {
      throw ConfigError("no fixture templates for entity type " + label);
    }
  }
  std::set<std::string> seen;
  for (const auto& q : domains) {
    if (!IsBenchDomain(q.domain)) throw ConfigError("unknown domain " + q.domain);
    if (!seen.insert(q.domain).second) throw ConfigError("duplicate domain " + q.domain);
    if (q.count < 0 || q.with_pii < 0 || q.with_pii > q.count) {
      throw ConfigError("domain " + q.domain + ": need 0 <= with_pii <= count");
    }
  }
}

FixtureConfig FixtureConfig::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("fixture config must be an object");
  FixtureConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "per_entity_type") {
        cfg.per_entity_type = value.get<int>();
      } else if (key == "entity_types") {
        cfg.entity_types = value.get<std::vector<std::string>>();
      } else if (key == "seed") {
        cfg.seed = value.get<uint64_t>();
      } else if (key == "domains") {
        cfg.domains.clear();
        for (const auto& d : value) {
          for (const auto& [k, _] : d.items()) {
            if (k != "domain" && k != "count" && k != "with_pii") {
              throw ConfigError("fixture domain: unknown key " + k);
            }
          }
          cfg.domains.push_back({d.at("domain").get<std::string>(),
                                 d.at("count").get<int>(),
                                 d.at("with_pii").get<int>()});
        }
      } else {
        throw ConfigError("fixture config: unknown key " + key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("fixture config: ") + e.what());
  }
  cfg.Validate();
  return cfg;
}

FixtureConfig FixtureConfig::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open fixture config " + path.string());
  try {
    return FromJson(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::vector<BenchExample> Fixture::All() const {
  std::vector<BenchExample> out = entity_split;
  out.insert(out.end(), domain_split.begin(), domain_split.end());
  return out;
}

Fixture GenerateFixture(const FixtureConfig& config) {
  config.Validate();
  Rng rng(config.seed);
  Fixture fixture;
  const std::vector<std::string> types = config.entity_types.empty()
                                             ? spanforge::CanonicalLabels()
                                             : config.entity_types;
  for (const auto& label : types) {
    const auto& templates = lx::EntityTemplates(label);
    for (int i = 0; i < config.per_entity_type; ++i) {
      const lx::Template& t = rng.Choice(templates);
      Built b;
      Fill(b, t.text, rng);
      MaybePad(b, t.domain, rng, 35);
      fixture.entity_split.push_back(
          ToExample(Numbered("ent-" + label, i), t.domain, std::move(b)));
    }
  }
  for (const auto& q : config.domains) {
    std::vector<bool> pii(q.count, false);
    std::fill(pii.begin(), pii.begin() + q.with_pii, true);
    rng.Shuffle(pii);
    for (int i = 0; i < q.count; ++i) {
      Built b;
      if (pii[i]) {
        Fill(b, rng.Choice(lx::DomainPiiTemplates(q.domain)), rng);
        MaybePad(b, q.domain, rng, 70);
      } else {
        Fill(b, rng.Choice(lx::DomainCleanTemplates(q.domain)), rng);
        MaybePad(b, q.domain, rng, 60);
      }
      fixture.domain_split.push_back(
          ToExample(Numbered("dom-" + q.domain, i), q.domain, std::move(b)));
    }
  }
  return fixture;
}

std::vector<FragmentCase> GenerateAddressFragmentSuite(uint64_t seed, int count) {
  Rng rng(seed);
  const auto& templates = lx::EntityTemplates("ADDRESS");
  std::vector<FragmentCase> out;
  for (int i = 0; i < count; ++i) {
    const lx::Template& t = rng.Choice(templates);
    Built b;
    Fill(b, t.text, rng);
    std::vector<Span> fragments = b.fragments;
    out.push_back({ToExample(Numbered("addr", i), t.domain, std::move(b)),
                   std::move(fragments)});
  }
  return out;
}

}  // namespace guardgate::evalkit
