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

#ifndef GUARDGATE_SRC_EVALKIT_LEXICON_H_
#define GUARDGATE_SRC_EVALKIT_LEXICON_H_

#include <array>
#include <string>
#include <vector>

namespace guardgate::evalkit::lexicon {

// Grammatical case of a generated name.
enum Case { kNominative = 0, kGenitive = 1, kDative = 2 };

struct Declined {
  std::array<std::string, 3> forms;  // indexed by Case
};

struct NameLexicon {
  std::vector<std::string> male_surnames;  // -ов/-ев/-ин stems
  std::vector<Declined> male_first;
  std::vector<Declined> female_first;
  std::vector<std::string> patronymic_stems;  // Иванов -> Иванович/Ивановна
};

const NameLexicon& Names();

struct AddressLexicon {
  std::vector<std::string> cities;
  std::vector<std::string> regions;
  std::vector<std::string> streets;
  std::vector<std::string> street_types;
};

const AddressLexicon& Addresses();

// Latin logins for e-mail addresses.
const std::vector<std::string>& Logins();
const std::vector<std::string>& MailDomains();

// A sentence with slots such as {NAME}, {NAME:gen}, {PHONE_NUMBER}.
struct Template {
  std::string domain;
  std::string text;
};

// Entity-split templates for one canonical label; each has exactly one slot.
const std::vector<Template>& EntityTemplates(const std::string& label);

// Domain-split templates: with at least one slot, and slot-free.
const std::vector<std::string>& DomainPiiTemplates(const std::string& domain);
const std::vector<std::string>& DomainCleanTemplates(const std::string& domain);

}  // namespace guardgate::evalkit::lexicon

#endif  // GUARDGATE_SRC_EVALKIT_LEXICON_H_
