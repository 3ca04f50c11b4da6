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

#ifndef GUARDGATE_RULEPII_VALIDATORS_H_
#define GUARDGATE_RULEPII_VALIDATORS_H_

#include <optional>
#include <string>
#include <string_view>

namespace guardgate::rulepii {

// Check-digit validators. Every function takes an ASCII digit string and
// returns false for wrong length or non-digit input.

// Luhn mod-10, for 13..19 digit card numbers.
bool ValidateCardLuhn(std::string_view digits);
// Taxpayer ID, 10 digits (legal entity) or 12 digits (individual).
bool ValidateInn(std::string_view digits);
// Social insurance number, 11 digits: 9 body digits plus a 2-digit checksum.
bool ValidateSnils(std::string_view digits);
// State registration number, 13 digits.
bool ValidateOgrn(std::string_view digits);
// Entrepreneur registration number, 15 digits.
bool ValidateOgrnip(std::string_view digits);
// Tax registration reason code: NNNN XX NNN where X is a digit or A-Z.
// There is no checksum.
bool ValidateKppFormat(std::string_view text);

// Check-digit computations, shared by the validators and the fixture
// generator. Inputs are the leading digits without the check part.
int LuhnCheckDigit(std::string_view body);
int Inn10CheckDigit(std::string_view first9);
// Returns the two trailing digits for a 12-digit INN as a number 0..99.
int Inn12CheckDigits(std::string_view first10);
int SnilsChecksum(std::string_view first9);
int OgrnCheckDigit(std::string_view first12);
int OgrnipCheckDigit(std::string_view first14);

// Canonical "+7XXXXXXXXXX" for Russian phone numbers written with an
// optional "+7" or "8" prefix and space/dash/dot/parenthesis separators.
// Returns nullopt if the input is not RU-shaped.
std::optional<std::string> NormalizePhone(std::string_view raw);

// Shannon entropy in bits per character, counted over code points.
double ShannonEntropy(std::u32string_view text);

// Keeps only ASCII digits.
std::string DigitsOnly(std::string_view text);

}  // namespace guardgate::rulepii

#endif  // GUARDGATE_RULEPII_VALIDATORS_H_
